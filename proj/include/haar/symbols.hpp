#pragma once
/*
 * Trigonometric test functions and Fourier symbols.
 *
 * A linear statistic of the eigenangles is encoded by
 *
 *   g(θ) = Σ_{k=1}^m (ξ_k/√k) (2 cos kθ − μ_k/q),
 *
 * where μ_k = mean_trace(spec, k) and q = spec.num_angles, so that
 * Σ_j g(θ_j) = Σ_k ξ_k X_k with X_k = (Tr U^k − E Tr U^k)/√k the normalized
 * trace fluctuations.  The analytic projection g₊ keeps the e^{ikθ}, k ≥ 1
 * modes plus half the constant; its imaginary part on the circle is
 * Im g₊(θ) = Σ_k (ξ_k/√k) sin kθ, and e^{2 Im g₊} is the (real, positive)
 * symbol whose Hankel coefficients drive the Fredholm determinant route.
 * The trigonometric conjugate h(θ) = Σ_k (2 ξ_k/√k) sin kθ is exposed for
 * the pointwise level-set machinery.
 *
 * Fourier coefficients use the convention ĉ_k = (1/2π)∫_0^{2π} c(θ)e^{-ikθ}dθ
 * and are computed with uniform-grid (trapezoidal) quadrature, which is
 * spectrally accurate for the entire symbols used here.  With grid_points = 0
 * the grid starts at max(8·(K+1), 64) rounded to a power of two and doubles
 * until two successive tables agree within 1e-12 in every coefficient.
 */

#include <complex>
#include <functional>
#include <vector>

#include "haar/groups.hpp"

namespace haar {

struct TrigPoly {
    // value(θ) = cos_coeffs[0] + Σ_{k≥1} cos_coeffs[k] cos kθ + sin_coeffs[k] sin kθ
    std::vector<double> cos_coeffs;  // degree+1 entries
    std::vector<double> sin_coeffs;  // same length; entry 0 unused (kept 0)

    int degree() const;
    double operator()(double theta) const;
    // Evaluation at θ + it; throws std::domain_error when |t| > 2 (the
    // hyperbolic factors would overflow double well before that matters).
    std::complex<double> operator()(std::complex<double> theta) const;
    TrigPoly derivative() const;
    // √( (1/2π) ∫_0^{2π} p(θ)^2 dθ ) — the normalized L2 norm.
    double l2_norm() const;
};

struct FourierTable {
    int truncation = 0;                   // K: indices -K..K are stored
    std::vector<std::complex<double>> c;  // c[k + K], size 2K+1
    int grid_points = 0;                  // quadrature grid that produced it

    std::complex<double> coeff(int k) const {
        if (k < -truncation || k > truncation) return {0.0, 0.0};
        return c[static_cast<std::size_t>(k + truncation)];
    }
};

struct TestFunction {
    GroupSpec spec;
    std::vector<double> xi;                   // ξ_1..ξ_m
    TrigPoly g;                               // the statistic above
    std::vector<std::complex<double>> gplus;  // coeffs of g₊, indices 0..m
    double xi_norm = 0.0;                     // ‖ξ‖
    double rho = 0.0;                         // √(log m + 1)·‖ξ‖

    // Im g₊(θ) = Σ_k (ξ_k/√k) sin kθ  (the constant is real and drops out).
    double im_gplus(double theta) const;
    std::complex<double> gplus_value(double theta) const;
};

// Chebyshev polynomial of the first kind by the stable three-term recurrence;
// T_k(cos θ) = cos kθ.
double chebyshev_T(int k, double x);

// Builds g, g₊ and ρ for the given coefficient vector (m = xi.size() ≥ 1).
TestFunction build_test_function(const GroupSpec& spec, std::vector<double> xi);

// Trigonometric conjugate h(θ) = Σ_k (2 ξ_k/√k) sin kθ of the cosine part of g.
TrigPoly hilbert_transform(const TestFunction& tf);

// Fourier coefficients -K..K of an arbitrary circle function.  grid_points = 0
// requests the auto-doubling grid described above; an explicit grid must be
// ≥ 8·(K+1).  Non-finite symbol values raise std::domain_error.
FourierTable fourier_coeffs(const std::function<std::complex<double>(double)>& symbol,
                            int truncation, int grid_points = 0);

// Default symbol truncation for a test function on a density-index-q ensemble:
// max(64, 4·m·⌈ρ⌉ + 2q + 2), generous for the super-exponential tails here.
int default_truncation(int m, double rho, int q);

}  // namespace haar
