#pragma once
/*
 * Toeplitz+Hankel determinant identities for multiplicative averages.
 *
 * For a symbol ψ on [-1,1] with circle transform φ(θ) = ψ(cos θ) and Fourier
 * coefficients φ̂_k, the Haar average of ∏_j ψ(cos θ_j) over the q free
 * eigenangle pairs equals a q×q determinant whose entries mix Toeplitz and
 * Hankel parts.  With (a,b) the Jacobi exponent pair of the ensemble:
 *
 *   (-,+): det[ φ̂_{j-k} + φ̂_{j+k+1} ]
 *   (+,-): det[ φ̂_{j-k} − φ̂_{j+k+1} ]
 *   (+,+): det[ φ̂_{j-k} − φ̂_{j+k+2} ]
 *   (-,-): det[ φ̂_{j-k} + φ̂_{j+k}   ]      (raw form; indices 0..q-1)
 *
 * The raw (-,-) determinant equals exactly TWICE the Haar average: conjugating
 * by diag(1/√2, 1, ..., 1) produces the orthonormal-basis Gram matrix
 *   α_00 = φ̂_0,  α_{0j} = α_{j0} = √2 φ̂_j,  α_{jk} = φ̂_{j-k} + φ̂_{j+k},
 * whose determinant is the average itself.  expectation_gram always returns
 * the Gram (expectation) normalization; toeplitz_hankel_det returns the raw
 * printed form.
 *
 * char_fn_det specializes ψ = e^{ig} for a test function g and yields the
 * characteristic function E[e^{i Σ ξ_k X_k}] of the normalized trace vector.
 *
 * Determinants are evaluated by complex partial-pivot LU and reported in a
 * log-scaled form (log-magnitude plus unit phase) so that very large or very
 * small values survive; a crude diagonal-ratio condition proxy is attached.
 */

#include <complex>

#include <Eigen/Dense>

#include "haar/groups.hpp"
#include "haar/symbols.hpp"

namespace haar {

enum class JacobiVariant { minus_plus, plus_minus, plus_plus, minus_minus };

JacobiVariant variant_of(const GroupSpec& spec);
const char* variant_name(JacobiVariant v);

struct ScaledDet {
    double log_abs = 0.0;                  // log|det| (-inf for a exactly singular pivot)
    std::complex<double> phase = 1.0;      // det / |det|
    double cond_proxy = 1.0;               // max|u_ii| / min|u_ii| from the LU diagonal

    std::complex<double> value() const;
    bool ill_conditioned() const { return cond_proxy > 1e12; }
};

// Log-scaled determinant of a general complex matrix (partial-pivot LU).
ScaledDet scaled_det(Eigen::MatrixXcd mat);

// Raw Toeplitz+Hankel determinant of the given size for one of the four
// variants.  Requires table.truncation >= 2*size + 2.
ScaledDet toeplitz_hankel_det(JacobiVariant variant, const FourierTable& table, int size);

// Haar-average (Gram-normalized) determinant for the ensemble of `spec`;
// differs from the raw form only in the (-,-) variant (by the factor 2).
ScaledDet expectation_gram(const GroupSpec& spec, const FourierTable& table);

// Builds the Gram matrix itself (size q); exposed for reuse by the moment and
// Fredholm cross-checks.
Eigen::MatrixXcd gram_matrix(JacobiVariant variant, const FourierTable& table, int size);

// Characteristic function of the normalized trace vector at ξ via the
// determinant route.  |result| ≤ 1 + truncation noise.
std::complex<double> char_fn_det(const GroupSpec& spec, std::span<const double> xi);

}  // namespace haar
