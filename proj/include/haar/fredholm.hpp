#pragma once
/*
 * Truncated-Hankel Fredholm determinants.
 *
 * For a symbol c with Fourier coefficients c_l, the Hankel operator H(c) has
 * matrix (c_{j+k+1})_{j,k≥0}.  Shifting the symbol by a power of the circle
 * variable only re-indexes the coefficients, so a prefactor e^{-ipθ} is
 * represented here by an integer shift p: the operator entries become
 * d_{j+k+1} with d_l = c_{l+p}.  Q_p denotes the coordinate projection onto
 * indices ≥ p.
 *
 * fredholm_det_truncated evaluates det(1 + sign·Q H Q) restricted to an M×M
 * block, growing M until two successive determinants agree (the coefficients
 * here decay super-exponentially, so convergence is fast), and attaches the
 * tail mass Σ|d_l| left outside the block.
 *
 * verify_basor_ehrhardt checks the exponential identity linking the q×q
 * Toeplitz+Hankel (Gram) determinant of a = exp(b₊ + b̃₊) to a Fredholm
 * determinant of the ratio symbol a₊^{-1}ã₊ = exp(b̃₊ − b₊):
 *
 *   case 1 (-,+):  det_G = exp(+Σ_{odd} β_k + ½Σ k β_k²)·det(1 + Q_q H(c) Q_q)
 *   case 2 (+,-):  det_G = exp(−Σ_{odd} β_k + ½Σ k β_k²)·det(1 − Q_q H(c) Q_q)
 *   case 3 (+,+):  det_G = exp(−Σ_{even} β_k + ½Σ k β_k²)·det(1 − Q_q H(c·t⁻¹) Q_q)
 *   case 4 (-,-):  det_G = exp(+Σ_{even} β_k + ½Σ k β_k²)·det(1 + Q_q H(c·t) Q_q)
 *
 * with β_k the coefficients of b₊ and t-powers realized as index shifts ±1.
 *
 * char_fn_fredholm evaluates the characteristic function of the normalized
 * trace vector as e^{-‖ξ‖²/2}·det(1 + sign·H(e^{2 Im g₊}, shift)) with
 *   (-,+): shift 2q, +      (+,-): shift 2q, −
 *   (+,+): shift 2q+1, −    (-,-): shift 2q−1, +       (q = density index),
 * which agrees with char_fn_det to truncation accuracy for every ensemble.
 */

#include <complex>

#include "haar/groups.hpp"
#include "haar/symbols.hpp"

namespace haar {

struct HankelOp {
    FourierTable base;   // coefficients c_l of the base symbol
    int shift = 0;       // effective coefficients d_l = c_{l+shift}
    int sign = +1;       // determinant uses 1 + sign·H
    int projection = 0;  // Q_p: indices start at p

    std::complex<double> d(int l) const { return base.coeff(l + shift); }
};

struct FredholmResult {
    std::complex<double> value{1.0, 0.0};  // det at the final block size
    std::complex<double> prev_value{1.0, 0.0};  // det at the previous block size
    double tail = 0.0;                     // Σ|d_l| beyond the final block
    int block = 0;                         // final M
    bool converged = false;
};

// det(1 + sign·Q H Q) on an M×M block.  block_size = 0 starts at 8 and
// doubles until |Δdet| ≤ tol or the cap / table coverage is reached; a fixed
// block_size does a single evaluation (marked converged).
FredholmResult fredholm_det_truncated(const HankelOp& op, int block_size = 0,
                                      double tol = 1e-11, int cap = 2048);

struct BasorEhrhardtResult {
    std::complex<double> left;   // Gram determinant of exp(b₊ + b̃₊)
    std::complex<double> right;  // exponential factor × Fredholm determinant
    double residual;             // |left − right| / max(|left|, |right|)
};

// bplus holds β_1..β_d (d ≤ 6, |β_k| ≤ 1), the e^{ikθ} coefficients of b₊.
BasorEhrhardtResult verify_basor_ehrhardt(int which_case,
                                          std::span<const std::complex<double>> bplus,
                                          int n);

// Characteristic function of the trace vector via the Fredholm route.
std::complex<double> char_fn_fredholm(const GroupSpec& spec, std::span<const double> xi);

struct OperatorDiagnostics {
    std::complex<double> trace;  // Σ_{j=p}^{p+M-1} d_{2j+1}
    double hs_norm;              // Frobenius norm of the M×M block
    double trace_tail;           // Σ|d_{2j+1}| over table indices beyond the block
    double hs_tail;              // √(full-projection HS² − block HS²) over the table
};

OperatorDiagnostics operator_diagnostics(const HankelOp& op, int block_size);

}  // namespace haar
