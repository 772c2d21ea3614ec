#include "haar/fredholm.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "haar/detform.hpp"

namespace haar {

namespace {

std::complex<double> block_det(const HankelOp& op, int M) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(M, M);
    const int p = op.projection;
    for (int j = 0; j < M; ++j)
        for (int k = 0; k < M; ++k)
            a(j, k) += double(op.sign) * op.d((p + j) + (p + k) + 1);
    return scaled_det(std::move(a)).value();
}

// Largest l with d_l inside the stored table.
int max_index(const HankelOp& op) { return op.base.truncation - op.shift; }

double tail_mass(const HankelOp& op, int M) {
    double s = 0.0;
    for (int l = 2 * (op.projection + M); l <= max_index(op); ++l) s += std::abs(op.d(l));
    return s;
}

}  // namespace

FredholmResult fredholm_det_truncated(const HankelOp& op, int block_size, double tol, int cap) {
    FredholmResult r;
    if (block_size > 0) {
        r.block = block_size;
        r.value = r.prev_value = block_det(op, block_size);
        r.tail = tail_mass(op, block_size);
        r.converged = true;
        return r;
    }
    // The block only sees coefficients up to index 2(p+M)-1; growing M past
    // the stored table adds identity rows, so cap there.
    const int coverage = std::max(1, (max_index(op) + 1) / 2 - op.projection);
    const int m_cap = std::min(cap, coverage);
    int M = std::min(8, m_cap);
    std::complex<double> prev = block_det(op, M);
    while (M < m_cap) {
        const int next_m = std::min(2 * M, m_cap);
        const std::complex<double> cur = block_det(op, next_m);
        if (std::abs(cur - prev) <= tol) {
            r.value = cur;
            r.prev_value = prev;
            r.block = next_m;
            r.tail = tail_mass(op, next_m);
            r.converged = true;
            return r;
        }
        prev = cur;
        M = next_m;
    }
    // One more comparison at the cap against a slightly smaller block.
    const int probe = std::max(1, M - std::max(1, M / 8));
    const std::complex<double> probe_det = block_det(op, probe);
    r.value = prev;
    r.prev_value = probe_det;
    r.block = M;
    r.tail = tail_mass(op, M);
    r.converged = std::abs(prev - probe_det) <= tol;
    return r;
}

namespace {

struct VariantOp {
    int shift;
    int sign;
};

VariantOp variant_op(JacobiVariant v, int q) {
    switch (v) {
        case JacobiVariant::minus_plus: return {2 * q, +1};
        case JacobiVariant::plus_minus: return {2 * q, -1};
        case JacobiVariant::plus_plus: return {2 * q + 1, -1};
        case JacobiVariant::minus_minus: return {2 * q - 1, +1};
    }
    return {0, +1};
}

}  // namespace

BasorEhrhardtResult verify_basor_ehrhardt(int which_case,
                                          std::span<const std::complex<double>> bplus,
                                          int n) {
    if (which_case < 1 || which_case > 4)
        throw std::invalid_argument("verify_basor_ehrhardt: case must be 1..4");
    if (n < 1) throw std::invalid_argument("verify_basor_ehrhardt: n must be >= 1");
    const int deg = static_cast<int>(bplus.size());
    if (deg > 6) throw std::invalid_argument("verify_basor_ehrhardt: degree must be <= 6");
    for (const auto& b : bplus)
        if (std::abs(b) > 1.0)
            throw std::invalid_argument("verify_basor_ehrhardt: coefficients must have |b| <= 1");

    const JacobiVariant variant = static_cast<JacobiVariant>(
        which_case == 1   ? static_cast<int>(JacobiVariant::minus_plus)
        : which_case == 2 ? static_cast<int>(JacobiVariant::plus_minus)
        : which_case == 3 ? static_cast<int>(JacobiVariant::plus_plus)
                          : static_cast<int>(JacobiVariant::minus_minus));

    // Left side: Gram determinant of the even symbol a = exp(b₊ + b̃₊).
    const auto a_symbol = [&](double th) {
        std::complex<double> s = 0.0;
        for (int k = 1; k <= deg; ++k)
            s += bplus[k - 1] * (std::polar(1.0, k * th) + std::polar(1.0, -k * th));
        return std::exp(s);
    };
    const FourierTable a_table = fourier_coeffs(a_symbol, 2 * n + 2 + 2 * deg);
    const std::complex<double> left = scaled_det(gram_matrix(variant, a_table, n)).value();

    // Exponential factor: ±Σ over odd/even β plus the quadratic term.
    std::complex<double> parity_sum = 0.0, quad = 0.0;
    for (int k = 1; k <= deg; ++k) {
        const bool odd = (k % 2 == 1);
        const bool wanted = (which_case <= 2) ? odd : !odd;
        if (wanted) parity_sum += bplus[k - 1];
        quad += 0.5 * double(k) * bplus[k - 1] * bplus[k - 1];
    }
    const double parity_sign = (which_case == 1 || which_case == 4) ? +1.0 : -1.0;
    const std::complex<double> efac = std::exp(parity_sign * parity_sum + quad);

    // Fredholm side: ratio symbol c = a₊^{-1}ã₊ = exp(b̃₊ − b₊), index-shifted
    // by ∓1 for the t^{∓1} prefactor of cases 3 and 4.
    const auto c_symbol = [&](double th) {
        std::complex<double> s = 0.0;
        for (int k = 1; k <= deg; ++k)
            s += bplus[k - 1] * (std::polar(1.0, -k * th) - std::polar(1.0, k * th));
        return std::exp(s);
    };
    const int shift = (which_case == 3) ? +1 : (which_case == 4) ? -1 : 0;
    const int sign = (which_case == 1 || which_case == 4) ? +1 : -1;
    const int m_cap = 96;
    HankelOp op{fourier_coeffs(c_symbol, 2 * n + shift + 2 * m_cap + 2), shift, sign, n};
    const FredholmResult f = fredholm_det_truncated(op);
    if (!f.converged)
        throw std::runtime_error("verify_basor_ehrhardt: Fredholm block did not converge");

    BasorEhrhardtResult r;
    r.left = left;
    r.right = efac * f.value;
    const double scale = std::max({std::abs(r.left), std::abs(r.right), 1e-300});
    r.residual = std::abs(r.left - r.right) / scale;
    return r;
}

std::complex<double> char_fn_fredholm(const GroupSpec& spec, std::span<const double> xi) {
    const TestFunction tf = build_test_function(spec, {xi.begin(), xi.end()});
    const int q = spec.num_angles;
    const VariantOp vo = variant_op(variant_of(spec), q);

    // Block sizes needed in practice are tiny (coefficients die past ~2mρ),
    // but size the table for a comfortable cap.
    const int m_cap = std::max(64, static_cast<int>(std::ceil(
                                       double(tf.xi.size()) * (tf.rho + 6.0))));
    const int K = vo.shift + 2 * m_cap + 2;
    const FourierTable base = fourier_coeffs(
        [&tf](double th) {
            return std::complex<double>(std::exp(2.0 * tf.im_gplus(th)), 0.0);
        },
        K);
    HankelOp op{base, vo.shift, vo.sign, 0};
    const FredholmResult f = fredholm_det_truncated(op);
    if (!f.converged)
        throw std::runtime_error("char_fn_fredholm: Fredholm block did not converge");
    return std::exp(-0.5 * tf.xi_norm * tf.xi_norm) * f.value;
}

OperatorDiagnostics operator_diagnostics(const HankelOp& op, int block_size) {
    if (block_size < 1) throw std::invalid_argument("operator_diagnostics: block must be >= 1");
    OperatorDiagnostics g{};
    const int p = op.projection;
    for (int j = 0; j < block_size; ++j) g.trace += op.d(2 * (p + j) + 1);

    double hs2 = 0.0;
    for (int j = 0; j < block_size; ++j)
        for (int k = 0; k < block_size; ++k) {
            const double a = std::abs(op.d((p + j) + (p + k) + 1));
            hs2 += a * a;
        }
    g.hs_norm = std::sqrt(hs2);

    double ttail = 0.0;
    for (int j = block_size; 2 * (p + j) + 1 <= max_index(op); ++j)
        ttail += std::abs(op.d(2 * (p + j) + 1));
    g.trace_tail = ttail;

    // Full projected HS² over the table: antidiagonal l = j+k+1 with j,k ≥ p
    // contributes (l − 2p) copies of |d_l|².
    double full2 = 0.0;
    for (int l = 2 * p + 1; l <= max_index(op); ++l) {
        const double a = std::abs(op.d(l));
        full2 += double(l - 2 * p) * a * a;
    }
    g.hs_tail = std::sqrt(std::max(0.0, full2 - hs2));
    return g;
}

}  // namespace haar
