#include "haar/detform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace haar {

JacobiVariant variant_of(const GroupSpec& spec) {
    if (spec.a < 0.0 && spec.b < 0.0) return JacobiVariant::minus_minus;
    if (spec.a > 0.0 && spec.b > 0.0) return JacobiVariant::plus_plus;
    if (spec.a < 0.0) return JacobiVariant::minus_plus;
    return JacobiVariant::plus_minus;
}

const char* variant_name(JacobiVariant v) {
    switch (v) {
        case JacobiVariant::minus_plus: return "(-,+)";
        case JacobiVariant::plus_minus: return "(+,-)";
        case JacobiVariant::plus_plus: return "(+,+)";
        case JacobiVariant::minus_minus: return "(-,-)";
    }
    return "?";
}

std::complex<double> ScaledDet::value() const {
    if (log_abs == -std::numeric_limits<double>::infinity()) return {0.0, 0.0};
    return std::exp(log_abs) * phase;
}

ScaledDet scaled_det(Eigen::MatrixXcd mat) {
    const Eigen::Index n = mat.rows();
    if (n != mat.cols()) throw std::invalid_argument("scaled_det: matrix must be square");
    ScaledDet r;
    if (n == 0) return r;  // det of the empty matrix is 1

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(std::move(mat));
    const auto diag = lu.matrixLU().diagonal();
    double log_abs = 0.0, dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
    std::complex<double> phase = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double a = std::abs(diag[i]);
        if (a == 0.0) {
            r.log_abs = -std::numeric_limits<double>::infinity();
            r.phase = 0.0;
            r.cond_proxy = std::numeric_limits<double>::infinity();
            return r;
        }
        log_abs += std::log(a);
        phase *= diag[i] / a;
        dmin = std::min(dmin, a);
        dmax = std::max(dmax, a);
    }
    const int perm_sign = static_cast<int>(lu.permutationP().determinant());
    r.log_abs = log_abs;
    r.phase = phase * double(perm_sign);
    r.cond_proxy = dmax / dmin;
    return r;
}

namespace {

std::complex<double> th_entry(JacobiVariant v, const FourierTable& t, int j, int k) {
    switch (v) {
        case JacobiVariant::minus_plus: return t.coeff(j - k) + t.coeff(j + k + 1);
        case JacobiVariant::plus_minus: return t.coeff(j - k) - t.coeff(j + k + 1);
        case JacobiVariant::plus_plus: return t.coeff(j - k) - t.coeff(j + k + 2);
        case JacobiVariant::minus_minus: return t.coeff(j - k) + t.coeff(j + k);
    }
    return {};
}

void check_truncation(const FourierTable& table, int size) {
    if (size < 1) throw std::invalid_argument("determinant size must be >= 1");
    if (table.truncation < 2 * size + 2)
        throw std::invalid_argument("Fourier table truncation must be >= 2*size + 2");
}

}  // namespace

ScaledDet toeplitz_hankel_det(JacobiVariant variant, const FourierTable& table, int size) {
    check_truncation(table, size);
    Eigen::MatrixXcd m(size, size);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k) m(j, k) = th_entry(variant, table, j, k);
    return scaled_det(std::move(m));
}

Eigen::MatrixXcd gram_matrix(JacobiVariant variant, const FourierTable& table, int size) {
    check_truncation(table, size);
    Eigen::MatrixXcd m(size, size);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k) m(j, k) = th_entry(variant, table, j, k);
    if (variant == JacobiVariant::minus_minus) {
        const double rt2 = std::sqrt(2.0);
        m(0, 0) = table.coeff(0);
        for (int j = 1; j < size; ++j) {
            m(0, j) = rt2 * table.coeff(j);
            m(j, 0) = rt2 * table.coeff(j);
        }
    }
    return m;
}

ScaledDet expectation_gram(const GroupSpec& spec, const FourierTable& table) {
    return scaled_det(gram_matrix(variant_of(spec), table, spec.num_angles));
}

std::complex<double> char_fn_det(const GroupSpec& spec, std::span<const double> xi) {
    const TestFunction tf = build_test_function(spec, {xi.begin(), xi.end()});
    const int K = default_truncation(static_cast<int>(xi.size()), tf.rho, spec.num_angles);
    const TrigPoly& g = tf.g;
    const FourierTable table = fourier_coeffs(
        [&g](double th) {
            return std::polar(1.0, g(th));  // e^{i g(θ)}, unimodular
        },
        K);
    return expectation_gram(spec, table).value();
}

}  // namespace haar
