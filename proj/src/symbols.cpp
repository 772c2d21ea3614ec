#include "haar/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace haar {

namespace {
constexpr double two_pi = 6.28318530717958647692;
}

int TrigPoly::degree() const {
    int d = static_cast<int>(cos_coeffs.size()) - 1;
    while (d > 0 && cos_coeffs[d] == 0.0 && sin_coeffs[d] == 0.0) --d;
    return d < 0 ? 0 : d;
}

double TrigPoly::operator()(double theta) const {
    double v = cos_coeffs.empty() ? 0.0 : cos_coeffs[0];
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
        v += cos_coeffs[k] * std::cos(k * theta) + sin_coeffs[k] * std::sin(k * theta);
    return v;
}

std::complex<double> TrigPoly::operator()(std::complex<double> theta) const {
    if (std::abs(theta.imag()) > 2.0)
        throw std::domain_error("TrigPoly: |Im theta| > 2 not supported");
    std::complex<double> v = cos_coeffs.empty() ? 0.0 : cos_coeffs[0];
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k) {
        const std::complex<double> kt = double(k) * theta;
        v += cos_coeffs[k] * std::cos(kt) + sin_coeffs[k] * std::sin(kt);
    }
    return v;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly d;
    d.cos_coeffs.assign(cos_coeffs.size(), 0.0);
    d.sin_coeffs.assign(cos_coeffs.size(), 0.0);
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k) {
        d.cos_coeffs[k] = k * sin_coeffs[k];
        d.sin_coeffs[k] = -double(k) * cos_coeffs[k];
    }
    return d;
}

double TrigPoly::l2_norm() const {
    double s = cos_coeffs.empty() ? 0.0 : cos_coeffs[0] * cos_coeffs[0];
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
        s += 0.5 * (cos_coeffs[k] * cos_coeffs[k] + sin_coeffs[k] * sin_coeffs[k]);
    return std::sqrt(s);
}

double chebyshev_T(int k, double x) {
    if (k < 0) throw std::invalid_argument("chebyshev_T: negative order");
    if (k == 0) return 1.0;
    double tm = 1.0, t = x;
    for (int j = 2; j <= k; ++j) {
        const double tn = 2.0 * x * t - tm;
        tm = t;
        t = tn;
    }
    return t;
}

TestFunction build_test_function(const GroupSpec& spec, std::vector<double> xi) {
    const int m = static_cast<int>(xi.size());
    if (m < 1) throw std::invalid_argument("build_test_function: need at least one coefficient");
    TestFunction tf;
    tf.spec = spec;
    tf.xi = std::move(xi);
    tf.g.cos_coeffs.assign(m + 1, 0.0);
    tf.g.sin_coeffs.assign(m + 1, 0.0);
    tf.gplus.assign(m + 1, {0.0, 0.0});

    const int q = spec.num_angles;
    double c0 = 0.0, nrm2 = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double w = tf.xi[k - 1] / std::sqrt(double(k));
        tf.g.cos_coeffs[k] = 2.0 * w;
        tf.gplus[k] = w;
        c0 -= w * mean_trace(spec, k) / q;
        nrm2 += tf.xi[k - 1] * tf.xi[k - 1];
    }
    tf.g.cos_coeffs[0] = c0;
    tf.gplus[0] = c0 / 2.0;
    tf.xi_norm = std::sqrt(nrm2);
    tf.rho = std::sqrt(std::log(double(m)) + 1.0) * tf.xi_norm;
    return tf;
}

double TestFunction::im_gplus(double theta) const {
    double v = 0.0;
    for (std::size_t k = 1; k < gplus.size(); ++k) v += gplus[k].real() * std::sin(k * theta);
    return v;
}

std::complex<double> TestFunction::gplus_value(double theta) const {
    std::complex<double> v = gplus.empty() ? 0.0 : gplus[0];
    for (std::size_t k = 1; k < gplus.size(); ++k)
        v += gplus[k] * std::polar(1.0, k * theta);
    return v;
}

TrigPoly hilbert_transform(const TestFunction& tf) {
    const int m = static_cast<int>(tf.xi.size());
    TrigPoly h;
    h.cos_coeffs.assign(m + 1, 0.0);
    h.sin_coeffs.assign(m + 1, 0.0);
    for (int k = 1; k <= m; ++k) h.sin_coeffs[k] = 2.0 * tf.xi[k - 1] / std::sqrt(double(k));
    return h;
}

namespace {

// One trapezoidal pass: c_k = (1/G) Σ_j f(θ_j) e^{-ikθ_j}.  The twiddle
// e^{-ikθ_j} is advanced by recurrence and re-anchored periodically so the
// phase drift stays below ~1e-14 even for large K·G.
FourierTable fourier_pass(const std::function<std::complex<double>(double)>& symbol,
                          int K, int G) {
    FourierTable t;
    t.truncation = K;
    t.grid_points = G;
    t.c.assign(2 * K + 1, {0.0, 0.0});
    for (int j = 0; j < G; ++j) {
        const double th = two_pi * j / G;
        const std::complex<double> fj = symbol(th);
        if (!std::isfinite(fj.real()) || !std::isfinite(fj.imag()))
            throw std::domain_error("fourier_coeffs: symbol returned a non-finite value");
        const std::complex<double> step = std::polar(1.0, -th);
        std::complex<double> tw = std::polar(1.0, double(K) * th);  // k = -K
        for (int k = -K; k <= K; ++k) {
            if ((k + K) % 128 == 0) tw = std::polar(1.0, -double(k) * th);
            t.c[static_cast<std::size_t>(k + K)] += fj * tw;
            tw *= step;
        }
    }
    const double inv = 1.0 / G;
    for (auto& v : t.c) v *= inv;
    return t;
}

int next_pow2(int v) {
    int p = 1;
    while (p < v) p *= 2;
    return p;
}

}  // namespace

FourierTable fourier_coeffs(const std::function<std::complex<double>(double)>& symbol,
                            int truncation, int grid_points) {
    if (truncation < 0) throw std::invalid_argument("fourier_coeffs: negative truncation");
    const int K = truncation;
    if (grid_points > 0) {
        if (grid_points < 8 * (K + 1))
            throw std::invalid_argument("fourier_coeffs: grid must be >= 8*(K+1) points");
        return fourier_pass(symbol, K, grid_points);
    }
    int G = next_pow2(std::max(8 * (K + 1), 64));
    FourierTable cur = fourier_pass(symbol, K, G);
    constexpr int max_grid = 1 << 20;
    while (G < max_grid) {
        G *= 2;
        FourierTable next = fourier_pass(symbol, K, G);
        double diff = 0.0;
        for (std::size_t i = 0; i < cur.c.size(); ++i)
            diff = std::max(diff, std::abs(next.c[i] - cur.c[i]));
        cur = std::move(next);
        if (diff < 1e-12) return cur;
    }
    throw std::runtime_error("fourier_coeffs: grid doubling did not certify to 1e-12");
}

int default_truncation(int m, double rho, int q) {
    const int kr = static_cast<int>(std::ceil(rho));
    return std::max(64, 4 * m * kr + 2 * q + 2);
}

}  // namespace haar
