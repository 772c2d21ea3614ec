#include "haar/groups.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace haar {

GroupSpec group_spec(GroupKind kind, int n) {
    switch (kind) {
        case GroupKind::o_even_plus:
            if (n < 1) throw std::invalid_argument("o-even-plus requires n >= 1");
            return {kind, n, -0.5, -0.5, n, {}, 2 * n};
        case GroupKind::o_even_minus:
            // O(2)^- consists of reflections only: both eigenvalues are pinned
            // and there is no free angle, so the smallest valid index is 2.
            if (n < 2) throw std::invalid_argument("o-even-minus requires n >= 2");
            return {kind, n, 0.5, 0.5, n - 1, {+1, -1}, 2 * n};
        case GroupKind::o_odd_plus:
            if (n < 1) throw std::invalid_argument("o-odd-plus requires n >= 1");
            return {kind, n, 0.5, -0.5, n, {+1}, 2 * n + 1};
        case GroupKind::o_odd_minus:
            if (n < 1) throw std::invalid_argument("o-odd-minus requires n >= 1");
            return {kind, n, -0.5, 0.5, n, {-1}, 2 * n + 1};
        case GroupKind::sp:
            if (n < 1) throw std::invalid_argument("sp requires n >= 1");
            return {kind, n, 0.5, 0.5, n, {}, 2 * n};
    }
    throw std::invalid_argument("unknown group kind");
}

int eta(int j) { return (j % 2 == 0) ? 1 : 0; }

double mean_trace(const GroupSpec& spec, int k, bool include_deterministic) {
    if (k < 1) throw std::invalid_argument("mean_trace requires k >= 1");
    double mu = 0.0;
    switch (spec.kind) {
        case GroupKind::o_even_plus: mu = eta(k); break;
        case GroupKind::o_even_minus: mu = -eta(k); break;
        case GroupKind::o_odd_plus: mu = eta(k) - 1.0; break;
        case GroupKind::o_odd_minus: mu = 1.0 - eta(k); break;
        case GroupKind::sp: mu = -eta(k); break;
    }
    if (include_deterministic) {
        for (int d : spec.det_eigs) mu += (d == 1 || k % 2 == 0) ? 1.0 : -1.0;
    }
    return mu;
}

double eigen_density(const GroupSpec& spec, std::span<const double> angles) {
    const int q = spec.num_angles;
    if (static_cast<int>(angles.size()) != q)
        throw std::invalid_argument("eigen_density: expected " + std::to_string(q) +
                                    " angles, got " + std::to_string(angles.size()));
    const double pi = 3.14159265358979323846;
    for (double th : angles)
        if (!(th >= 0.0 && th <= pi))
            throw std::domain_error("eigen_density: angle outside [0, pi]");

    // log prefactor: 2^{(q-1)^2} or 2^{q^2} over q! pi^q.
    const bool flat = (spec.a < 0.0 && spec.b < 0.0);
    const double pow2 = flat ? double(q - 1) * (q - 1) : double(q) * q;
    double logp = pow2 * std::log(2.0) - std::lgamma(q + 1.0) - q * std::log(pi);

    double val = std::exp(logp);
    for (int j = 0; j < q; ++j) {
        const double th = angles[j];
        if (spec.a > 0.0 && spec.b > 0.0) {
            const double s = std::sin(th);
            val *= s * s;
        } else if (spec.a < 0.0 && spec.b > 0.0) {
            const double c = std::cos(th / 2.0);
            val *= c * c;
        } else if (spec.a > 0.0 && spec.b < 0.0) {
            const double s = std::sin(th / 2.0);
            val *= s * s;
        }
        for (int k = j + 1; k < q; ++k) {
            const double d = std::cos(th) - std::cos(angles[k]);
            val *= d * d;
        }
    }
    return val;
}

const char* kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::o_even_plus: return "o-even-plus";
        case GroupKind::o_even_minus: return "o-even-minus";
        case GroupKind::o_odd_plus: return "o-odd-plus";
        case GroupKind::o_odd_minus: return "o-odd-minus";
        case GroupKind::sp: return "sp";
    }
    return "?";
}

std::optional<GroupKind> kind_from_name(std::string_view name) {
    for (GroupKind k : all_kinds)
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

}  // namespace haar
