#pragma once
/*
 * Eigenangle structure of the classical compact groups O(N)^± and Sp(2n).
 *
 * A matrix in one of these groups has spectrum on the unit circle, made of
 * conjugate pairs e^{±iθ_j} plus, depending on the component, deterministic
 * eigenvalues pinned at +1 or -1:
 *
 *   O(2n)^+   : n free pairs, no pinned eigenvalue
 *   O(2n)^-   : n-1 free pairs, pinned {+1, -1}
 *   O(2n+1)^+ : n free pairs, pinned {+1}
 *   O(2n+1)^- : n free pairs, pinned {-1}
 *   Sp(2n)    : n free pairs, no pinned eigenvalue
 *
 * Under Haar measure the free angles θ ∈ [0,π]^q are distributed as
 *
 *   ρ(θ) = C_q ∏_j w(θ_j) ∏_{j<k} (cos θ_j − cos θ_k)^2,
 *
 * a Jacobi-type ensemble in x = cos θ with exponent pair (a,b), a,b ∈ {±1/2}:
 *
 *   (a,b) = (-1/2,-1/2)  w = 1             C_q = 2^{(q-1)^2} / (q! π^q)   O(2n)^+
 *   (a,b) = (+1/2,+1/2)  w = sin^2 θ       C_q = 2^{q^2} / (q! π^q)       Sp(2n), O(2n)^-
 *   (a,b) = (-1/2,+1/2)  w = cos^2(θ/2)    C_q = 2^{q^2} / (q! π^q)       O(2n+1)^-
 *   (a,b) = (+1/2,-1/2)  w = sin^2(θ/2)    C_q = 2^{q^2} / (q! π^q)       O(2n+1)^+
 *
 * For O(2n)^- the density index q equals n−1 (two eigenvalues are pinned);
 * for every other component q equals the group index n.
 *
 * mean_trace returns the limiting mean of the fluctuating part of Tr U^k,
 *   O(2n)^+: +η_k   O(2n)^-: −η_k   O(2n+1)^+: −(1−η_k)
 *   O(2n+1)^-: +(1−η_k)   Sp(2n): −η_k,       η_k = 1 for even k else 0,
 * which is exact whenever k lies inside the moment-identity range of the
 * component (see moments.hpp).  With include_deterministic the pinned
 * eigenvalue contribution Σ d^k is added; for every orthogonal component the
 * total then equals η_k.
 */

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace haar {

enum class GroupKind { o_even_plus, o_even_minus, o_odd_plus, o_odd_minus, sp };

struct GroupSpec {
    GroupKind kind;
    int n;                      // group index: O(2n)^±, O(2n+1)^±, Sp(2n)
    double a;                   // Jacobi exponents, each ±1/2
    double b;
    int num_angles;             // q, the number of free eigenangle pairs
    std::vector<int> det_eigs;  // pinned eigenvalues, subset of {+1,-1}
    int matrix_dim;             // 2*num_angles + det_eigs.size()
};

// Factory; throws std::invalid_argument for n < 1 (n < 2 for O(2n)^-).
GroupSpec group_spec(GroupKind kind, int n);

// η_j = (1 + (−1)^j)/2: indicator of even j.
int eta(int j);

// Mean of the fluctuating part of Tr U^k (plus pinned part when requested).
double mean_trace(const GroupSpec& spec, int k, bool include_deterministic = false);

// Joint eigenangle density at angles ∈ [0,π]^num_angles.
// Throws std::invalid_argument on a size mismatch and std::domain_error when
// an angle falls outside [0,π].
double eigen_density(const GroupSpec& spec, std::span<const double> angles);

// Stable names used by the CLI and serialized reports.
const char* kind_name(GroupKind kind);
std::optional<GroupKind> kind_from_name(std::string_view name);
constexpr GroupKind all_kinds[] = {GroupKind::o_even_plus, GroupKind::o_even_minus,
                                   GroupKind::o_odd_plus, GroupKind::o_odd_minus,
                                   GroupKind::sp};

}  // namespace haar
