#pragma once
/*
 * Exact joint moments of traces of powers versus their Gaussian limits.
 *
 * For a multiplicity vector (m_j), the group side is the exact Haar average
 *   E[ ∏_j (Tr U^j)^{m_j} ]        (fluctuating part of the traces),
 * computed from the generating function D(t) = E[exp(Σ_j t_j Tr U^j)], which
 * is a Gram determinant of the symbol exp(Σ_j t_j · 2 cos jθ).  Mixed Taylor
 * coefficients are extracted by tensor-product contour quadrature; the node
 * count per variable starts at m_j + 4 and grows until two successive
 * extractions agree, which removes the aliasing error of the bare rule.
 *
 * The Gaussian side replaces Tr U^j by √j·Z_j + μ_j with independent standard
 * normals Z_j and the mean table μ from groups.hpp.  The two sides agree
 * exactly whenever the total weight Σ j·m_j is at most
 *   2n−1  for O(2n)^±,    2n  for O(2n+1)^±,    2n+1  for Sp(2n),
 * and the first failure beyond the range is sharp (e.g. O(2)^+ with m_1 = 2
 * gives 2 on the group side versus 1 on the Gaussian side).
 *
 * The cycle-index machinery is covered by verify_exponential_formula, which
 * tests  exp(Σ_k g(k) t^k / k) = Σ_λ t^{|λ|} z_λ^{-1} ∏ g(λ_i)  with
 * z_λ = ∏_i m_i! · i^{m_i} over integer partitions λ.
 */

#include <map>
#include <vector>

#include "haar/groups.hpp"

namespace haar {

struct Partition {
    std::vector<int> parts;  // weakly decreasing positive integers

    int weight() const;
    std::map<int, int> multiplicities() const;  // part -> count
    double z() const;                           // ∏ m_i! i^{m_i}
};

// All partitions of the given weight (weight 0 yields the empty partition).
// Guarded to weight ≤ 30.
std::vector<Partition> partitions(int weight);

// Max residual over n ≤ W between the contour-extracted Taylor coefficients
// of exp(Σ_{k≤W} g[k-1] t^k/k) and the partition sums Σ_λ z_λ^{-1} ∏ g(λ_i).
double verify_exponential_formula(std::span<const double> g_values, int max_weight,
                                  double t_radius = 0.5);

struct GaussianMoment {
    double value;     // ∏_j E[(√j Z + μ_j)^{m_j}]
    int max_weight;   // largest total weight for which the identity is exact
};

GaussianMoment gaussian_side_moment(const GroupSpec& spec,
                                    const std::map<int, int>& multiplicities);

// Largest Σ j·m_j for which the moment identity holds on this ensemble.
int moment_identity_range(const GroupSpec& spec);

// Exact group-side moment.  include_deterministic adds the pinned eigenvalue
// contribution Σ_d d^j to each trace before taking powers.  Preconditions:
// Σ j·m_j ≤ 16 and spec.num_angles ≤ 6 (determinant sizes stay tiny).
// Throws std::runtime_error if the node refinement fails to stabilize.
double group_moment_exact(const GroupSpec& spec, const std::map<int, int>& multiplicities,
                         bool include_deterministic = false, double radius = 0.5);

struct MomentRow {
    std::map<int, int> multiplicities;
    int weight = 0;
    double group_value = 0.0;
    double gaussian_value = 0.0;
    bool in_range = false;
    double rel_diff = 0.0;  // |group − gaussian| / max(1, |gaussian|)
};

struct MomentReport {
    std::vector<MomentRow> rows;
    double worst_in_range = 0.0;   // max rel_diff over in-range rows
    double worst_out_range = 0.0;  // max rel_diff over out-of-range rows
};

// Both sides for every multiplicity vector of weight 1..max_weight.
MomentReport moment_identity_check(const GroupSpec& spec, int max_weight);

}  // namespace haar
