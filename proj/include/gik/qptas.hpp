#ifndef GIK_QPTAS_HPP
#define GIK_QPTAS_HPP

#include <map>
#include <optional>
#include <vector>

#include "gik/approx.hpp"
#include "gik/wellspaced.hpp"

namespace gik {

/// External DP state: cluster index m, a profit-grid index into
/// D_ψ = {d · ε p_max / (2n)}, and the crossing set Q_{>m} of items from
/// clusters above m (at most ceil(log2 M)/ε of them).
struct ExternalState {
  int m = 0;
  Rational psi;               // a D_ψ grid value
  std::vector<int> crossing;  // sorted global ids
};

/// Witness for one DP transition: the appended items, their internal order,
/// the shift Δ they were evaluated under, and the shifted profit they earn.
struct ExtensionCertificate {
  std::vector<int> extra;  // ℰ, sorted
  Permutation order;       // π_ℰ
  Rational shift;          // Δ
  Rational marginal;       // Σ φ^{+Δ}
};

/// One evaluation of the ω-parameterized algorithm.
struct AuxiliaryProbe {
  bool feasible = false;  // some chain inserted the required items
  Rational marginal;      // Σ φ^{+Δ} of the best union found
  std::vector<int> extra;
  Permutation order;
};

/// Probe results keyed by (Δ, item set, required set, ω) so binary searches
/// across grid targets reuse solved subproblems; `chains` additionally caches
/// the bounded-QPTAS answers per residual instance.
struct AuxiliaryCache {
  std::map<std::string, AuxiliaryProbe> probes;
  std::map<std::string, Chain> chains;
};

/// The ω-parameterized procedure: clipped-capacity instances probed by binary
/// search for the smallest integer ω whose best chain certifies the marginal
/// profit (1-ε)(ψ_m - ψ_{m-1}). Returns nullopt when even ω = w(N̂) fails.
/// Requires integral weights.
std::optional<ExtensionCertificate> auxiliary_extend(const WellSpacedInstance& wsi,
                                                     const ExternalState& from,
                                                     const ExternalState& to,
                                                     const Rational& delta,
                                                     const Rational& epsilon,
                                                     AuxiliaryCache* cache = nullptr,
                                                     const Deadline& deadline = {});

/// Forward DP over (m, ψ, Q_{>m}); terminal states enumerate permutations of
/// Q_{>0}, transitions run auxiliary_extend with Δ = the predecessor's value.
/// Returns a permutation with Ψ >= (1-ε) · ψ̃ for the maximal reachable grid
/// profit ψ̃ with makespan <= W_T; its crossing counts stay within the thin
/// budget (asserted).
Permutation external_dp(const WellSpacedInstance& wsi, const Rational& epsilon,
                        const Deadline& deadline = {});

/// Whole pipeline: integer-scale the weights, build the 1/ε shifted
/// candidates, run the external DP on each, return the best chain.
SolveOutcome qptas_general_solve(const Instance& inst, const Rational& epsilon,
                                 const Deadline& deadline = {});

}  // namespace gik

#endif  // GIK_QPTAS_HPP
