#ifndef ARBOR_DECOMPOSITION_HPP
#define ARBOR_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/bipartite.hpp"
#include "arbor/certificate.hpp"
#include "arbor/connectivity.hpp"
#include "arbor/factors.hpp"
#include "arbor/tree_pattern.hpp"

namespace arbor {

// ---------------------------------------------------------------------------
// leaf-partite selection
// ---------------------------------------------------------------------------

struct LeafPartiteChoice {
    char side = 'A';            // 'A' or 'B'
    std::vector<int> degrees;   // non-leaf degrees of the chosen side, ascending
    std::vector<int> vertices;  // the chosen side's vertex set
};

// Picks a partite set whose non-leaf degrees satisfy
// m - sum(m_i) >= max(m_i) - 1 (max over the empty set reads as 1, so an
// all-leaf side always qualifies). Ties go to the side with fewer non-leaf
// vertices, then to A.
LeafPartiteChoice leaf_partite_select(const TreePattern& t);

// ---------------------------------------------------------------------------
// equitable factorizations
// ---------------------------------------------------------------------------

// Factors G_0..G_b with minimum degree >= l, d_{G_i}(x) = (m_i/m) d_G(x) on X
// and m_i | d_{G_i}(y) on Y. Requires the (3mb, m^2 l) partition-connectivity
// stated by the contract (verified here).
std::vector<Factor> equitable_factorization(const BipartitionedGraph& g, int m,
                                            const std::vector<int>& degrees, int l,
                                            const SearchLimits& limits = {});

struct PartitionConnectedFactorization {
    std::vector<Factor> factors;  // G_0..G_b
    std::vector<PartitionConnectivityCertificate> certificates;
};

// As equitable_factorization, with every G_i additionally
// (lambda, l)-partition-connected (certified). Requires (3m^2 + m^2 lambda,
// m^2 l) partition-connectivity.
PartitionConnectedFactorization partition_connected_equitable_factorization(
    const BipartitionedGraph& g, int m, const std::vector<int>& degrees, int lambda, int l,
    const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// star decomposition (degenerate b = 0 branch)
// ---------------------------------------------------------------------------

// Groups each X vertex's incident copies into stars of size m; requires
// m | d(x) on X and the graph strictly bipartite.
DecompositionCertificate star_decompose(const BipartitionedGraph& g, int m);

// ---------------------------------------------------------------------------
// covering the inside-X edges (nested-chain greedy)
// ---------------------------------------------------------------------------

struct CoverResult {
    std::vector<PatternCopy> copies;  // edge-disjoint embedded pattern copies
    Factor residual;                  // chain head minus the copies' used edges
};

// Removes edge-disjoint copies of t from gx ∪ H_1 covering every gx edge.
// Each copy takes its root edge from gx and its remaining edges at pattern
// distance i from H_i. gx lives inside the X side; the chain is nested and
// strictly bipartite. strict_scale additionally enforces delta(H_m) >= m^3
// and the 1/m degree cascade.
CoverResult barat_gerbner_cover(const BipartitionedGraph& g, const Factor& gx,
                                const std::vector<Factor>& chain, const TreePattern& t,
                                bool strict_scale = false, const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// decomposition pipelines
// ---------------------------------------------------------------------------

struct PipelineOptions {
    // Relaxed thresholds; -1 picks the structural default (3mb for the split,
    // 6mb+2m for the cross factor). The paper-faithful constants are in
    // bounds_report; they are not runnable at desk scale.
    int split_lambda = -1;
    int eq_l = 0;          // minimum-degree parameter fed to the equitable stage
    int cross_conn = -1;   // trees required of the cross factor (simple pipeline)
    int cross_outdeg = 0;  // orientation out-degree of the cross factor
    bool strict_scale = false;  // enforce the paper's simplicity/scale preconditions
    SearchLimits limits{};
};

// Bipartite pipeline: semi-regular split, equitable factorization per side
// (contract-checked), star route for b = 0, and exact-solver assembly in
// place of the externally proved final step. Always verifies the certificate
// before returning.
DecompositionCertificate bipartite_t_decompose(const BipartitionedGraph& g, const TreePattern& t,
                                               const PipelineOptions& opts = {});

enum class DecomposeMode { pipeline, exact, auto_mode };

// Simple-graph pipeline: bipartite partition-connected factor, split off the
// cover reservoirs H and H', nested Hoffman chains, inside-X/Y covering, then
// the bipartite pipeline on the remainder. Exact mode delegates to the
// backtracking solver; auto tries the pipeline and falls back.
DecompositionCertificate simple_t_decompose(const Multigraph& g, const TreePattern& t,
                                            DecomposeMode mode, const PipelineOptions& opts = {},
                                            int exact_cap = 1 << 20);

// ---------------------------------------------------------------------------
// bounds calculator
// ---------------------------------------------------------------------------

struct BoundsReport {
    int m = 0;
    BigInt lambda, k;
    BigInt bt_exponential;  // m^{5m}
    BigInt new_edge_conn;   // 50 m^2
    BigInt new_min_degree;  // m^{200m}
    BigInt merker_f;        // f_k(m, lambda), the displayed closed form
    BigInt new_f;           // m^2 (lambda + 3)
    BigInt thm37_l;         // 2 m^3 10^{50m} + 2 m^3 (m+1)^{m-1}
};

// All fields exact; asserts (lambda+k) m^m <= f_k <= (lambda+k) m^{4m} for
// m >= 2.
BoundsReport bounds_report(const TreePattern& t, const BigInt& lambda, const BigInt& k);
BoundsReport bounds_report_m(int m, const BigInt& lambda, const BigInt& k);

}  // namespace arbor

#endif
