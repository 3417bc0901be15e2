#ifndef ARBOR_CONNECTIVITY_HPP
#define ARBOR_CONNECTIVITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/factor.hpp"
#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

// Global search knobs. Budgets count backtracking nodes; the CLI seeds this
// from ARBOR_BUDGET.
struct SearchLimits {
    std::uint64_t budget = 4'000'000;
    std::uint64_t seed = 0;
};

struct EdgeConnectivityResult {
    int value = 0;
    std::vector<int> witness;  // a minimizing vertex set (nonempty, proper)
};

// min over nonempty proper A of d_G(A), with a minimizing set. Disconnected
// graphs return 0 with one component as witness.
EdgeConnectivityResult edge_connectivity(const Multigraph& g);

// Nash-Williams–Tutte packing: m pairwise disjoint spanning trees, or a
// partition P of V with fewer than m(|P|-1) cross edges.
struct TreePackingResult {
    std::vector<Factor> trees;
    std::vector<std::vector<int>> obstruction;  // partition classes on failure
    bool success() const { return obstruction.empty(); }
};
TreePackingResult spanning_tree_packing(const Multigraph& g, int m);

// Orientation with all out-degrees >= l, or a deficient set A with
// (copies incident to A) < l|A|.
struct OrientationSearchResult {
    std::optional<Orientation> orientation;
    std::vector<int> deficient_set;
    bool success() const { return orientation.has_value(); }
};
OrientationSearchResult min_outdegree_orientation(const Factor& f, int l);

// Witness of (m,l)-partition-connectivity: m disjoint spanning trees plus a
// disjoint oriented factor with min out-degree l.
struct PartitionConnectivityCertificate {
    std::vector<Factor> trees;
    Orientation oriented;
    int m = 0;
    int l = 0;

    // Re-checks every invariant; throws InternalError on violation.
    void verify(const Multigraph& host) const;
};

// Dual obstruction from the matroid-union run: an edge-copy set R with
// |E \ R| + m*rank_graphic(R) + l*rank_bicircular(R) < m(n-1) + l*n.
struct PartitionObstruction {
    std::vector<int> deficient_copies;
    long long capacity = 0;  // |E \ R| + m*r_g(R) + l*r_b(R)
    long long required = 0;  // m(n-1) + l*n
};

struct PartitionDecision {
    std::optional<PartitionConnectivityCertificate> certificate;
    std::optional<PartitionObstruction> obstruction;
    bool success() const { return certificate.has_value(); }
};

// Exact (m,l)-partition-connectivity decision by matroid union over m graphic
// and l bicircular matroids. Total at desk scale.
PartitionDecision partition_connected_decompose(const Multigraph& g, int m, int l);

// Speed-first mode: packs trees greedily, orients the remainder. Positive
// answers are certified; anything else throws SearchBudgetExceeded (it never
// concludes Infeasible).
PartitionConnectivityCertificate partition_connected_decompose_heuristic(const Multigraph& g,
                                                                         int m, int l);

// Lemma: an (ceil(m/eps), ceil(l/eps))-partition-connected graph has an
// (m,l)-partition-connected factor H with d_H(v) <= ceil(eps*d_G(v)) on an
// independent set X. Constructive search; verifies its own output.
struct CappedFactorResult {
    Factor factor;
    PartitionConnectivityCertificate certificate;
};
CappedFactorResult capped_partition_connected_factor(const Multigraph& g,
                                                     const std::vector<int>& x_set, int m, int l,
                                                     const Rational& eps,
                                                     const SearchLimits& limits = {});

// Lemma: a (2m,2l)-partition-connected multigraph has a bipartite
// (m,l)-partition-connected factor. Returns the side labels and the cross
// factor restricted to the returned copies.
struct BipartiteFactorResult {
    std::vector<char> in_x;  // side label per vertex
    Factor factor;
    PartitionConnectivityCertificate certificate;
};
BipartiteFactorResult bipartite_partition_connected_factor(const Multigraph& g, int m, int l,
                                                           const SearchLimits& limits = {});

// Rebinds a certificate found on a materialized sub-multigraph to host copy
// ids (to_host = the materialization's copy map).
PartitionConnectivityCertificate lift_certificate(const Multigraph& host,
                                                  const PartitionConnectivityCertificate& sub,
                                                  const std::vector<int>& to_host);

// Largest (lambda, l) guaranteed by "2*lambda-edge-connected with minimum
// degree >= 2*lambda + 2*l is (lambda, l)-partition-connected"; lambda
// maximized first, then l.
struct GuaranteedBound {
    BigInt lambda;
    BigInt l;
};
GuaranteedBound partition_conn_lower_bound(const BigInt& lambda_edge, const BigInt& min_degree);

}  // namespace arbor

#endif
