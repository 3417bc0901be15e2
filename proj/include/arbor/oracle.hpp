#ifndef ARBOR_ORACLE_HPP
#define ARBOR_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arbor/certificate.hpp"
#include "arbor/connectivity.hpp"
#include "arbor/factor.hpp"
#include "arbor/multigraph.hpp"

namespace arbor::oracle {

// ---------------------------------------------------------------------------
// exact T-edge-decomposition by complete backtracking
// ---------------------------------------------------------------------------

struct ExactDecomposition {
    std::optional<DecompositionCertificate> certificate;
    bool provably_none = false;
};

// Complete backtracking decision: a returned certificate verifies; a
// provably_none answer is a proof of non-decomposability. Branches on the
// copy containing the globally least-indexed unused edge copy, so the found
// certificate is the lexicographically least in branch order.
ExactDecomposition exact_t_decomposition(const Multigraph& g, const TreePattern& t,
                                         int cap = 1 << 20, const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// exhaustive partition-connectivity ground truth
// ---------------------------------------------------------------------------

struct BruteForceAnswer {
    bool decomposable = false;
    std::vector<int> orientation_side;  // F of an accepting bipartition (E\F holds the trees)
};

// Enumerates factor bipartitions (F, E\F): accepts iff some F satisfies the
// exhaustive Hall condition for an out-degree-l orientation and E\F passes
// the Nash-Williams--Tutte partition condition for m trees, both checked by
// raw enumeration. |copies| <= 20.
BruteForceAnswer brute_force_partition_connectivity(const Multigraph& g, int m, int l);

// Visits every partition of {0..n-1} as (labels, part count); stops early
// when the callback returns false. Returns false iff stopped.
bool for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& fn);

// NW-T condition by exhaustive partition enumeration: every partition P has
// at least m(|P|-1) cross edges.
bool nwt_packing_condition(const Multigraph& g, int m);

// Hall condition by exhaustive vertex-subset enumeration: every nonempty A
// has at least l|A| incident copies in f.
bool hall_orientation_condition(const Factor& f, int l);

// Ground truth for orientation existence: tries all 2^|copies| orientations.
bool orientation_exists_bruteforce(const Factor& f, int l);

// ---------------------------------------------------------------------------
// canonical tree codes and free-tree enumeration
// ---------------------------------------------------------------------------

struct CanonicalTreeCode {
    std::string code;
    friend bool operator==(const CanonicalTreeCode&, const CanonicalTreeCode&) = default;
    friend auto operator<=>(const CanonicalTreeCode&, const CanonicalTreeCode&) = default;
};

// AHU-style canonical encoding of a free tree; equal codes iff isomorphic.
CanonicalTreeCode canonical_tree_code(const Multigraph& t);

// Labeled tree on n vertices from a Prüfer sequence (length n-2).
Multigraph prufer_decode(const std::vector<int>& seq, int n);

// All free trees on exactly n vertices, one representative per isomorphism
// class, by leaf extension with canonical-code dedup.
std::vector<Multigraph> free_trees_with_vertices(int n);

// Distinct canonical codes over ALL labeled trees on n vertices via
// exhaustive Prüfer enumeration (n <= 10 is practical).
std::vector<CanonicalTreeCode> free_tree_codes_by_prufer(int n);

}  // namespace arbor::oracle

#endif
