#ifndef ARBOR_SRC_MATROID_HPP
#define ARBOR_SRC_MATROID_HPP

#include <vector>

#include "arbor/multigraph.hpp"

namespace arbor::detail {

// The two matroids the partition-connectivity decision is built from, both on
// the edge copies of a host graph. Graphic: independent = forest. Bicircular:
// independent = every component has at most one cycle.
enum class MatroidKind : char { graphic, bicircular };

bool independent(const Multigraph& g, MatroidKind kind, const std::vector<int>& edges);
int rank(const Multigraph& g, MatroidKind kind, const std::vector<int>& edges);

// Matroid union by shortest augmenting exchange paths, deterministic
// (lowest-index element first everywhere). Slots hold pairwise disjoint
// independent sets; a full graphic slot has n-1 elements (a spanning tree), a
// full bicircular slot has n elements (every vertex covered, one cycle per
// component).
class MatroidUnion {
public:
    MatroidUnion(const Multigraph& g, std::vector<MatroidKind> kinds);

    // Tries to insert e (not currently in any slot). True on success.
    bool try_insert(int e);
    // Inserts every ground element in ascending order; failed elements are
    // recorded. Returns union size.
    int run(const std::vector<int>& ground);

    const std::vector<std::vector<int>>& slots() const { return slots_; }
    const std::vector<MatroidKind>& kinds() const { return kinds_; }
    const std::vector<int>& failed() const { return failed_; }
    int union_size() const;
    bool all_slots_full() const;

    // Removes one element from whichever slot holds it (no-op otherwise).
    void remove(int e);

    // After a run with failures: the reachable element set R from the failed
    // elements in the exchange digraph. Satisfies |R| > sum_i rank_i(R), the
    // dual certificate that the slots cannot all be completed.
    std::vector<int> deficiency_witness() const;

private:
    bool can_add(int slot, int e) const;
    std::vector<int> removable(int slot, int e) const;

    const Multigraph& g_;
    std::vector<MatroidKind> kinds_;
    std::vector<std::vector<int>> slots_;  // each kept sorted
    std::vector<int> failed_;
    std::vector<int> slot_of_;  // element -> slot or -1
};

}  // namespace arbor::detail

#endif
