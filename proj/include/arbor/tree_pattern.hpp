#ifndef ARBOR_TREE_PATTERN_HPP
#define ARBOR_TREE_PATTERN_HPP

#include <vector>

#include "arbor/multigraph.hpp"

namespace arbor {

// The fixed tree T with its derived data: size m = edge count, the unique
// bipartition (A, B) normalized so that A contains vertex 0, the leaf set,
// and the non-leaf degree profiles of both sides sorted ascending.
class TreePattern {
public:
    explicit TreePattern(Multigraph tree);

    const Multigraph& tree() const { return tree_; }
    int m() const { return tree_.total_copies(); }
    int vertex_count() const { return tree_.vertex_count(); }

    bool in_a(int v) const { return in_a_[static_cast<size_t>(v)]; }
    bool is_leaf(int v) const { return tree_.degree(v) == 1; }
    const std::vector<int>& side_a() const { return side_a_; }
    const std::vector<int>& side_b() const { return side_b_; }
    const std::vector<int>& leaves() const { return leaves_; }

    // Degrees of the non-leaf vertices of A (paper's m'_1..m'_a) and of B
    // (m_1..m_b), each >= 2 and sorted ascending.
    const std::vector<int>& nonleaf_degrees_a() const { return nonleaf_a_; }
    const std::vector<int>& nonleaf_degrees_b() const { return nonleaf_b_; }

    bool is_star() const;  // at most one non-leaf vertex

private:
    Multigraph tree_;
    std::vector<char> in_a_;
    std::vector<int> side_a_, side_b_, leaves_;
    std::vector<int> nonleaf_a_, nonleaf_b_;
};

// (A, B) as vertex sets; A is the side containing vertex 0.
std::pair<std::vector<int>, std::vector<int>> tree_bipartition(const TreePattern& t);

}  // namespace arbor

#endif
