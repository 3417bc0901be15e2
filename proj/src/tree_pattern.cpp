#include "arbor/tree_pattern.hpp"

#include <algorithm>

namespace arbor {

TreePattern::TreePattern(Multigraph tree) : tree_(std::move(tree)) {
    const int n = tree_.vertex_count();
    if (!tree_.is_simple()) throw NotATree("tree pattern: parallel edges present");
    if (tree_.total_copies() != n - 1 || !tree_.connected())
        throw NotATree("tree pattern: graph is not a tree");
    if (tree_.total_copies() < 1) throw NotATree("tree pattern: must have at least one edge");

    // Two-color from vertex 0; a tree is always bipartite.
    in_a_.assign(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    in_a_[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int f : tree_.incident_copies(v)) {
            auto [x, y] = tree_.copy_endpoints(f);
            int w = (x == v) ? y : x;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                in_a_[static_cast<size_t>(w)] = !in_a_[static_cast<size_t>(v)];
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        (in_a_[static_cast<size_t>(v)] ? side_a_ : side_b_).push_back(v);
        int d = tree_.degree(v);
        if (d == 1) {
            leaves_.push_back(v);
        } else {
            (in_a_[static_cast<size_t>(v)] ? nonleaf_a_ : nonleaf_b_).push_back(d);
        }
    }
    std::sort(nonleaf_a_.begin(), nonleaf_a_.end());
    std::sort(nonleaf_b_.begin(), nonleaf_b_.end());
}

bool TreePattern::is_star() const {
    return static_cast<int>(nonleaf_a_.size() + nonleaf_b_.size()) <= 1;
}

std::pair<std::vector<int>, std::vector<int>> tree_bipartition(const TreePattern& t) {
    return {t.side_a(), t.side_b()};
}

}  // namespace arbor
