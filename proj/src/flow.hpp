#ifndef ARBOR_SRC_FLOW_HPP
#define ARBOR_SRC_FLOW_HPP

#include <vector>

namespace arbor::detail {

// Small integer max-flow (BFS augmenting paths). Sizes here are desk scale;
// no scaling tricks needed.
class FlowNet {
public:
    explicit FlowNet(int n) : adj_(static_cast<size_t>(n)) {}

    int node_count() const { return static_cast<int>(adj_.size()); }
    int add_node() {
        adj_.emplace_back();
        return node_count() - 1;
    }
    // Returns the arc index; the reverse arc is index ^ 1.
    int add_arc(int from, int to, int cap);

    int max_flow(int s, int t);
    int arc_flow(int arc) const { return arcs_[static_cast<size_t>(arc)].flow; }
    // Residual reachability from s after max_flow.
    std::vector<char> source_side(int s) const;

private:
    struct Arc {
        int to;
        int cap;
        int flow;
    };
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
};

// One arc with flow bounds [lo, hi] in a circulation problem.
struct BoundedArc {
    int from;
    int to;
    int lo;
    int hi;
};

// Feasible integral circulation with lower bounds; fills per-arc flows on
// success.
bool feasible_circulation(int n, const std::vector<BoundedArc>& arcs, std::vector<int>& flow);

}  // namespace arbor::detail

#endif
