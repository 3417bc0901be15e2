#include "arbor/bipartite.hpp"

#include <string>

namespace arbor {

BipartitionedGraph::BipartitionedGraph(Multigraph g, std::vector<Side> s)
    : graph(std::move(g)), side(std::move(s)) {
    if (static_cast<int>(side.size()) != graph.vertex_count())
        throw InvalidParams("bipartitioned graph: side label count mismatch");
}

bool BipartitionedGraph::strictly_bipartite() const {
    for (const auto& b : graph.bundles())
        if (side[static_cast<size_t>(b.u)] == side[static_cast<size_t>(b.v)]) return false;
    return true;
}

void BipartitionedGraph::require_strict(const char* where) const {
    if (!strictly_bipartite())
        throw PreconditionViolated(std::string(where) + ": graph is not strictly bipartite");
}

std::vector<int> BipartitionedGraph::side_vertices(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (side[static_cast<size_t>(v)] == s) out.push_back(v);
    return out;
}

int BipartitionedGraph::endpoint_on(int copy, Side s) const {
    auto [u, v] = graph.copy_endpoints(copy);
    if (side[static_cast<size_t>(u)] == s) return u;
    if (side[static_cast<size_t>(v)] == s) return v;
    throw PreconditionViolated("endpoint_on: copy has no endpoint on requested side");
}

BipartitionedGraph with_natural_bipartition(Multigraph g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int f : g.incident_copies(v)) {
                auto [x, y] = g.copy_endpoints(f);
                int w = (x == v) ? y : x;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    throw PreconditionViolated("natural bipartition: graph has an odd cycle");
                }
            }
        }
    }
    std::vector<Side> side(static_cast<size_t>(g.vertex_count()));
    for (size_t v = 0; v < side.size(); ++v) side[v] = color[v] == 0 ? Side::X : Side::Y;
    return BipartitionedGraph(std::move(g), std::move(side));
}

}  // namespace arbor
