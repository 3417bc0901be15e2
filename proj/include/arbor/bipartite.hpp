#ifndef ARBOR_BIPARTITE_HPP
#define ARBOR_BIPARTITE_HPP

#include <vector>

#include "arbor/multigraph.hpp"

namespace arbor {

enum class Side : char { X = 0, Y = 1 };

// A multigraph with a per-vertex {X, Y} label. When strictly bipartite, every
// bundle joins an X vertex to a Y vertex.
struct BipartitionedGraph {
    Multigraph graph;
    std::vector<Side> side;

    BipartitionedGraph() = default;
    BipartitionedGraph(Multigraph g, std::vector<Side> s);

    bool strictly_bipartite() const;
    void require_strict(const char* where) const;

    std::vector<int> side_vertices(Side s) const;
    // For a cross edge copy, its endpoint on the given side.
    int endpoint_on(int copy, Side s) const;
};

// Labels from the natural 2-coloring of a connected bipartite graph (vertex 0
// goes to X). Throws PreconditionViolated when the graph has an odd cycle.
BipartitionedGraph with_natural_bipartition(Multigraph g);

}  // namespace arbor

#endif
