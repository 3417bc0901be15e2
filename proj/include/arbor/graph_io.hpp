#ifndef ARBOR_GRAPH_IO_HPP
#define ARBOR_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "arbor/multigraph.hpp"

namespace arbor {

// Line-oriented UTF-8 graph format:
//   # comment
//   graph <vertex_count>
//   edge <u> <v> <multiplicity>
// Indices 0-based. Errors name the offending line.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
Multigraph load_graph(const std::string& path);

// Emits bundles sorted by (u, v) with u < v; parse(serialize(g)) == g.
std::string serialize_graph(const Multigraph& g);
void save_graph(const Multigraph& g, const std::string& path);

}  // namespace arbor

#endif
