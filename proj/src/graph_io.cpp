#include "arbor/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace arbor {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = -1;
    std::vector<Multigraph::Bundle> bundles;
    std::map<std::pair<int, int>, int> seen;  // endpoint pair -> first line
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string directive;
        if (!(ss >> directive)) continue;  // blank line
        if (directive[0] == '#') continue;
        if (!have_header) {
            if (directive != "graph") fail(lineno, "expected 'graph <vertex_count>' first");
            if (!(ss >> n) || n < 0) fail(lineno, "malformed vertex count");
            std::string extra;
            if (ss >> extra) fail(lineno, "trailing tokens after vertex count");
            have_header = true;
            continue;
        }
        if (directive == "graph") fail(lineno, "duplicate 'graph' directive");
        if (directive != "edge") fail(lineno, "unknown directive '" + directive + "'");
        long long u, v, mult;
        if (!(ss >> u >> v >> mult)) fail(lineno, "malformed edge line");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "vertex index out of range");
        if (u == v) fail(lineno, "loop edge forbidden");
        if (mult < 1) fail(lineno, "multiplicity must be at least 1");
        auto key = std::minmax(static_cast<int>(u), static_cast<int>(v));
        auto [it, fresh] = seen.emplace(key, lineno);
        if (!fresh)
            fail(lineno, "duplicate bundle for {" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + "} (first at line " +
                             std::to_string(it->second) + ")");
        bundles.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(mult)});
    }
    if (!have_header) throw FormatError("missing 'graph <vertex_count>' directive");
    return Multigraph(static_cast<int>(n), std::move(bundles));
}

Multigraph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const Multigraph& g) {
    std::vector<Multigraph::Bundle> bs = g.bundles();
    for (auto& b : bs)
        if (b.u > b.v) std::swap(b.u, b.v);
    std::sort(bs.begin(), bs.end(), [](const auto& a, const auto& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    for (const auto& b : bs) out << "edge " << b.u << " " << b.v << " " << b.multiplicity << "\n";
    return out.str();
}

void save_graph(const Multigraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write graph file: " + path);
    out << serialize_graph(g);
}

}  // namespace arbor
