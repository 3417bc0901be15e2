#ifndef ARBOR_FACTOR_HPP
#define ARBOR_FACTOR_HPP

#include <vector>

#include "arbor/multigraph.hpp"

namespace arbor {

// A spanning subgraph of a host multigraph, identified by a subset of edge
// copies. Copies are kept as a sorted list of flat indices; the vertex set is
// the host's by definition of "factor".
class Factor {
public:
    Factor() = default;
    explicit Factor(const Multigraph& host) : host_(&host) {}
    Factor(const Multigraph& host, std::vector<int> copies);

    static Factor full(const Multigraph& host);
    static Factor empty(const Multigraph& host) { return Factor(host); }

    const Multigraph& host() const;
    const std::vector<int>& copies() const { return copies_; }
    int size() const { return static_cast<int>(copies_.size()); }
    bool contains(int copy) const;

    int degree(int v) const;
    std::vector<int> degrees() const;

    // Degree within copies restricted to vertices of one side etc. handled by
    // callers; the factor itself is side-agnostic.

    Factor complement() const;
    Factor unite(const Factor& other) const;
    Factor subtract(const Factor& other) const;
    bool disjoint_from(const Factor& other) const;
    bool subset_of(const Factor& other) const;

    // The subgraph on the host's vertices induced by this factor's copies,
    // plus the map from new flat copy index -> host flat copy index.
    std::pair<Multigraph, std::vector<int>> materialize() const;

    // Connected / spanning-tree / acyclicity tests over the factor's copies
    // (all vertices of the host count, including isolated ones).
    bool spanning_connected() const;
    bool acyclic() const;
    bool is_spanning_tree() const;

    void check_same_host(const Factor& other) const;

private:
    const Multigraph* host_ = nullptr;
    std::vector<int> copies_;
};

// post: copies(result) = copies(g) minus copies(f).
Factor factor_complement(const Multigraph& g, const Factor& f);

// An orientation of a factor: per copy, the tail endpoint (edge points away
// from its tail). out_degree(v) = number of copies with tail v.
struct Orientation {
    Factor factor;
    std::vector<int> tails;  // aligned with factor.copies()

    int out_degree(int v) const;
    void validate() const;  // tails are endpoints of their copies
};

}  // namespace arbor

#endif
