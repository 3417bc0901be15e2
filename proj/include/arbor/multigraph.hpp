#ifndef ARBOR_MULTIGRAPH_HPP
#define ARBOR_MULTIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "arbor/errors.hpp"

namespace arbor {

// One parallel copy of an edge, addressed as (bundle index, copy index).
struct EdgeCopyId {
    int bundle = 0;
    int copy = 0;

    friend bool operator==(const EdgeCopyId&, const EdgeCopyId&) = default;
    friend auto operator<=>(const EdgeCopyId&, const EdgeCopyId&) = default;
};

// Loopless undirected multigraph with individually addressable parallel edge
// copies. Immutable after construction; safe to share across readers.
//
// Copies are also addressed by a flat index in [0, total_copies()): bundle b
// contributes the contiguous range [copy_offset[b], copy_offset[b+1]).
class Multigraph {
public:
    struct Bundle {
        int u = 0;
        int v = 0;
        int multiplicity = 1;
    };

    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Bundle> bundles);

    int vertex_count() const { return n_; }
    int bundle_count() const { return static_cast<int>(bundles_.size()); }
    const std::vector<Bundle>& bundles() const { return bundles_; }
    const Bundle& bundle(int b) const { return bundles_[static_cast<size_t>(b)]; }

    int total_copies() const { return total_copies_; }
    int copy_offset(int bundle) const { return copy_offset_[static_cast<size_t>(bundle)]; }

    int flat(EdgeCopyId id) const { return copy_offset_[static_cast<size_t>(id.bundle)] + id.copy; }
    EdgeCopyId unflat(int copy) const {
        int b = copy_bundle_[static_cast<size_t>(copy)];
        return {b, copy - copy_offset_[static_cast<size_t>(b)]};
    }
    bool valid_copy(EdgeCopyId id) const {
        return id.bundle >= 0 && id.bundle < bundle_count() && id.copy >= 0 &&
               id.copy < bundles_[static_cast<size_t>(id.bundle)].multiplicity;
    }

    // Endpoints of a flat copy index, u < v not guaranteed (bundle order kept).
    std::pair<int, int> copy_endpoints(int copy) const {
        const Bundle& b = bundles_[static_cast<size_t>(copy_bundle_[static_cast<size_t>(copy)])];
        return {b.u, b.v};
    }
    int copy_u(int copy) const { return copy_endpoints(copy).first; }
    int copy_v(int copy) const { return copy_endpoints(copy).second; }

    // Number of edges incident to v, counting parallel copies.
    int degree(int v) const;
    int min_degree() const;

    // d_G(A): edges with exactly one end in A, counting multiplicities.
    // A must be a nonempty proper subset of the vertices.
    int cut_size(const std::vector<int>& a) const;
    int cut_size_mask(const std::vector<char>& in_a) const;

    bool connected() const;
    // Component label per vertex (labels are 0-based, in order of first vertex).
    std::vector<int> components() const;

    bool is_simple() const;

    // Flat copy indices incident to v.
    const std::vector<int>& incident_copies(int v) const {
        return incident_[static_cast<size_t>(v)];
    }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n_ == b.n_ && a.normalized_ == b.normalized_;
    }

private:
    int n_ = 0;
    std::vector<Bundle> bundles_;
    std::vector<int> copy_offset_;           // size bundle_count()+1
    std::vector<int> copy_bundle_;           // flat copy -> bundle
    std::vector<std::vector<int>> incident_; // vertex -> flat copies
    std::vector<std::pair<int, int>> normalized_;  // sorted (min,max) pairs, one per copy
    int total_copies_ = 0;
};

// Convenience builders used all over the tests.
Multigraph make_cycle(int n);
Multigraph make_complete(int n);
Multigraph make_path(int n_vertices);
Multigraph make_star(int leaves);
// Multiply every bundle's multiplicity by k.
Multigraph scale_multiplicity(const Multigraph& g, int k);

}  // namespace arbor

#endif
