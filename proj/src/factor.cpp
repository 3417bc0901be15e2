#include "arbor/factor.hpp"

#include <algorithm>
#include <numeric>

namespace arbor {

Factor::Factor(const Multigraph& host, std::vector<int> copies)
    : host_(&host), copies_(std::move(copies)) {
    std::sort(copies_.begin(), copies_.end());
    copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());
    for (int c : copies_)
        if (c < 0 || c >= host.total_copies())
            throw HostMismatch("factor: copy index out of range for host");
}

Factor Factor::full(const Multigraph& host) {
    std::vector<int> all(static_cast<size_t>(host.total_copies()));
    std::iota(all.begin(), all.end(), 0);
    return Factor(host, std::move(all));
}

const Multigraph& Factor::host() const {
    if (!host_) throw InternalError("factor: unbound host");
    return *host_;
}

bool Factor::contains(int copy) const {
    return std::binary_search(copies_.begin(), copies_.end(), copy);
}

int Factor::degree(int v) const {
    int d = 0;
    for (int c : host().incident_copies(v))
        if (contains(c)) ++d;
    return d;
}

std::vector<int> Factor::degrees() const {
    std::vector<int> d(static_cast<size_t>(host().vertex_count()), 0);
    for (int c : copies_) {
        auto [u, v] = host().copy_endpoints(c);
        ++d[static_cast<size_t>(u)];
        ++d[static_cast<size_t>(v)];
    }
    return d;
}

void Factor::check_same_host(const Factor& other) const {
    if (host_ != other.host_) throw HostMismatch("factors bound to different hosts");
}

Factor Factor::complement() const {
    Factor out(host());
    const int total = host().total_copies();
    out.copies_.reserve(static_cast<size_t>(total - size()));
    size_t i = 0;
    for (int c = 0; c < total; ++c) {
        if (i < copies_.size() && copies_[i] == c) { ++i; continue; }
        out.copies_.push_back(c);
    }
    return out;
}

Factor Factor::unite(const Factor& other) const {
    check_same_host(other);
    Factor out(host());
    std::set_union(copies_.begin(), copies_.end(), other.copies_.begin(), other.copies_.end(),
                   std::back_inserter(out.copies_));
    return out;
}

Factor Factor::subtract(const Factor& other) const {
    check_same_host(other);
    Factor out(host());
    std::set_difference(copies_.begin(), copies_.end(), other.copies_.begin(),
                        other.copies_.end(), std::back_inserter(out.copies_));
    return out;
}

bool Factor::disjoint_from(const Factor& other) const {
    check_same_host(other);
    size_t i = 0, j = 0;
    while (i < copies_.size() && j < other.copies_.size()) {
        if (copies_[i] == other.copies_[j]) return false;
        if (copies_[i] < other.copies_[j]) ++i; else ++j;
    }
    return true;
}

bool Factor::subset_of(const Factor& other) const {
    check_same_host(other);
    return std::includes(other.copies_.begin(), other.copies_.end(), copies_.begin(),
                         copies_.end());
}

std::pair<Multigraph, std::vector<int>> Factor::materialize() const {
    const Multigraph& g = host();
    // Collect per-bundle multiplicities among our copies, keeping bundle order
    // so the copy map is deterministic.
    std::vector<int> mult(static_cast<size_t>(g.bundle_count()), 0);
    for (int c : copies_) ++mult[static_cast<size_t>(g.unflat(c).bundle)];
    std::vector<Multigraph::Bundle> bs;
    for (int b = 0; b < g.bundle_count(); ++b)
        if (mult[static_cast<size_t>(b)] > 0)
            bs.push_back({g.bundle(b).u, g.bundle(b).v, mult[static_cast<size_t>(b)]});
    Multigraph sub(g.vertex_count(), std::move(bs));
    // copies_ is sorted by flat index = bundle-major order, matching sub's.
    std::vector<int> to_host(copies_.begin(), copies_.end());
    return {std::move(sub), std::move(to_host)};
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

bool Factor::spanning_connected() const {
    const int n = host().vertex_count();
    if (n <= 1) return true;
    Dsu dsu(n);
    int merges = 0;
    for (int c : copies_) {
        auto [u, v] = host().copy_endpoints(c);
        if (dsu.unite(u, v)) ++merges;
    }
    return merges == n - 1;
}

bool Factor::acyclic() const {
    Dsu dsu(host().vertex_count());
    for (int c : copies_) {
        auto [u, v] = host().copy_endpoints(c);
        if (!dsu.unite(u, v)) return false;
    }
    return true;
}

bool Factor::is_spanning_tree() const {
    return size() == host().vertex_count() - 1 && spanning_connected();
}

Factor factor_complement(const Multigraph& g, const Factor& f) {
    if (&f.host() != &g) throw HostMismatch("factor_complement: factor not hosted by g");
    return f.complement();
}

int Orientation::out_degree(int v) const {
    int d = 0;
    for (int t : tails)
        if (t == v) ++d;
    return d;
}

void Orientation::validate() const {
    if (tails.size() != factor.copies().size())
        throw InternalError("orientation: tail list size mismatch");
    for (size_t i = 0; i < tails.size(); ++i) {
        auto [u, v] = factor.host().copy_endpoints(factor.copies()[i]);
        if (tails[i] != u && tails[i] != v)
            throw InternalError("orientation: tail is not an endpoint of its copy");
    }
}

}  // namespace arbor
