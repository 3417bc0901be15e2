#include "arbor/multigraph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace arbor {

Multigraph::Multigraph(int vertex_count, std::vector<Bundle> bundles)
    : n_(vertex_count), bundles_(std::move(bundles)) {
    if (n_ < 0) throw InvalidParams("multigraph: negative vertex count");
    std::map<std::pair<int, int>, int> seen;
    copy_offset_.reserve(bundles_.size() + 1);
    copy_offset_.push_back(0);
    for (size_t i = 0; i < bundles_.size(); ++i) {
        const Bundle& b = bundles_[i];
        if (b.u < 0 || b.u >= n_ || b.v < 0 || b.v >= n_)
            throw InvalidParams("multigraph: bundle endpoint out of range");
        if (b.u == b.v) throw InvalidParams("multigraph: loop edge forbidden");
        if (b.multiplicity < 1) throw InvalidParams("multigraph: multiplicity must be >= 1");
        auto key = std::minmax(b.u, b.v);
        if (!seen.emplace(key, static_cast<int>(i)).second)
            throw InvalidParams("multigraph: duplicate bundle for endpoint pair");
        copy_offset_.push_back(copy_offset_.back() + b.multiplicity);
    }
    total_copies_ = copy_offset_.back();
    copy_bundle_.resize(static_cast<size_t>(total_copies_));
    incident_.assign(static_cast<size_t>(n_), {});
    normalized_.reserve(static_cast<size_t>(total_copies_));
    for (int b = 0; b < bundle_count(); ++b) {
        const Bundle& bd = bundles_[static_cast<size_t>(b)];
        for (int c = 0; c < bd.multiplicity; ++c) {
            int f = copy_offset_[static_cast<size_t>(b)] + c;
            copy_bundle_[static_cast<size_t>(f)] = b;
            incident_[static_cast<size_t>(bd.u)].push_back(f);
            incident_[static_cast<size_t>(bd.v)].push_back(f);
            normalized_.push_back(std::minmax(bd.u, bd.v));
        }
    }
    std::sort(normalized_.begin(), normalized_.end());
}

int Multigraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("degree: vertex index out of range");
    return static_cast<int>(incident_[static_cast<size_t>(v)].size());
}

int Multigraph::min_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = (v == 0) ? degree(v) : std::min(d, degree(v));
    return d;
}

int Multigraph::cut_size(const std::vector<int>& a) const {
    std::vector<char> in_a(static_cast<size_t>(n_), 0);
    for (int v : a) {
        if (v < 0 || v >= n_) throw std::out_of_range("cut_size: vertex index out of range");
        in_a[static_cast<size_t>(v)] = 1;
    }
    return cut_size_mask(in_a);
}

int Multigraph::cut_size_mask(const std::vector<char>& in_a) const {
    int count_in = 0;
    for (int v = 0; v < n_; ++v) count_in += in_a[static_cast<size_t>(v)] ? 1 : 0;
    if (count_in == 0 || count_in == n_)
        throw EmptyOrFullSet("cut_size: set must be a nonempty proper vertex subset");
    int cut = 0;
    for (const Bundle& b : bundles_)
        if (in_a[static_cast<size_t>(b.u)] != in_a[static_cast<size_t>(b.v)]) cut += b.multiplicity;
    return cut;
}

std::vector<int> Multigraph::components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    int label = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = label;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int f : incident_[static_cast<size_t>(v)]) {
                auto [x, y] = copy_endpoints(f);
                int w = (x == v) ? y : x;
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = label;
                    stack.push_back(w);
                }
            }
        }
        ++label;
    }
    return comp;
}

bool Multigraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<int> comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool Multigraph::is_simple() const {
    return std::all_of(bundles_.begin(), bundles_.end(),
                       [](const Bundle& b) { return b.multiplicity == 1; });
}

Multigraph make_cycle(int n) {
    if (n < 3) throw InvalidParams("cycle needs at least 3 vertices");
    std::vector<Multigraph::Bundle> bs;
    for (int i = 0; i < n; ++i) bs.push_back({i, (i + 1) % n, 1});
    return Multigraph(n, std::move(bs));
}

Multigraph make_complete(int n) {
    std::vector<Multigraph::Bundle> bs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bs.push_back({i, j, 1});
    return Multigraph(n, std::move(bs));
}

Multigraph make_path(int n_vertices) {
    std::vector<Multigraph::Bundle> bs;
    for (int i = 0; i + 1 < n_vertices; ++i) bs.push_back({i, i + 1, 1});
    return Multigraph(n_vertices, std::move(bs));
}

Multigraph make_star(int leaves) {
    std::vector<Multigraph::Bundle> bs;
    for (int i = 1; i <= leaves; ++i) bs.push_back({0, i, 1});
    return Multigraph(leaves + 1, std::move(bs));
}

Multigraph scale_multiplicity(const Multigraph& g, int k) {
    if (k < 1) throw InvalidParams("scale_multiplicity: factor must be >= 1");
    std::vector<Multigraph::Bundle> bs = g.bundles();
    for (auto& b : bs) b.multiplicity *= k;
    return Multigraph(g.vertex_count(), std::move(bs));
}

}  // namespace arbor
