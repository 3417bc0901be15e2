#include "matroid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace arbor::detail {

namespace {

// Union-find with a per-component "contains a cycle" flag; enough for both
// matroid oracles.
struct CycleDsu {
    std::vector<int> parent;
    std::vector<char> cyclic;
    explicit CycleDsu(int n) : parent(static_cast<size_t>(n)), cyclic(static_cast<size_t>(n), 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // Returns false when adding (u, v) is dependent for the given matroid.
    bool add(MatroidKind kind, int u, int v) {
        int a = find(u), b = find(v);
        if (a != b) {
            if (kind == MatroidKind::bicircular && cyclic[static_cast<size_t>(a)] &&
                cyclic[static_cast<size_t>(b)])
                return false;
            parent[static_cast<size_t>(a)] = b;
            cyclic[static_cast<size_t>(b)] =
                cyclic[static_cast<size_t>(b)] || cyclic[static_cast<size_t>(a)];
            return true;
        }
        if (kind == MatroidKind::graphic) return false;
        if (cyclic[static_cast<size_t>(a)]) return false;
        cyclic[static_cast<size_t>(a)] = 1;
        return true;
    }
};

bool independent_with(const Multigraph& g, MatroidKind kind, const std::vector<int>& edges,
                      int skip, int extra) {
    CycleDsu dsu(g.vertex_count());
    for (int e : edges) {
        if (e == skip) continue;
        auto [u, v] = g.copy_endpoints(e);
        if (!dsu.add(kind, u, v)) return false;
    }
    if (extra >= 0) {
        auto [u, v] = g.copy_endpoints(extra);
        if (!dsu.add(kind, u, v)) return false;
    }
    return true;
}

}  // namespace

bool independent(const Multigraph& g, MatroidKind kind, const std::vector<int>& edges) {
    return independent_with(g, kind, edges, -1, -1);
}

int rank(const Multigraph& g, MatroidKind kind, const std::vector<int>& edges) {
    // Greedy works in any matroid.
    CycleDsu dsu(g.vertex_count());
    int r = 0;
    for (int e : edges) {
        auto [u, v] = g.copy_endpoints(e);
        if (dsu.add(kind, u, v)) ++r;
    }
    return r;
}

MatroidUnion::MatroidUnion(const Multigraph& g, std::vector<MatroidKind> kinds)
    : g_(g), kinds_(std::move(kinds)), slots_(kinds_.size()),
      slot_of_(static_cast<size_t>(g.total_copies()), -1) {}

bool MatroidUnion::can_add(int slot, int e) const {
    return independent_with(g_, kinds_[static_cast<size_t>(slot)],
                            slots_[static_cast<size_t>(slot)], -1, e);
}

std::vector<int> MatroidUnion::removable(int slot, int e) const {
    std::vector<int> out;
    for (int y : slots_[static_cast<size_t>(slot)])
        if (independent_with(g_, kinds_[static_cast<size_t>(slot)],
                             slots_[static_cast<size_t>(slot)], y, e))
            out.push_back(y);
    return out;
}

bool MatroidUnion::try_insert(int e) {
    const int k = static_cast<int>(kinds_.size());
    // BFS over elements; arcs z -> y when y sits in a slot that z could enter
    // by displacing y. Shortest paths keep the chained exchanges valid.
    std::vector<char> visited(static_cast<size_t>(g_.total_copies()), 0);
    std::vector<int> parent_elem(static_cast<size_t>(g_.total_copies()), -1);
    std::vector<int> parent_slot(static_cast<size_t>(g_.total_copies()), -1);
    std::queue<int> q;
    q.push(e);
    visited[static_cast<size_t>(e)] = 1;
    while (!q.empty()) {
        int z = q.front();
        q.pop();
        for (int i = 0; i < k; ++i) {
            if (slot_of_[static_cast<size_t>(z)] == i) continue;
            if (can_add(i, z)) {
                // Unwind the exchange path. z enters slot i directly; each
                // predecessor replaces the element it displaced.
                int slot = i;
                int cur = z;
                for (;;) {
                    auto& s = slots_[static_cast<size_t>(slot)];
                    s.insert(std::lower_bound(s.begin(), s.end(), cur), cur);
                    slot_of_[static_cast<size_t>(cur)] = slot;
                    int prev = parent_elem[static_cast<size_t>(cur)];
                    if (prev == -1) break;
                    int pslot = parent_slot[static_cast<size_t>(cur)];
                    // cur was displaced from pslot by prev.
                    auto& ps = slots_[static_cast<size_t>(pslot)];
                    ps.erase(std::lower_bound(ps.begin(), ps.end(), cur));
                    if (slot_of_[static_cast<size_t>(cur)] == pslot)
                        slot_of_[static_cast<size_t>(cur)] = -1;
                    cur = prev;
                    slot = pslot;
                }
                return true;
            }
            for (int y : removable(i, z)) {
                if (visited[static_cast<size_t>(y)]) continue;
                visited[static_cast<size_t>(y)] = 1;
                parent_elem[static_cast<size_t>(y)] = z;
                parent_slot[static_cast<size_t>(y)] = i;
                q.push(y);
            }
        }
    }
    return false;
}

int MatroidUnion::run(const std::vector<int>& ground) {
    failed_.clear();
    for (int e : ground) {
        if (slot_of_[static_cast<size_t>(e)] != -1) continue;
        if (all_slots_full()) { failed_.push_back(e); continue; }
        if (!try_insert(e)) failed_.push_back(e);
    }
    return union_size();
}

int MatroidUnion::union_size() const {
    int total = 0;
    for (const auto& s : slots_) total += static_cast<int>(s.size());
    return total;
}

bool MatroidUnion::all_slots_full() const {
    const int n = g_.vertex_count();
    for (size_t i = 0; i < kinds_.size(); ++i) {
        int want = kinds_[i] == MatroidKind::graphic ? n - 1 : n;
        if (static_cast<int>(slots_[i].size()) != want) return false;
    }
    return true;
}

void MatroidUnion::remove(int e) {
    int slot = slot_of_[static_cast<size_t>(e)];
    if (slot == -1) return;
    auto& s = slots_[static_cast<size_t>(slot)];
    s.erase(std::lower_bound(s.begin(), s.end(), e));
    slot_of_[static_cast<size_t>(e)] = -1;
}

std::vector<int> MatroidUnion::deficiency_witness() const {
    const int k = static_cast<int>(kinds_.size());
    std::vector<char> visited(static_cast<size_t>(g_.total_copies()), 0);
    std::queue<int> q;
    for (int e : failed_) {
        if (!visited[static_cast<size_t>(e)]) {
            visited[static_cast<size_t>(e)] = 1;
            q.push(e);
        }
    }
    while (!q.empty()) {
        int z = q.front();
        q.pop();
        for (int i = 0; i < k; ++i) {
            if (slot_of_[static_cast<size_t>(z)] == i) continue;
            for (int y : removable(i, z)) {
                if (visited[static_cast<size_t>(y)]) continue;
                visited[static_cast<size_t>(y)] = 1;
                q.push(y);
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g_.total_copies(); ++e)
        if (visited[static_cast<size_t>(e)]) out.push_back(e);
    return out;
}

}  // namespace arbor::detail
