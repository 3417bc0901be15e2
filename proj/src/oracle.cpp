#include "arbor/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace arbor {

// ---------------------------------------------------------------------------
// certificate verification (total; reasons name the first violated clause)
// ---------------------------------------------------------------------------

VerifyResult verify_decomposition(const Multigraph& g, const TreePattern& t,
                                  const DecompositionCertificate& cert) {
    const int m = t.m();
    const int total = g.total_copies();
    std::vector<int> owner(static_cast<size_t>(total), -1);
    for (size_t i = 0; i < cert.copies.size(); ++i) {
        const PatternCopy& pc = cert.copies[i];
        if (static_cast<int>(pc.edges.size()) != m)
            return {false, "partition violation at copy " + std::to_string(i) + ": copy has " +
                               std::to_string(pc.edges.size()) + " edges, pattern has " +
                               std::to_string(m)};
        for (int e : pc.edges) {
            if (e < 0 || e >= total)
                return {false, "partition violation at copy " + std::to_string(i) +
                                   ": edge id out of range"};
            if (owner[static_cast<size_t>(e)] != -1)
                return {false, "partition violation at copy " + std::to_string(i) +
                                   ": edge also claimed by copy " +
                                   std::to_string(owner[static_cast<size_t>(e)])};
            owner[static_cast<size_t>(e)] = static_cast<int>(i);
        }
    }
    for (int e = 0; e < total; ++e)
        if (owner[static_cast<size_t>(e)] == -1)
            return {false, "partition violation: host edge copy " + std::to_string(e) +
                               " is uncovered"};

    const int tn = t.vertex_count();
    for (size_t i = 0; i < cert.copies.size(); ++i) {
        const PatternCopy& pc = cert.copies[i];
        if (static_cast<int>(pc.embedding.size()) != tn)
            return {false,
                    "embedding violation at copy " + std::to_string(i) + ": wrong vertex count"};
        std::set<int> image;
        for (int hv : pc.embedding) {
            if (hv < 0 || hv >= g.vertex_count())
                return {false, "embedding violation at copy " + std::to_string(i) +
                                   ": host vertex out of range"};
            if (!image.insert(hv).second)
                return {false, "injectivity violation at copy " + std::to_string(i)};
        }
        // With an injective embedding of a simple tree, matching unordered
        // endpoint pairs as multisets pins each pattern edge to one copy edge.
        std::multiset<std::pair<int, int>> want, have;
        for (const auto& b : t.tree().bundles())
            want.insert(std::minmax(pc.embedding[static_cast<size_t>(b.u)],
                                    pc.embedding[static_cast<size_t>(b.v)]));
        for (int e : pc.edges) {
            auto [u, v] = g.copy_endpoints(e);
            have.insert(std::minmax(u, v));
        }
        if (want != have)
            return {false, "edge mismatch at copy " + std::to_string(i) +
                               ": copy edges do not realize the pattern"};
    }
    return {true, ""};
}

namespace oracle {

// ---------------------------------------------------------------------------
// exact decomposition
// ---------------------------------------------------------------------------

namespace {

struct GrowStep {
    int known;  // pattern vertex already embedded
    int fresh;  // pattern vertex this edge attaches
};

// For each pattern edge as root, the remaining edges in BFS order from the
// root's endpoints; every step attaches exactly one fresh vertex.
std::vector<std::vector<GrowStep>> grow_orders(const TreePattern& t) {
    const Multigraph& tree = t.tree();
    std::vector<std::vector<GrowStep>> out(static_cast<size_t>(t.m()));
    for (int re = 0; re < t.m(); ++re) {
        auto [ra, rb] = tree.copy_endpoints(re);
        std::vector<int> frontier{ra, rb};
        std::vector<char> edge_seen(static_cast<size_t>(t.m()), 0);
        edge_seen[static_cast<size_t>(re)] = 1;
        for (size_t head = 0; head < frontier.size(); ++head) {
            int p = frontier[head];
            for (int e : tree.incident_copies(p)) {
                if (edge_seen[static_cast<size_t>(e)]) continue;
                auto [x, y] = tree.copy_endpoints(e);
                int q = (x == p) ? y : x;
                edge_seen[static_cast<size_t>(e)] = 1;
                out[static_cast<size_t>(re)].push_back({p, q});
                frontier.push_back(q);
            }
        }
    }
    return out;
}

struct ExactSolver {
    const Multigraph& g;
    const TreePattern& t;
    std::vector<std::vector<GrowStep>> orders;
    std::vector<char> used;
    int used_count = 0;
    std::vector<PatternCopy> stack;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    ExactSolver(const Multigraph& g_, const TreePattern& t_, std::uint64_t budget_)
        : g(g_), t(t_), orders(grow_orders(t_)), used(static_cast<size_t>(g_.total_copies()), 0),
          budget(budget_) {}

    // All ways to complete a pattern copy containing host copy e, deduped by
    // edge set and iterated in lexicographic edge-set order.
    std::vector<PatternCopy> candidates(int e) {
        std::map<std::vector<int>, std::vector<int>> found;  // sorted edges -> embedding
        auto [hu, hv] = g.copy_endpoints(e);
        std::vector<int> emb(static_cast<size_t>(t.vertex_count()), -1);
        std::vector<char> host_used(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> edges;
        for (int re = 0; re < t.m(); ++re) {
            auto [ra, rb] = t.tree().copy_endpoints(re);
            for (int flip = 0; flip < 2; ++flip) {
                int a = flip ? rb : ra, b = flip ? ra : rb;
                emb[static_cast<size_t>(a)] = hu;
                emb[static_cast<size_t>(b)] = hv;
                host_used[static_cast<size_t>(hu)] = host_used[static_cast<size_t>(hv)] = 1;
                edges.push_back(e);
                grow(re, 0, emb, host_used, edges, found);
                edges.pop_back();
                emb[static_cast<size_t>(a)] = emb[static_cast<size_t>(b)] = -1;
                host_used[static_cast<size_t>(hu)] = host_used[static_cast<size_t>(hv)] = 0;
            }
        }
        std::vector<PatternCopy> out;
        for (auto& [es, em] : found) out.push_back({em, es});
        return out;
    }

    void grow(int re, size_t step, std::vector<int>& emb, std::vector<char>& host_used,
              std::vector<int>& edges, std::map<std::vector<int>, std::vector<int>>& found) {
        const auto& order = orders[static_cast<size_t>(re)];
        if (step == order.size()) {
            std::vector<int> key = edges;
            std::sort(key.begin(), key.end());
            found.emplace(std::move(key), emb);
            return;
        }
        const GrowStep& gs = order[step];
        int hp = emb[static_cast<size_t>(gs.known)];
        for (int c : g.incident_copies(hp)) {
            if (used[static_cast<size_t>(c)]) continue;
            if (std::find(edges.begin(), edges.end(), c) != edges.end()) continue;
            auto [x, y] = g.copy_endpoints(c);
            int w = (x == hp) ? y : x;
            if (host_used[static_cast<size_t>(w)]) continue;
            emb[static_cast<size_t>(gs.fresh)] = w;
            host_used[static_cast<size_t>(w)] = 1;
            edges.push_back(c);
            grow(re, step + 1, emb, host_used, edges, found);
            edges.pop_back();
            host_used[static_cast<size_t>(w)] = 0;
            emb[static_cast<size_t>(gs.fresh)] = -1;
        }
    }

    // Every component of the unused subgraph must hold a multiple of m edges;
    // a tree copy never crosses components.
    bool component_prune() {
        const int n = g.vertex_count();
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        for (int c = 0; c < g.total_copies(); ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            auto [u, v] = g.copy_endpoints(c);
            parent[static_cast<size_t>(find(u))] = find(v);
        }
        std::vector<int> count(static_cast<size_t>(n), 0);
        for (int c = 0; c < g.total_copies(); ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            ++count[static_cast<size_t>(find(g.copy_u(c)))];
        }
        for (int v = 0; v < n; ++v)
            if (count[static_cast<size_t>(v)] % t.m() != 0) return false;
        return true;
    }

    bool solve() {
        if (++nodes > budget)
            throw SearchBudgetExceeded("exact decomposition: node budget exhausted");
        if (used_count == g.total_copies()) return true;
        if (!component_prune()) return false;
        int e = 0;
        while (used[static_cast<size_t>(e)]) ++e;
        for (PatternCopy& cand : candidates(e)) {
            for (int c : cand.edges) used[static_cast<size_t>(c)] = 1;
            used_count += t.m();
            stack.push_back(cand);
            if (solve()) return true;
            stack.pop_back();
            for (int c : cand.edges) used[static_cast<size_t>(c)] = 0;
            used_count -= t.m();
        }
        return false;
    }
};

}  // namespace

ExactDecomposition exact_t_decomposition(const Multigraph& g, const TreePattern& t, int cap,
                                         const SearchLimits& limits) {
    ExactDecomposition out;
    if (g.total_copies() > cap)
        throw SizeCapExceeded("exact decomposition: instance exceeds the size cap");
    if (g.total_copies() % t.m() != 0) {
        out.provably_none = true;
        return out;
    }
    ExactSolver solver(g, t, limits.budget);
    if (solver.solve()) {
        DecompositionCertificate cert(t);
        cert.copies = std::move(solver.stack);
        cert.provenance.push_back("exact backtracking solver");
        VerifyResult check = verify_decomposition(g, t, cert);
        if (!check.accepted)
            throw InternalError("exact decomposition produced a bad certificate: " + check.reason);
        out.certificate = std::move(cert);
    } else {
        out.provably_none = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// exhaustive partition-connectivity
// ---------------------------------------------------------------------------

bool for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& fn) {
    // Restricted growth strings.
    std::vector<int> label(static_cast<size_t>(n), 0);
    std::vector<int> maxl(static_cast<size_t>(n), 0);
    for (;;) {
        int parts = 0;
        for (int v = 0; v < n; ++v) parts = std::max(parts, label[static_cast<size_t>(v)] + 1);
        if (!fn(label, parts)) return false;
        int i = n - 1;
        while (i > 0 && label[static_cast<size_t>(i)] == maxl[static_cast<size_t>(i - 1)] + 1) --i;
        if (i == 0) return true;
        ++label[static_cast<size_t>(i)];
        maxl[static_cast<size_t>(i)] =
            std::max(maxl[static_cast<size_t>(i - 1)], label[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            label[static_cast<size_t>(j)] = 0;
            maxl[static_cast<size_t>(j)] = maxl[static_cast<size_t>(i)];
        }
    }
}

bool nwt_packing_condition(const Multigraph& g, int m) {
    return for_each_partition(g.vertex_count(), [&](const std::vector<int>& label, int parts) {
        if (parts < 2) return true;
        long long cross = 0;
        for (const auto& b : g.bundles())
            if (label[static_cast<size_t>(b.u)] != label[static_cast<size_t>(b.v)])
                cross += b.multiplicity;
        return cross >= static_cast<long long>(m) * (parts - 1);
    });
}

bool hall_orientation_condition(const Factor& f, int l) {
    if (l == 0) return true;
    const Multigraph& g = f.host();
    const int n = g.vertex_count();
    if (n > 24) throw SizeCapExceeded("hall_orientation_condition: too many vertices");
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
        long long incident = 0;
        for (int c : f.copies()) {
            auto [u, v] = g.copy_endpoints(c);
            if (((a >> u) & 1u) || ((a >> v) & 1u)) ++incident;
        }
        if (incident < static_cast<long long>(l) * __builtin_popcount(a)) return false;
    }
    return true;
}

bool orientation_exists_bruteforce(const Factor& f, int l) {
    if (l == 0) return true;
    const Multigraph& g = f.host();
    const int k = f.size();
    if (k > 24) throw SizeCapExceeded("orientation_exists_bruteforce: too many copies");
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<int> out(static_cast<size_t>(g.vertex_count()), 0);
        for (int i = 0; i < k; ++i) {
            auto [u, v] = g.copy_endpoints(f.copies()[static_cast<size_t>(i)]);
            ++out[static_cast<size_t>(((mask >> i) & 1u) ? u : v)];
        }
        bool ok = true;
        for (int v = 0; v < g.vertex_count() && ok; ++v)
            if (out[static_cast<size_t>(v)] < l) ok = false;
        if (ok) return true;
    }
    return false;
}

BruteForceAnswer brute_force_partition_connectivity(const Multigraph& g, int m, int l) {
    const int k = g.total_copies();
    const int n = g.vertex_count();
    if (k > 20) throw SizeCapExceeded("brute force partition connectivity: more than 20 copies");
    if (n > 12) throw SizeCapExceeded("brute force partition connectivity: more than 12 vertices");

    // Cross masks, one per vertex partition.
    std::vector<std::uint32_t> cross_mask;
    std::vector<int> cross_need;
    for_each_partition(n, [&](const std::vector<int>& label, int parts) {
        if (parts < 2) return true;
        std::uint32_t mask = 0;
        for (int c = 0; c < k; ++c) {
            auto [u, v] = g.copy_endpoints(c);
            if (label[static_cast<size_t>(u)] != label[static_cast<size_t>(v)]) mask |= 1u << c;
        }
        cross_mask.push_back(mask);
        cross_need.push_back(m * (parts - 1));
        return true;
    });

    // Incidence masks, one per vertex subset.
    std::vector<std::uint32_t> vertex_inc(static_cast<size_t>(n), 0);
    for (int c = 0; c < k; ++c) {
        auto [u, v] = g.copy_endpoints(c);
        vertex_inc[static_cast<size_t>(u)] |= 1u << c;
        vertex_inc[static_cast<size_t>(v)] |= 1u << c;
    }
    std::vector<std::uint32_t> subset_inc(1u << n, 0);
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
        int low = __builtin_ctz(a);
        subset_inc[a] = subset_inc[a & (a - 1)] | vertex_inc[static_cast<size_t>(low)];
    }

    const std::uint32_t all = (k == 32) ? 0xFFFFFFFFu : ((1u << k) - 1);
    auto orient_ok = [&](std::uint32_t f) {
        if (l == 0) return true;
        for (std::uint32_t a = 1; a < (1u << n); ++a)
            if (__builtin_popcount(f & subset_inc[a]) <
                l * __builtin_popcount(a))
                return false;
        return true;
    };
    auto trees_ok = [&](std::uint32_t s) {
        for (size_t p = 0; p < cross_mask.size(); ++p)
            if (__builtin_popcount(s & cross_mask[p]) < cross_need[p]) return false;
        return true;
    };

    BruteForceAnswer answer;
    for (std::uint32_t f = 0;; ++f) {
        if (orient_ok(f) && trees_ok(all & ~f)) {
            answer.decomposable = true;
            for (int c = 0; c < k; ++c)
                if ((f >> c) & 1u) answer.orientation_side.push_back(c);
            return answer;
        }
        if (f == all) break;
    }
    return answer;
}

// ---------------------------------------------------------------------------
// canonical tree codes, Prüfer, free-tree enumeration
// ---------------------------------------------------------------------------

namespace {

std::string rooted_code(const Multigraph& t, int v, int from) {
    std::vector<std::string> child;
    bool parent_skipped = false;
    for (int e : t.incident_copies(v)) {
        auto [x, y] = t.copy_endpoints(e);
        int w = (x == v) ? y : x;
        if (w == from && !parent_skipped) {
            parent_skipped = true;
            continue;
        }
        child.push_back(rooted_code(t, w, v));
    }
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const std::string& c : child) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Multigraph& t) {
    const int n = t.vertex_count();
    if (n <= 2) {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = t.degree(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            if (removed[static_cast<size_t>(v)]) continue;
            removed[static_cast<size_t>(v)] = 1;
            --remaining;
            for (int e : t.incident_copies(v)) {
                auto [x, y] = t.copy_endpoints(e);
                int w = (x == v) ? y : x;
                if (removed[static_cast<size_t>(w)]) continue;
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
    return centers;
}

}  // namespace

CanonicalTreeCode canonical_tree_code(const Multigraph& t) {
    if (!t.is_simple() || !t.connected() || t.total_copies() != t.vertex_count() - 1)
        throw NotATree("canonical_tree_code: input is not a tree");
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return {best};
}

Multigraph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) throw InvalidParams("prufer_decode: need at least 2 vertices");
    if (static_cast<int>(seq.size()) != n - 2)
        throw InvalidParams("prufer_decode: sequence length must be n-2");
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw InvalidParams("prufer_decode: label out of range");
        ++deg[static_cast<size_t>(s)];
    }
    std::vector<Multigraph::Bundle> bundles;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) {
                leaf = v;
                break;
            }
        bundles.push_back({leaf, s, 1});
        used[static_cast<size_t>(leaf)] = 1;
        --deg[static_cast<size_t>(s)];
        --deg[static_cast<size_t>(leaf)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 1) (a == -1 ? a : b) = v;
    bundles.push_back({a, b, 1});
    return Multigraph(n, std::move(bundles));
}

std::vector<Multigraph> free_trees_with_vertices(int n) {
    if (n < 1) throw InvalidParams("free_trees_with_vertices: n must be positive");
    std::vector<Multigraph> current;
    current.push_back(Multigraph(1, {}));
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> seen;
        std::vector<Multigraph> next;
        for (const Multigraph& t : current) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                std::vector<Multigraph::Bundle> bs = t.bundles();
                bs.push_back({v, size - 1, 1});
                Multigraph grown(size, std::move(bs));
                CanonicalTreeCode code = canonical_tree_code(grown);
                if (seen.insert(code.code).second) next.push_back(std::move(grown));
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<CanonicalTreeCode> free_tree_codes_by_prufer(int n) {
    std::set<std::string> codes;
    if (n == 1) {
        codes.insert("()");
    } else if (n == 2) {
        codes.insert(canonical_tree_code(prufer_decode({}, 2)).code);
    } else {
        std::vector<int> seq(static_cast<size_t>(n - 2), 0);
        for (;;) {
            codes.insert(canonical_tree_code(prufer_decode(seq, n)).code);
            int i = n - 3;
            while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) {
                seq[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++seq[static_cast<size_t>(i)];
        }
    }
    std::vector<CanonicalTreeCode> out;
    for (const std::string& c : codes) out.push_back({c});
    return out;
}

}  // namespace oracle
}  // namespace arbor
