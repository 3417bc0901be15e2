#include "arbor/factors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "flow.hpp"

namespace arbor {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

std::vector<int> factor_degrees_of(const Factor& f) { return f.degrees(); }

}  // namespace

// ---------------------------------------------------------------------------
// Hoffman factor
// ---------------------------------------------------------------------------

Factor hoffman_factor_on(const BipartitionedGraph& g, const Factor& host, const Rational& eps) {
    g.require_strict("hoffman_factor");
    if (Rational(1, 1) < eps) throw PreconditionViolated("hoffman_factor: eps must be <= 1");
    if (eps.num == 0) return Factor::empty(g.graph);
    if (eps == Rational(1, 1)) return host;

    const int n = g.graph.vertex_count();
    std::vector<int> hdeg = factor_degrees_of(host);
    // Allowed degrees are the integers strictly inside (eps*d - 1, eps*d + 1):
    // exactly eps*d when integral, otherwise floor and ceil.
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int d = hdeg[static_cast<size_t>(v)];
        if (eps.times_is_integer(d)) {
            lo[static_cast<size_t>(v)] = hi[static_cast<size_t>(v)] =
                static_cast<int>(eps.floor_times(d));
        } else {
            lo[static_cast<size_t>(v)] = static_cast<int>(eps.floor_times(d));
            hi[static_cast<size_t>(v)] = static_cast<int>(eps.ceil_times(d));
        }
    }

    // Circulation: s -> x [lo,hi], copy arcs [0,1], y -> t [lo,hi], t -> s.
    const int s = n, t = n + 1;
    std::vector<detail::BoundedArc> arcs;
    std::vector<int> copy_arc;  // index into arcs per host copy position
    for (int v = 0; v < n; ++v) {
        if (g.side[static_cast<size_t>(v)] == Side::X)
            arcs.push_back({s, v, lo[static_cast<size_t>(v)], hi[static_cast<size_t>(v)]});
        else
            arcs.push_back({v, t, lo[static_cast<size_t>(v)], hi[static_cast<size_t>(v)]});
    }
    for (int c : host.copies()) {
        int x = g.endpoint_on(c, Side::X);
        int y = g.endpoint_on(c, Side::Y);
        copy_arc.push_back(static_cast<int>(arcs.size()));
        arcs.push_back({x, y, 0, 1});
    }
    arcs.push_back({t, s, 0, host.size()});
    std::vector<int> flow;
    if (!detail::feasible_circulation(n + 2, arcs, flow))
        throw InternalError("hoffman_factor: degree-constrained subgraph infeasible");

    std::vector<int> chosen;
    for (size_t i = 0; i < host.copies().size(); ++i)
        if (flow[static_cast<size_t>(copy_arc[i])] > 0) chosen.push_back(host.copies()[i]);
    Factor out(g.graph, std::move(chosen));
    // d_F(v) lands strictly within 1 of eps*d(v); recheck exactly.
    std::vector<int> fd = out.degrees();
    for (int v = 0; v < n; ++v)
        if (fd[static_cast<size_t>(v)] < lo[static_cast<size_t>(v)] ||
            fd[static_cast<size_t>(v)] > hi[static_cast<size_t>(v)])
            throw InternalError("hoffman_factor: degree window violated at vertex " +
                                std::to_string(v));
    return out;
}

Factor hoffman_factor(const BipartitionedGraph& g, const Rational& eps) {
    return hoffman_factor_on(g, Factor::full(g.graph), eps);
}

// ---------------------------------------------------------------------------
// modulo factor
// ---------------------------------------------------------------------------

namespace {

struct ModuloProblem {
    const BipartitionedGraph& g;
    const Factor& host;
    const std::vector<int>& f;
    int k;
    const Factor& fin;   // forced into H
    const Factor& fout;  // excluded from H
    const Factor& conn;  // the connector T

    std::vector<int> xs, ys;
    std::vector<int> hdeg, find_, f0deg, tdeg;
    std::vector<int> ylo, yhi;  // admissible total degrees on Y
    std::vector<int> free_copies;

    explicit ModuloProblem(const BipartitionedGraph& g_, const Factor& host_,
                           const std::vector<int>& f_, int k_, const Factor& fin_,
                           const Factor& fout_, const Factor& conn_)
        : g(g_), host(host_), f(f_), k(k_), fin(fin_), fout(fout_), conn(conn_) {
        const int n = g.graph.vertex_count();
        xs = g.side_vertices(Side::X);
        ys = g.side_vertices(Side::Y);
        hdeg = host.degrees();
        find_ = fin.degrees();
        f0deg = fout.degrees();
        tdeg = conn.degrees();
        ylo.assign(static_cast<size_t>(n), 0);
        yhi.assign(static_cast<size_t>(n), 0);
        for (int y : ys) {
            // Doubled arithmetic: 2*d_H > 2*d_F + d_T - 2k and
            // 2*d_H < 2*(d_host - d_F0) - d_T + 2k.
            int a = 2 * find_[static_cast<size_t>(y)] + tdeg[static_cast<size_t>(y)] - 2 * k;
            int b = 2 * (hdeg[static_cast<size_t>(y)] - f0deg[static_cast<size_t>(y)]) -
                    tdeg[static_cast<size_t>(y)] + 2 * k;
            ylo[static_cast<size_t>(y)] = std::max(floor_div(a, 2) + 1, find_[static_cast<size_t>(y)]);
            yhi[static_cast<size_t>(y)] = std::min(ceil_div(b, 2) - 1,
                                                   hdeg[static_cast<size_t>(y)] -
                                                       f0deg[static_cast<size_t>(y)]);
        }
        for (int c : host.copies())
            if (!fin.contains(c) && !fout.contains(c)) free_copies.push_back(c);
    }

    void check_preconditions() const {
        g.require_strict("modulo_factor");
        if (k < 1) throw PreconditionViolated("modulo_factor: k must be positive");
        if (!fin.subset_of(host) || !fout.subset_of(host) || !conn.subset_of(host))
            throw PreconditionViolated("modulo_factor: F, F0, T must be factors of the host");
        if (!fin.disjoint_from(fout) || !fin.disjoint_from(conn) || !fout.disjoint_from(conn))
            throw PreconditionViolated("modulo_factor: F, F0, T must be pairwise disjoint");
        long long sx = 0, sy = 0;
        for (int x : xs) sx += f[static_cast<size_t>(x)];
        for (int y : ys) sy += f[static_cast<size_t>(y)];
        if (((sy - sx) % k + k) % k != 0)
            throw PreconditionViolated("modulo_factor: sum of f over Y != sum over X (mod k)");
        for (int x : xs) {
            int lhs = 2 * find_[static_cast<size_t>(x)] + tdeg[static_cast<size_t>(x)];
            int rhs = 2 * (hdeg[static_cast<size_t>(x)] - f0deg[static_cast<size_t>(x)]) -
                      tdeg[static_cast<size_t>(x)];
            if (lhs > 2 * f[static_cast<size_t>(x)])
                throw PreconditionViolated(
                    "modulo_factor: f(" + std::to_string(x) + ") < d_F + d_T/2");
            if (2 * f[static_cast<size_t>(x)] > rhs)
                throw PreconditionViolated(
                    "modulo_factor: f(" + std::to_string(x) + ") > d_G - d_F0 - d_T/2");
        }
        if (3 * k - 3 >= 1 && g.graph.vertex_count() >= 2) {
            auto [sub, map] = conn.materialize();
            int ec = sub.connected() ? edge_connectivity(sub).value : 0;
            if (ec < 3 * k - 3)
                throw PreconditionViolated("modulo_factor: connector is not (3k-3)-edge-connected");
        }
    }

    // One circulation with exact Y totals (or windows when exact = false).
    bool solve_flow(const std::vector<int>& ywant, bool exact, std::vector<int>& h_out) const {
        const int n = g.graph.vertex_count();
        const int s = n, t = n + 1;
        std::vector<detail::BoundedArc> arcs;
        std::vector<std::pair<int, int>> copy_arcs;  // (free copy, arc index)
        for (int x : xs) {
            int need = f[static_cast<size_t>(x)] - find_[static_cast<size_t>(x)];
            if (need < 0) return false;
            arcs.push_back({s, x, need, need});
        }
        for (int y : ys) {
            int a, b;
            if (exact) {
                a = b = ywant[static_cast<size_t>(y)] - find_[static_cast<size_t>(y)];
            } else {
                a = std::max(0, ylo[static_cast<size_t>(y)] - find_[static_cast<size_t>(y)]);
                b = yhi[static_cast<size_t>(y)] - find_[static_cast<size_t>(y)];
            }
            if (a < 0 || b < a) return false;
            arcs.push_back({y, t, a, b});
        }
        for (int c : free_copies) {
            int x = g.endpoint_on(c, Side::X);
            int y = g.endpoint_on(c, Side::Y);
            copy_arcs.push_back({c, static_cast<int>(arcs.size())});
            arcs.push_back({x, y, 0, 1});
        }
        arcs.push_back({t, s, 0, host.size()});
        std::vector<int> flow;
        if (!detail::feasible_circulation(n + 2, arcs, flow)) return false;
        h_out = fin.copies();
        for (auto& [c, arc] : copy_arcs)
            if (flow[static_cast<size_t>(arc)] > 0) h_out.push_back(c);
        std::sort(h_out.begin(), h_out.end());
        return true;
    }
};

}  // namespace

void verify_modulo_post(const BipartitionedGraph& g, const Factor& host, const std::vector<int>& f,
                        int k, const Factor& force_in, const Factor& force_out,
                        const Factor& connector, const Factor& h) {
    if (!force_in.subset_of(h)) throw InternalError("modulo post: F not inside H");
    if (!h.disjoint_from(force_out)) throw InternalError("modulo post: H meets F0");
    if (!h.subset_of(host)) throw InternalError("modulo post: H leaves the host");
    std::vector<int> hd = h.degrees(), hostd = host.degrees(), fd = force_in.degrees(),
                     f0d = force_out.degrees(), td = connector.degrees();
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
        if (g.side[static_cast<size_t>(v)] == Side::X) {
            if (hd[static_cast<size_t>(v)] != f[static_cast<size_t>(v)])
                throw InternalError("modulo post: exact degree violated at X vertex " +
                                    std::to_string(v));
        } else {
            int r = ((hd[static_cast<size_t>(v)] - f[static_cast<size_t>(v)]) % k + k) % k;
            if (r != 0)
                throw InternalError("modulo post: residue violated at Y vertex " +
                                    std::to_string(v));
            // min{d_H - d_F, d_H0 - d_F0} > d_T/2 - k, doubled.
            int slack1 = hd[static_cast<size_t>(v)] - fd[static_cast<size_t>(v)];
            int slack0 = (hostd[static_cast<size_t>(v)] - hd[static_cast<size_t>(v)]) -
                         f0d[static_cast<size_t>(v)];
            int bound = td[static_cast<size_t>(v)] - 2 * k;
            if (2 * std::min(slack1, slack0) <= bound)
                throw InternalError("modulo post: connector slack violated at Y vertex " +
                                    std::to_string(v));
        }
    }
}

Factor modulo_factor_on(const BipartitionedGraph& g, const Factor& host, const std::vector<int>& f,
                        int k, const Factor& force_in, const Factor& force_out,
                        const Factor& connector, const SearchLimits& limits) {
    if (static_cast<int>(f.size()) != g.graph.vertex_count())
        throw PreconditionViolated("modulo_factor: f must assign a value to every vertex");
    ModuloProblem prob(g, host, f, k, force_in, force_out, connector);
    prob.check_preconditions();

    // Stage 1: hit the X degrees inside the Y windows, residues ignored.
    std::vector<int> h_copies;
    if (prob.solve_flow({}, false, h_copies)) {
        Factor h(g.graph, h_copies);
        std::vector<int> hd = h.degrees();
        bool residues_ok = true;
        for (int y : prob.ys)
            if (((hd[static_cast<size_t>(y)] - f[static_cast<size_t>(y)]) % k + k) % k != 0)
                residues_ok = false;
        // Stage 2: repair Y residues by alternating exchanges through X,
        // preferring connector edges, X degrees preserved throughout.
        if (!residues_ok && k > 1) {
            auto dist = [&](int y, const std::vector<int>& d) {
                int r = ((d[static_cast<size_t>(y)] - f[static_cast<size_t>(y)]) % k + k) % k;
                return std::min(r, k - r);
            };
            auto total = [&](const std::vector<int>& d) {
                int t = 0;
                for (int y : prob.ys) t += dist(y, d);
                return t;
            };
            std::vector<char> in_h(static_cast<size_t>(g.graph.total_copies()), 0);
            for (int c : h.copies()) in_h[static_cast<size_t>(c)] = 1;
            auto ordered = prob.free_copies;
            std::stable_sort(ordered.begin(), ordered.end(), [&](int a, int b) {
                bool ta = connector.contains(a), tb = connector.contains(b);
                return ta != tb ? ta : a < b;
            });
            int guard = 8 * k * static_cast<int>(prob.ys.size() * prob.ys.size()) + 64;
            while (guard-- > 0) {
                int before = total(hd);
                if (before == 0) break;
                bool moved = false;
                // One unit moves from y2 to y1 through a shared X vertex.
                for (int add : ordered) {
                    if (in_h[static_cast<size_t>(add)]) continue;
                    int x = g.endpoint_on(add, Side::X);
                    int y1 = g.endpoint_on(add, Side::Y);
                    if (hd[static_cast<size_t>(y1)] + 1 > prob.yhi[static_cast<size_t>(y1)]) continue;
                    for (int rem : g.graph.incident_copies(x)) {
                        if (!in_h[static_cast<size_t>(rem)] || force_in.contains(rem)) continue;
                        int y2 = g.endpoint_on(rem, Side::Y);
                        if (y2 == y1) continue;
                        if (hd[static_cast<size_t>(y2)] - 1 < prob.ylo[static_cast<size_t>(y2)]) continue;
                        ++hd[static_cast<size_t>(y1)];
                        --hd[static_cast<size_t>(y2)];
                        if (total(hd) < before) {
                            in_h[static_cast<size_t>(add)] = 1;
                            in_h[static_cast<size_t>(rem)] = 0;
                            moved = true;
                            break;
                        }
                        --hd[static_cast<size_t>(y1)];
                        ++hd[static_cast<size_t>(y2)];
                    }
                    if (moved) break;
                }
                if (!moved) break;
            }
            std::vector<int> repaired;
            for (int c = 0; c < g.graph.total_copies(); ++c)
                if (in_h[static_cast<size_t>(c)]) repaired.push_back(c);
            h = Factor(g.graph, std::move(repaired));
            hd = h.degrees();
            residues_ok = true;
            for (int y : prob.ys)
                if (((hd[static_cast<size_t>(y)] - f[static_cast<size_t>(y)]) % k + k) % k != 0)
                    residues_ok = false;
        }
        if (residues_ok || k == 1) {
            if (residues_ok) {
                verify_modulo_post(g, host, f, k, force_in, force_out, connector, h);
                return h;
            }
        }
    }

    // Stage 3: complete search. Enumerate admissible Y degree vectors (window
    // + residue class, correct total) and solve one exact circulation each; a
    // valid H exists iff some vector admits a flow.
    long long want_total = 0;
    for (int x : prob.xs) want_total += f[static_cast<size_t>(x)];
    std::vector<std::vector<int>> choices;
    for (int y : prob.ys) {
        std::vector<int> vals;
        for (int w = prob.ylo[static_cast<size_t>(y)]; w <= prob.yhi[static_cast<size_t>(y)]; ++w)
            if (((w - f[static_cast<size_t>(y)]) % k + k) % k == 0) vals.push_back(w);
        if (vals.empty())
            throw InfeasibleWitness("modulo_factor: empty residue window at Y vertex " +
                                    std::to_string(y));
        choices.push_back(std::move(vals));
    }
    const size_t yn = prob.ys.size();
    std::vector<long long> suffix_min(yn + 1, 0), suffix_max(yn + 1, 0);
    for (size_t i = yn; i-- > 0;) {
        suffix_min[i] = suffix_min[i + 1] + choices[i].front();
        suffix_max[i] = suffix_max[i + 1] + choices[i].back();
    }
    std::vector<int> pick(static_cast<size_t>(g.graph.vertex_count()), 0);
    std::uint64_t tried = 0;
    std::vector<int> solved;
    std::function<bool(size_t, long long)> enumerate = [&](size_t i, long long remaining) -> bool {
        if (i == yn) {
            if (remaining != 0) return false;
            if (++tried > limits.budget)
                throw InfeasibleWitness("modulo_factor: search budget exhausted");
            return prob.solve_flow(pick, true, solved);
        }
        for (int w : choices[i]) {
            long long rest = remaining - w;
            if (rest < suffix_min[i + 1] || rest > suffix_max[i + 1]) continue;
            pick[static_cast<size_t>(prob.ys[i])] = w;
            if (enumerate(i + 1, rest)) return true;
        }
        return false;
    };
    if (!enumerate(0, want_total))
        throw InfeasibleWitness(
            "modulo_factor: no admissible factor at desk scale (host " +
            std::to_string(host.size()) + " copies, k=" + std::to_string(k) + ")");
    Factor h(g.graph, solved);
    verify_modulo_post(g, host, f, k, force_in, force_out, connector, h);
    return h;
}

Factor modulo_factor(const BipartitionedGraph& g, const std::vector<int>& f, int k,
                     const Factor& force_in, const Factor& force_out, const Factor& connector,
                     const SearchLimits& limits) {
    return modulo_factor_on(g, Factor::full(g.graph), f, k, force_in, force_out, connector,
                            limits);
}

// ---------------------------------------------------------------------------
// multi-factor engine
// ---------------------------------------------------------------------------

std::vector<Factor> multi_modulo_decompose(const BipartitionedGraph& g, const DegreePlan& plan,
                                           const FactorSystem& system,
                                           const SearchLimits& limits) {
    const int b = static_cast<int>(plan.moduli.size());
    if (static_cast<int>(plan.targets.size()) != b)
        throw PreconditionViolated("multi_modulo_decompose: moduli/targets size mismatch");
    if (static_cast<int>(system.reserved.size()) != b + 1)
        throw PreconditionViolated("multi_modulo_decompose: need F_0..F_b");
    if (static_cast<int>(system.connectors.size()) != b)
        throw PreconditionViolated("multi_modulo_decompose: need T_1..T_b");
    g.require_strict("multi_modulo_decompose");

    // System invariants: pairwise disjoint, connector connectivity.
    std::vector<const Factor*> all;
    for (const Factor& f : system.reserved) all.push_back(&f);
    for (const Factor& f : system.connectors) all.push_back(&f);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!all[i]->disjoint_from(*all[j]))
                throw PreconditionViolated("multi_modulo_decompose: system factors overlap");

    std::vector<std::vector<int>> fdeg, tdeg;
    for (const Factor& f : system.reserved) fdeg.push_back(f.degrees());
    for (const Factor& t : system.connectors) tdeg.push_back(t.degrees());
    std::vector<int> gdeg(static_cast<size_t>(g.graph.vertex_count()));
    for (int v = 0; v < g.graph.vertex_count(); ++v) gdeg[static_cast<size_t>(v)] = g.graph.degree(v);

    std::vector<int> xs = g.side_vertices(Side::X), ys = g.side_vertices(Side::Y);
    for (int i = 1; i <= b; ++i) {
        const std::vector<int>& fi = plan.targets[static_cast<size_t>(i - 1)];
        if (static_cast<int>(fi.size()) != g.graph.vertex_count())
            throw PreconditionViolated("multi_modulo_decompose: target " + std::to_string(i) +
                                       " has wrong size");
        long long sx = 0, sy = 0;
        for (int x : xs) sx += fi[static_cast<size_t>(x)];
        for (int y : ys) sy += fi[static_cast<size_t>(y)];
        int ki = plan.moduli[static_cast<size_t>(i - 1)];
        if (((sy - sx) % ki + ki) % ki != 0)
            throw PreconditionViolated("multi_modulo_decompose: congruence fails at index " +
                                       std::to_string(i));
        for (int x : xs) {
            // d_{F_i} + d_{T_i}/2 <= f_i, doubled.
            if (2 * fdeg[static_cast<size_t>(i)][static_cast<size_t>(x)] +
                    tdeg[static_cast<size_t>(i - 1)][static_cast<size_t>(x)] >
                2 * fi[static_cast<size_t>(x)])
                throw PreconditionViolated("multi_modulo_decompose: lower window fails at index " +
                                           std::to_string(i) + ", vertex " + std::to_string(x));
            // sum_{t<=i} f_t + d_{T_i}/2 + sum_{t>i}(d_{T_t}+d_{F_t})
            //   <= d_G - d_{F_0}, doubled.
            long long lhs = tdeg[static_cast<size_t>(i - 1)][static_cast<size_t>(x)];
            for (int tt = 1; tt <= i; ++tt)
                lhs += 2ll * plan.targets[static_cast<size_t>(tt - 1)][static_cast<size_t>(x)];
            for (int tt = i + 1; tt <= b; ++tt)
                lhs += 2ll * (tdeg[static_cast<size_t>(tt - 1)][static_cast<size_t>(x)] +
                              fdeg[static_cast<size_t>(tt)][static_cast<size_t>(x)]);
            long long rhs = 2ll * (gdeg[static_cast<size_t>(x)] -
                                   fdeg[0][static_cast<size_t>(x)]);
            if (lhs > rhs)
                throw PreconditionViolated("multi_modulo_decompose: upper window fails at index " +
                                           std::to_string(i) + ", vertex " + std::to_string(x));
        }
    }

    // The induction. M_1 = complement of the union of the 2b+1 factors.
    Factor used_by_system = Factor::empty(g.graph);
    for (const Factor* f : all) used_by_system = used_by_system.unite(*f);
    Factor m_cur = used_by_system.complement();

    std::vector<Factor> result(static_cast<size_t>(b + 1), Factor::empty(g.graph));
    for (int nstep = 1; nstep <= b; ++nstep) {
        Factor h_n = m_cur.unite(system.connectors[static_cast<size_t>(nstep - 1)])
                         .unite(system.reserved[static_cast<size_t>(nstep)]);
        Factor g_n = modulo_factor_on(g, h_n, plan.targets[static_cast<size_t>(nstep - 1)],
                                      plan.moduli[static_cast<size_t>(nstep - 1)],
                                      system.reserved[static_cast<size_t>(nstep)],
                                      Factor::empty(g.graph),
                                      system.connectors[static_cast<size_t>(nstep - 1)], limits);
        result[static_cast<size_t>(nstep)] = g_n;
        m_cur = h_n.subtract(g_n);
    }
    Factor taken = Factor::empty(g.graph);
    for (int i = 1; i <= b; ++i) taken = taken.unite(result[static_cast<size_t>(i)]);
    result[0] = taken.complement();

    // Post: partition, inclusion, degrees, residues, slack.
    long long size_sum = 0;
    for (const Factor& f : result) size_sum += f.size();
    if (size_sum != g.graph.total_copies())
        throw InternalError("multi_modulo_decompose: output does not partition E(g)");
    for (int i = 0; i <= b; ++i)
        if (!system.reserved[static_cast<size_t>(i)].subset_of(result[static_cast<size_t>(i)]))
            throw InternalError("multi_modulo_decompose: F_" + std::to_string(i) +
                                " escaped its factor");
    for (int i = 1; i <= b; ++i) {
        std::vector<int> d = result[static_cast<size_t>(i)].degrees();
        int ki = plan.moduli[static_cast<size_t>(i - 1)];
        for (int x : xs)
            if (d[static_cast<size_t>(x)] !=
                plan.targets[static_cast<size_t>(i - 1)][static_cast<size_t>(x)])
                throw InternalError("multi_modulo_decompose: exact degree fails at index " +
                                    std::to_string(i));
        for (int y : ys) {
            int r = ((d[static_cast<size_t>(y)] -
                      plan.targets[static_cast<size_t>(i - 1)][static_cast<size_t>(y)]) %
                         ki +
                     ki) %
                    ki;
            if (r != 0)
                throw InternalError("multi_modulo_decompose: residue fails at index " +
                                    std::to_string(i));
            if (2 * d[static_cast<size_t>(y)] <=
                tdeg[static_cast<size_t>(i - 1)][static_cast<size_t>(y)] - 2 * ki)
                throw InternalError("multi_modulo_decompose: slack fails at index " +
                                    std::to_string(i));
        }
    }
    if (b >= 1) {
        std::vector<int> d0 = result[0].degrees();
        int kb = plan.moduli[static_cast<size_t>(b - 1)];
        for (int y : ys)
            if (2 * d0[static_cast<size_t>(y)] <=
                tdeg[static_cast<size_t>(b - 1)][static_cast<size_t>(y)] - 2 * kb)
                throw InternalError("multi_modulo_decompose: G_0 slack fails");
    }
    return result;
}

// ---------------------------------------------------------------------------
// semi-regular split
// ---------------------------------------------------------------------------

namespace {

// Splits an orientation into two halves, each out-degree >= floor(out/2).
std::pair<Orientation, Orientation> split_orientation(const Multigraph& g, const Orientation& o) {
    std::vector<std::vector<size_t>> by_tail(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < o.tails.size(); ++i)
        by_tail[static_cast<size_t>(o.tails[i])].push_back(i);
    std::vector<std::pair<int, int>> half1, half2;  // (copy, tail)
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& mine = by_tail[static_cast<size_t>(v)];
        for (size_t j = 0; j < mine.size(); ++j) {
            int copy = o.factor.copies()[mine[j]];
            (j % 2 == 0 ? half1 : half2).push_back({copy, v});
        }
    }
    auto build = [&](std::vector<std::pair<int, int>>& picks) {
        std::sort(picks.begin(), picks.end());
        Orientation out;
        std::vector<int> copies;
        for (auto& [c, t] : picks) {
            copies.push_back(c);
            out.tails.push_back(t);
        }
        out.factor = Factor(g, std::move(copies));
        return out;
    };
    return {build(half1), build(half2)};
}

PartitionConnectivityCertificate make_cert(const Multigraph& g, std::vector<Factor> trees,
                                           Orientation oriented, int m, int l) {
    PartitionConnectivityCertificate cert;
    cert.trees = std::move(trees);
    cert.oriented = std::move(oriented);
    cert.m = m;
    cert.l = l;
    cert.verify(g);
    return cert;
}

}  // namespace

SemiRegularSplit semi_regular_split(const BipartitionedGraph& g, int m, int lambda, int l,
                                    const SearchLimits& limits) {
    g.require_strict("semi_regular_split");
    if (m < 1) throw PreconditionViolated("semi_regular_split: m must be positive");
    if (g.graph.total_copies() % m != 0)
        throw PreconditionViolated("semi_regular_split: |E| not divisible by m");
    PartitionDecision pre = partition_connected_decompose(g.graph, 2 * lambda + 2 * m, 2 * l);
    if (!pre.success())
        throw PreconditionViolated(
            "semi_regular_split: graph is not (2*lambda+2m, 2l)-partition-connected");
    const PartitionConnectivityCertificate& base = *pre.certificate;

    std::vector<int> xs = g.side_vertices(Side::X), ys = g.side_vertices(Side::Y);

    // Constructive route: reserve lambda trees + half an orientation per side,
    // connect through the remaining 2m trees, and carve G_1 by the modulo
    // machinery with k = m.
    auto constructive = [&]() -> SemiRegularSplit {
        auto [half1, half2] = split_orientation(g.graph, base.oriented);
        std::vector<Factor> trees1(base.trees.begin(), base.trees.begin() + lambda);
        std::vector<Factor> trees2(base.trees.begin() + lambda, base.trees.begin() + 2 * lambda);
        Factor conn = Factor::empty(g.graph);
        for (int i = 2 * lambda; i < 2 * lambda + 2 * m; ++i)
            conn = conn.unite(base.trees[static_cast<size_t>(i)]);
        Factor p1 = half1.factor;
        for (const Factor& t : trees1) p1 = p1.unite(t);
        Factor p2 = half2.factor;
        for (const Factor& t : trees2) p2 = p2.unite(t);

        // Targets: multiples of m near d/2 inside the window on X, the degree
        // residue itself on Y.
        std::vector<int> p1d = p1.degrees(), p2d = p2.degrees(), cd = conn.degrees();
        std::vector<int> f(static_cast<size_t>(g.graph.vertex_count()), 0);
        for (int x : xs) {
            int dg = g.graph.degree(x);
            int lo2 = 2 * p1d[static_cast<size_t>(x)] + cd[static_cast<size_t>(x)];
            int hi2 = 2 * (dg - p2d[static_cast<size_t>(x)]) - cd[static_cast<size_t>(x)];
            int center = dg / (2 * m);
            int found = -1;
            for (int off = 0; off <= dg / m + 1 && found == -1; ++off) {
                for (int sgn : {0, 1}) {
                    int cand = center + (sgn ? -off : off);
                    if (sgn && off == 0) continue;
                    int val = 2 * cand * m;
                    if (cand >= 0 && val >= lo2 && val <= hi2) {
                        found = cand * m;
                        break;
                    }
                }
            }
            if (found == -1)
                throw InfeasibleWitness("semi_regular_split: no multiple of m in the window");
            f[static_cast<size_t>(x)] = found;
        }
        for (int y : ys) f[static_cast<size_t>(y)] = g.graph.degree(y) % m;

        Factor g1 = modulo_factor_on(g, Factor::full(g.graph), f, m, p1, p2, conn, limits);
        Factor g2 = g1.complement();
        SemiRegularSplit out{g1, g2,
                             make_cert(g.graph, trees1, half1, lambda, l),
                             make_cert(g.graph, trees2, half2, lambda, l)};
        return out;
    };

    auto verify_split = [&](const SemiRegularSplit& s) {
        std::vector<int> d1 = s.g1.degrees(), d2 = s.g2.degrees();
        for (int x : xs)
            if (d1[static_cast<size_t>(x)] % m != 0)
                throw InternalError("semi_regular_split: X divisibility fails");
        for (int y : ys)
            if (d2[static_cast<size_t>(y)] % m != 0)
                throw InternalError("semi_regular_split: Y divisibility fails");
        if (!s.g1.disjoint_from(s.g2) || s.g1.size() + s.g2.size() != g.graph.total_copies())
            throw InternalError("semi_regular_split: not a partition");
        for (const Factor& t : s.cert1.trees)
            if (!t.subset_of(s.g1)) throw InternalError("semi_regular_split: cert1 escapes G_1");
        if (!s.cert1.oriented.factor.subset_of(s.g1))
            throw InternalError("semi_regular_split: cert1 escapes G_1");
        for (const Factor& t : s.cert2.trees)
            if (!t.subset_of(s.g2)) throw InternalError("semi_regular_split: cert2 escapes G_2");
        if (!s.cert2.oriented.factor.subset_of(s.g2))
            throw InternalError("semi_regular_split: cert2 escapes G_2");
    };

    try {
        SemiRegularSplit out = constructive();
        verify_split(out);
        return out;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::internal) throw;
        // Route failure, not a caller error: fall through to the exhaustive
        // split below.
    }

    // Exhaustive fallback over G_1 copy sets, grouped by X vertex so the X
    // divisibility prunes early.
    const int total = g.graph.total_copies();
    if (total > 26)
        throw InfeasibleWitness("semi_regular_split: constructive route failed and the instance "
                                "is too large for the exhaustive fallback");
    std::vector<int> order;  // copies grouped by X endpoint
    std::vector<size_t> group_end;
    for (int x : xs) {
        for (int c : g.graph.incident_copies(x)) order.push_back(c);
        group_end.push_back(order.size());
    }
    std::vector<char> chosen(static_cast<size_t>(total), 0);
    std::uint64_t nodes = 0;
    std::optional<SemiRegularSplit> found;
    std::function<bool(size_t, size_t, int)> rec = [&](size_t idx, size_t group,
                                                       int group_count) -> bool {
        if (++nodes > limits.budget)
            throw InfeasibleWitness("semi_regular_split: fallback budget exhausted");
        if (group < group_end.size() && idx == group_end[group]) {
            if (group_count % m != 0) return false;
            return rec(idx, group + 1, 0);
        }
        if (idx == order.size()) {
            std::vector<int> g1_copies;
            for (int c = 0; c < total; ++c)
                if (chosen[static_cast<size_t>(c)]) g1_copies.push_back(c);
            Factor g1(g.graph, g1_copies);
            Factor g2 = g1.complement();
            std::vector<int> d2 = g2.degrees();
            for (int y : ys)
                if (d2[static_cast<size_t>(y)] % m != 0) return false;
            auto [s1, map1] = g1.materialize();
            PartitionDecision pd1 = partition_connected_decompose(s1, lambda, l);
            if (!pd1.success()) return false;
            auto [s2, map2] = g2.materialize();
            PartitionDecision pd2 = partition_connected_decompose(s2, lambda, l);
            if (!pd2.success()) return false;
            found = SemiRegularSplit{g1, g2, lift_certificate(g.graph, *pd1.certificate, map1),
                                     lift_certificate(g.graph, *pd2.certificate, map2)};
            return true;
        }
        int c = order[idx];
        chosen[static_cast<size_t>(c)] = 1;
        if (rec(idx + 1, group, group_count + 1)) return true;
        chosen[static_cast<size_t>(c)] = 0;
        return rec(idx + 1, group, group_count);
    };
    if (rec(0, 0, 0) && found) {
        verify_split(*found);
        return std::move(*found);
    }
    throw InfeasibleWitness("semi_regular_split: exhaustive search found no admissible split");
}

// ---------------------------------------------------------------------------
// nested factor chain
// ---------------------------------------------------------------------------

std::vector<Factor> nested_factor_chain_on(const BipartitionedGraph& g, const Factor& base,
                                           int m) {
    if (m < 1) throw PreconditionViolated("nested_factor_chain: m must be positive");
    std::vector<Factor> chain{base};
    Rational eps(1, m + 1);
    for (int i = 1; i < m; ++i) {
        const Factor& prev = chain.back();
        Factor next = hoffman_factor_on(g, prev, eps);
        std::vector<int> pd = prev.degrees(), nd = next.degrees();
        for (int v = 0; v < g.graph.vertex_count(); ++v) {
            int d = pd[static_cast<size_t>(v)];
            int lo = d / (m + 1);
            int hi = (d + m) / (m + 1);
            if (nd[static_cast<size_t>(v)] < lo || nd[static_cast<size_t>(v)] > hi)
                throw InternalError("nested_factor_chain: Hoffman window violated");
        }
        chain.push_back(std::move(next));
    }
    return chain;
}

std::vector<Factor> nested_factor_chain(const BipartitionedGraph& g, int m) {
    return nested_factor_chain_on(g, Factor::full(g.graph), m);
}

}  // namespace arbor
