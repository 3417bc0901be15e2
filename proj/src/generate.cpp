#include "arbor/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arbor/rng.hpp"

namespace arbor::oracle {

namespace {

Multigraph gen_circulant(const GenerateParams& p) {
    const int n = p.n;
    if (n < 3) throw InvalidParams("circulant: n must be at least 3");
    if (p.offsets.empty()) throw InvalidParams("circulant: need at least one offset");
    std::vector<int> offs = p.offsets;
    std::sort(offs.begin(), offs.end());
    if (std::unique(offs.begin(), offs.end()) != offs.end())
        throw InvalidParams("circulant: duplicate offsets");
    std::vector<Multigraph::Bundle> bs;
    for (int s : offs) {
        if (s < 1 || 2 * s > n) throw InvalidParams("circulant: offset out of range [1, n/2]");
        if (2 * s == n) {
            for (int i = 0; i < n / 2; ++i) bs.push_back({i, i + s, 1});
        } else {
            for (int i = 0; i < n; ++i) bs.push_back({i, (i + s) % n, 1});
        }
    }
    return Multigraph(n, std::move(bs));
}

Multigraph gen_random_bipartite(const GenerateParams& p, std::uint64_t seed) {
    if (p.nx < 1 || p.ny < 1) throw InvalidParams("random_bipartite: side sizes must be positive");
    if (p.max_mult < 1) throw InvalidParams("random_bipartite: max_mult must be positive");
    if (p.divisor < 1) throw InvalidParams("random_bipartite: divisor must be positive");
    Rng rng(seed);
    const int n = p.nx + p.ny;
    std::map<std::pair<int, int>, int> mult;
    for (int x = 0; x < p.nx; ++x)
        for (int y = 0; y < p.ny; ++y)
            if (rng.chance(p.percent)) mult[{x, p.nx + y}] = rng.uniform(1, p.max_mult);
    // Repair pass: bump multiplicities until every X-degree divides out.
    if (p.divisor > 1) {
        for (int x = 0; x < p.nx; ++x) {
            int d = 0;
            for (int y = 0; y < p.ny; ++y) {
                auto it = mult.find({x, p.nx + y});
                if (it != mult.end()) d += it->second;
            }
            int missing = (p.divisor - d % p.divisor) % p.divisor;
            for (int i = 0; i < missing; ++i) {
                int y = rng.uniform(0, p.ny - 1);
                ++mult[{x, p.nx + y}];
            }
        }
    }
    std::vector<Multigraph::Bundle> bs;
    for (auto& [key, m] : mult) bs.push_back({key.first, key.second, m});
    return Multigraph(n, std::move(bs));
}

Multigraph gen_random_regularish(const GenerateParams& p, std::uint64_t seed) {
    if (p.n < 2) throw InvalidParams("random_regularish: n must be at least 2");
    if (p.degree < 1) throw InvalidParams("random_regularish: degree must be positive");
    Rng rng(seed);
    // Pairing model: d stubs per vertex, random matching, loops resampled.
    std::vector<int> stubs;
    for (int v = 0; v < p.n; ++v)
        for (int i = 0; i < p.degree; ++i) stubs.push_back(v);
    if (stubs.size() % 2) stubs.push_back(rng.uniform(0, p.n - 1));
    for (size_t i = stubs.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.uniform(0, static_cast<int>(i) - 1));
        std::swap(stubs[i - 1], stubs[j]);
    }
    std::map<std::pair<int, int>, int> mult;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        int guard = 0;
        while (u == v && guard++ < 64) v = rng.uniform(0, p.n - 1);
        if (u == v) continue;
        ++mult[std::minmax(u, v)];
    }
    std::vector<Multigraph::Bundle> bs;
    for (auto& [key, m] : mult) bs.push_back({key.first, key.second, m});
    return Multigraph(p.n, std::move(bs));
}

}  // namespace

Multigraph generate(const std::string& model, const GenerateParams& params, std::uint64_t seed) {
    if (model == "circulant") return gen_circulant(params);
    if (model == "random_bipartite") return gen_random_bipartite(params, seed);
    if (model == "random_regularish") return gen_random_regularish(params, seed);
    if (model == "doubled") {
        if (!params.base) throw InvalidParams("doubled: base graph required");
        return scale_multiplicity(*params.base, 2);
    }
    throw InvalidParams("generate: unknown model '" + model + "'");
}

std::vector<int> bipartite_x_vertices(int nx) {
    std::vector<int> out(static_cast<size_t>(nx));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace arbor::oracle
