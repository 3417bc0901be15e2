#ifndef ARBOR_GENERATE_HPP
#define ARBOR_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/multigraph.hpp"

namespace arbor::oracle {

struct GenerateParams {
    int n = 0;                 // circulant / regularish vertex count
    std::vector<int> offsets;  // circulant offsets, each in [1, n/2]
    int nx = 0, ny = 0;        // bipartite side sizes
    int max_mult = 1;          // bipartite: max multiplicity per pair
    int divisor = 1;           // bipartite: force X-degrees divisible by this
    int percent = 60;          // bipartite: chance a pair gets any copies
    int degree = 0;            // regularish target degree
    std::optional<Multigraph> base;  // doubled: graph to double
};

// Models: circulant | random_bipartite | random_regularish | doubled.
// Deterministic given the seed.
Multigraph generate(const std::string& model, const GenerateParams& params, std::uint64_t seed);

// Side labels for random_bipartite outputs: vertices [0, nx) are X.
std::vector<int> bipartite_x_vertices(int nx);

}  // namespace arbor::oracle

#endif
