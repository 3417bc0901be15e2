#ifndef ARBOR_FACTORS_HPP
#define ARBOR_FACTORS_HPP

#include <vector>

#include "arbor/bipartite.hpp"
#include "arbor/connectivity.hpp"
#include "arbor/factor.hpp"
#include "arbor/rational.hpp"

namespace arbor {

// ---------------------------------------------------------------------------
// Hoffman factors: |d_F(v) - eps*d(v)| < 1 at every vertex, exact arithmetic.
// ---------------------------------------------------------------------------

Factor hoffman_factor(const BipartitionedGraph& g, const Rational& eps);
// Same guarantee relative to the degrees of a host factor; the result is a
// subset of the host's copies.
Factor hoffman_factor_on(const BipartitionedGraph& g, const Factor& host, const Rational& eps);

// ---------------------------------------------------------------------------
// modulo factor: exact degrees on X, degree residues mod k on Y
// ---------------------------------------------------------------------------

// Finds H with force_in ⊆ H ⊆ host \ force_out such that d_H(x) = f(x) on X,
// d_H(y) ≡ f(y) (mod k) on Y, and both-side slack beyond the connector:
// min{d_H(y)-d_F(y), d_H0(y)-d_F0(y)} > d_T(y)/2 - k (H0 = host complement).
// The connector T must be (3k-3)-edge-connected.
Factor modulo_factor(const BipartitionedGraph& g, const std::vector<int>& f, int k,
                     const Factor& force_in, const Factor& force_out, const Factor& connector,
                     const SearchLimits& limits = {});
Factor modulo_factor_on(const BipartitionedGraph& g, const Factor& host, const std::vector<int>& f,
                        int k, const Factor& force_in, const Factor& force_out,
                        const Factor& connector, const SearchLimits& limits = {});

// Recheck of the full post-condition; throws InternalError on any violation.
void verify_modulo_post(const BipartitionedGraph& g, const Factor& host, const std::vector<int>& f,
                        int k, const Factor& force_in, const Factor& force_out,
                        const Factor& connector, const Factor& h);

// ---------------------------------------------------------------------------
// multi-factor engine (the inductive construction behind the b+1 split)
// ---------------------------------------------------------------------------

struct DegreePlan {
    std::vector<int> moduli;                // k_1..k_b
    std::vector<std::vector<int>> targets;  // f_1..f_b, per vertex
};

struct FactorSystem {
    std::vector<Factor> reserved;    // F_0..F_b (b+1 factors)
    std::vector<Factor> connectors;  // T_1..T_b
};

// Decomposes g into G_0..G_b with F_i ⊆ G_i, exact X-degrees f_i, Y-degree
// residues mod k_i and the connector slack bounds. Runs the induction:
// maintain M_n, set H_n = M_n ∪ T_n ∪ F_n, carve G_n out by modulo_factor,
// continue on M_{n+1} = H_n \ G_n, finish with G_0 = complement.
std::vector<Factor> multi_modulo_decompose(const BipartitionedGraph& g, const DegreePlan& plan,
                                           const FactorSystem& system,
                                           const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// semi-regular split: degrees divisible by m on X in one half, on Y in the
// other, both halves (lambda, l)-partition-connected
// ---------------------------------------------------------------------------

struct SemiRegularSplit {
    Factor g1, g2;
    PartitionConnectivityCertificate cert1, cert2;
};

SemiRegularSplit semi_regular_split(const BipartitionedGraph& g, int m, int lambda, int l,
                                    const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// nested factor chain via repeated Hoffman factors with eps = 1/(m+1)
// ---------------------------------------------------------------------------

// H_1 = base ⊇ H_2 ⊇ ... ⊇ H_m with
// floor(d_{H_i}(v)/(m+1)) <= d_{H_{i+1}}(v) <= ceil(d_{H_i}(v)/(m+1)).
std::vector<Factor> nested_factor_chain(const BipartitionedGraph& g, int m);
std::vector<Factor> nested_factor_chain_on(const BipartitionedGraph& g, const Factor& base, int m);

}  // namespace arbor

#endif
