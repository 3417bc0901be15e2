#ifndef ARBOR_CERTIFICATE_HPP
#define ARBOR_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "arbor/tree_pattern.hpp"

namespace arbor {

// One embedded copy of the pattern tree: an injective map pattern vertex ->
// host vertex plus the host edge copies realizing the pattern edges.
struct PatternCopy {
    std::vector<int> embedding;
    std::vector<int> edges;  // flat copy ids, sorted
};

// A T-edge-decomposition: the copies' edge sets partition the host's edge
// copies and each realizes the pattern under its embedding.
struct DecompositionCertificate {
    TreePattern pattern;
    std::vector<PatternCopy> copies;
    std::vector<std::string> provenance;  // pipeline stage records

    explicit DecompositionCertificate(TreePattern p) : pattern(std::move(p)) {}
};

struct VerifyResult {
    bool accepted = false;
    std::string reason;  // first violated clause, names the copy index
};

// Independent certificate check; total (never throws on bad certificates).
VerifyResult verify_decomposition(const Multigraph& g, const TreePattern& t,
                                  const DecompositionCertificate& cert);

}  // namespace arbor

#endif
