#ifndef ARBOR_ERRORS_HPP
#define ARBOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arbor {

// Exit-status buckets used by the CLI. Negative decisions ("no" answers with a
// witness) are ordinary return values, not errors, and map to exit code 1.
enum class ErrorKind {
    format,        // malformed input files
    precondition,  // caller violated an operation contract
    budget,        // search budget or size cap exhausted
    internal,      // invariant failure: always a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(ErrorKind::format, msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

struct HostMismatch : Error {
    explicit HostMismatch(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

struct EmptyOrFullSet : Error {
    explicit EmptyOrFullSet(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

struct TooFewVertices : Error {
    explicit TooFewVertices(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

struct NotATree : Error {
    explicit NotATree(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(ErrorKind::precondition, msg) {}
};

// A constructive search ran out of road on an instance where the backing lemma
// guarantees existence. Signals an implementation limit, never a refutation.
struct InfeasibleWitness : Error {
    explicit InfeasibleWitness(const std::string& msg) : Error(ErrorKind::budget, msg) {}
};

struct SearchBudgetExceeded : Error {
    explicit SearchBudgetExceeded(const std::string& msg) : Error(ErrorKind::budget, msg) {}
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& msg) : Error(ErrorKind::budget, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(ErrorKind::internal, msg) {}
};

}  // namespace arbor

#endif
