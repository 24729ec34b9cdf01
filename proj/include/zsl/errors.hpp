#pragma once

#include <stdexcept>
#include <string>

namespace zsl {

// Caller handed us input that violates a documented precondition.
// Distinct from a falsification: falsifications are data, not exceptions.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The product DP passed its configured state cap. Exactness is the contract,
// so we stop instead of approximating; the caller should shrink the instance
// or raise the budget.
struct StateBudgetExceeded : std::runtime_error {
    explicit StateBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Text input (sequence grammar, group spec) could not be parsed.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::string tok)
        : std::runtime_error(what), token(std::move(tok)) {}
    std::string token;  // the offending token, for diagnostics
};

}  // namespace zsl
