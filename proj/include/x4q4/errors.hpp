#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace x4q4 {

// Library error with a stable machine-readable code. The CLI prints
// "error: <code>: <message>" on stderr and exits 1; tests match on code().
//
// Codes in use:
//   NotCoprime, FactorizationExceededBudget, BudgetExceeded,
//   UnsupportedConductor, RamifiedModulus, NotASolution, NoBranchMatched,
//   DomainError
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace x4q4
