#pragma once

#include <stdexcept>
#include <string>

namespace sltk {

// Two families: InputError (bad or inconsistent caller data) and
// NumericError (a numerical procedure failed to reach its tolerance).
// The CLI maps them to exit codes 2 and 3.

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::string code = "input")
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    /// Best residual or error bound reached before giving up.
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct IncompleteSpectrumError : InputError {
    explicit IncompleteSpectrumError(const std::string& w) : InputError(w, "incomplete-spectrum") {}
};

struct PreconditionError : InputError {
    explicit PreconditionError(const std::string& w) : InputError(w, "precondition") {}
};

struct FeasibilityError : InputError {
    explicit FeasibilityError(const std::string& w) : InputError(w, "infeasible") {}
};

struct InconsistentProfileError : InputError {
    explicit InconsistentProfileError(const std::string& w) : InputError(w, "inconsistent-profile") {}
};

struct TopologyError : InputError {
    explicit TopologyError(const std::string& w) : InputError(w, "topology") {}
};

struct WallError : InputError {
    explicit WallError(const std::string& w) : InputError(w, "wall") {}
};

struct DegeneratePhaseError : InputError {
    explicit DegeneratePhaseError(const std::string& w) : InputError(w, "degenerate-phase") {}
};

/// Internal invariant broken; indicates a bug rather than bad input.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& w) : std::logic_error(w) {}
};

}  // namespace sltk
