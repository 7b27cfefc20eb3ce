#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hestam {

namespace detail {
inline std::string join_issues(const std::vector<std::string>& issues) {
    std::string msg;
    for (const auto& s : issues) {
        if (!msg.empty()) msg += "; ";
        msg += s;
    }
    return msg;
}
}  // namespace detail

/// Invalid user input (parameter values, config files). Every offending
/// field is reported at once. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(detail::join_issues(issues)), issues_(std::move(issues)) {}
    explicit ValidationError(const std::string& issue)
        : ValidationError(std::vector<std::string>{issue}) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Numerical failure mid-computation (overflow, divergent quadrature).
/// CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the LSM boundary fit finds no early-exercise region at all
/// (e.g. a call with q = 0). CLI maps this to exit code 4.
class NoExerciseRegionError : public std::runtime_error {
public:
    NoExerciseRegionError() : std::runtime_error("no exercise region found") {}
    explicit NoExerciseRegionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hestam
