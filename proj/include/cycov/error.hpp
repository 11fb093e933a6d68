#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycov {

/// Bad call: a precondition on plain arguments (genus, order, index) failed.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One violated constraint of an input object, tagged with a short clause name.
struct Violation {
    std::string clause;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Input data (a graph, a branch assignment, a datum) breaks a structural constraint.
class ConstraintViolation : public std::runtime_error {
public:
    explicit ConstraintViolation(std::vector<Violation> violations)
        : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

    ConstraintViolation(std::string clause, std::string message)
        : ConstraintViolation(std::vector<Violation>{{std::move(clause), std::move(message)}}) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& vs) {
        std::string out;
        for (const auto& v : vs) {
            if (!out.empty()) out += "; ";
            out += v.clause + ": " + v.message;
        }
        return out;
    }

    std::vector<Violation> violations_;
};

} // namespace cycov
