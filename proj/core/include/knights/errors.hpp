#pragma once

#include <stdexcept>
#include <string>

namespace knights {

// a jump that is malformed, leaves the board, or starts off the board
struct InvalidJump : std::runtime_error {
    explicit InvalidJump(const std::string &what) : std::runtime_error(what) {}
};

// lift/classify called on a board without an identified direction
struct NotASurface : std::runtime_error {
    explicit NotASurface(const std::string &what) : std::runtime_error(what) {}
};

struct InvalidTour : std::runtime_error {
    explicit InvalidTour(const std::string &what) : std::runtime_error(what) {}
};

// a class target that cannot apply to the board's topology
struct TargetTopologyMismatch : std::runtime_error {
    explicit TargetTopologyMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct InvalidProblem : std::runtime_error {
    explicit InvalidProblem(const std::string &what) : std::runtime_error(what) {}
};

// an extension step applied to a fixture that lacks the required hook
struct HookViolation : std::runtime_error {
    explicit HookViolation(const std::string &what) : std::runtime_error(what) {}
};

// an extension step that produced an invalid tour or the wrong class
struct StepInvalid : std::runtime_error {
    explicit StepInvalid(const std::string &what) : std::runtime_error(what) {}
};

struct BaseCaseNotFound : std::runtime_error {
    explicit BaseCaseNotFound(const std::string &what) : std::runtime_error(what) {}
};

// construction requested outside the characterized range
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string &what) : std::runtime_error(what) {}
};

// a delegated search ran out of budget before settling the question
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

} // namespace knights
