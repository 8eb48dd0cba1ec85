#pragma once

#include <stdexcept>
#include <string>

namespace axplan {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Input file cannot be read as a task or plan.
class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string &msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Input is well-formed but uses a construct outside the supported fragment.
class UnsupportedFeature : public Error {
public:
    using Error::Error;
};

// Axiom set admits no stratification.
class StratificationError : public Error {
public:
    using Error::Error;
};

// Programmatically built task violates a structural invariant.
class InvalidTask : public Error {
public:
    using Error::Error;
};

// least_model called on a program with negative body literals.
class NotNegationFree : public Error {
public:
    using Error::Error;
};

// perfect_model called on a program without a stratification.
class NotStratified : public Error {
public:
    using Error::Error;
};

// level ranking queried for an interpretation that is not a supported model.
class NotSupported : public Error {
public:
    using Error::Error;
};

// A brute-force cap was exceeded; the result would be unreliable to estimate.
class TooLarge : public Error {
public:
    using Error::Error;
};

// Operator applied in a state that does not satisfy its preconditions.
class NotApplicable : public Error {
public:
    using Error::Error;
};

// Two fired effects of one operator assign different values to a variable.
class ConflictingEffects : public Error {
public:
    using Error::Error;
};

// Parallel-step semantics requested for a task with axioms.
class ForallWithAxioms : public Error {
public:
    using Error::Error;
};

// Conditional effects reached a component that does not model them.
class ConditionalEffectsUnsupported : public Error {
public:
    using Error::Error;
};

// A purported model of an encoding does not decode to a step structure.
class MalformedModel : public Error {
public:
    using Error::Error;
};

// A decoded plan failed re-validation; indicates an encoder or solver defect.
class ValidationFailure : public Error {
public:
    using Error::Error;
};

} // namespace axplan
