#pragma once

#include <stdexcept>
#include <string>

namespace burgers {

/// Base class for everything this library throws on purpose.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or violated precondition (bad grid size, dimension
/// out of range, malformed config file, ...). Maps to CLI exit code 2.
struct config_error : solver_error {
    using solver_error::solver_error;
};

/// Mismatched grids or component counts between operands.
struct shape_error : config_error {
    using config_error::config_error;
};

/// Argument outside the mathematical domain of an operation (t <= 0 for a
/// heat kernel, boundary point of the compactified cube, ...).
struct domain_error : config_error {
    using config_error::config_error;
};

/// Operation asked for in an unsupported dimension (curl outside n = 2, ...).
struct dimension_error : domain_error {
    using domain_error::domain_error;
};

/// Sample of (tau, x) outside the span covered by a solution.
struct range_error : config_error {
    using config_error::config_error;
};

/// A sampled or computed value came out non-finite.
struct evaluation_error : solver_error {
    using solver_error::solver_error;
};

/// Numerical failure while running (exit code 3 territory).
struct numeric_error : solver_error {
    using solver_error::solver_error;
};

/// Sup-norm blew up inside one internal stage of a linear solve.
struct instability_error : numeric_error {
    using numeric_error::numeric_error;
};

/// Requested time gap too small for the parametrix quadrature.
struct step_too_small_error : numeric_error {
    using numeric_error::numeric_error;
};

/// Hopf-Cole amplitude underflow guard.
struct overflow_guard_error : numeric_error {
    using numeric_error::numeric_error;
};

}  // namespace burgers
