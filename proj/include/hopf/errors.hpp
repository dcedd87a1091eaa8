#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Objects/morphisms from two different category handles were mixed.
struct CategoryMismatch : Error {
    using Error::Error;
};

// Composition attempted where cod(f) != dom(g).
struct DomainMismatch : Error {
    using Error::Error;
};

// Parallel-morphism operation (add, equality) on non-parallel arrows.
struct ShapeMismatch : Error {
    using Error::Error;
};

struct NegationUnsupported : Error {
    using Error::Error;
};

// A matrix between finitely generated abelian groups that is not a
// well-defined homomorphism.
struct IllDefinedMorphism : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace hopf
