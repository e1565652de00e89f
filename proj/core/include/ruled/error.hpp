#ifndef RULED_ERROR_HPP
#define RULED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ruled {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite-difference stencil or an evaluation point left the declared domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// kappa(s) fell below the degeneracy threshold, so no Frenet frame exists.
class CurvatureDegenerateError : public Error {
public:
    using Error::Error;
};

/// The curve's tangent is not of unit length; reparametrization is not attempted.
class NotUnitSpeedError : public Error {
public:
    using Error::Error;
};

/// |phi_s x phi_v| vanished: the surface is not immersed at this point.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// |D_T X| vanished: cylindrical ruling, no striction point.
class DegenerateRulingError : public Error {
public:
    using Error::Error;
};

/// A denominator in a family's closed-form expression vanished.
class FamilySingularityError : public Error {
public:
    using Error::Error;
};

/// Lookup of a builtin (algebra, curve, family) by an unknown name.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

/// Malformed input (directors that are not unit, non-increasing grids, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace ruled

#endif  // RULED_ERROR_HPP
