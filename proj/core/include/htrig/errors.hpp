#pragma once

#include <stdexcept>
#include <string>

namespace htrig {

/// Base class for all htrig domain errors. Constructor misuse (bad argument
/// types, malformed containers) throws std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Points or bounds do not lie on the h-grid required by the operation.
class GridMisalignment : public Error {
public:
    using Error::Error;
};

/// A pairing determinant d(x_i, x_j) vanished, so the divided difference
/// is undefined for these nodes (repeated nodes are the common cause).
class SingularD : public Error {
public:
    using Error::Error;
};

/// A quantity that is real by construction came back with an imaginary
/// part above tolerance, indicating inconsistent inputs or lost precision.
class ComplexResidue : public Error {
public:
    using Error::Error;
};

/// A collocation matrix in a determinant-based oracle is numerically singular.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Nodes or a knot span cover at least one full period 2*pi*h/ln(1+h),
/// where the basis functions stop being linearly independent.
class WindowViolation : public Error {
public:
    using Error::Error;
};

/// Order parameter m outside the supported range for the operation.
class OrderOutOfRange : public Error {
public:
    using Error::Error;
};

/// A knot vector is too short for the requested construction.
class InsufficientKnots : public Error {
public:
    using Error::Error;
};

}  // namespace htrig
