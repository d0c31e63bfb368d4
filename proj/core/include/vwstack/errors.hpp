#ifndef VWSTACK_ERRORS_HPP
#define VWSTACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vwstack {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// series-core
class ZeroLeadingCoefficient : public Error { public: using Error::Error; };
class NotASquare : public Error { public: using Error::Error; };
class BadValuation : public Error { public: using Error::Error; };
class OutOfWindow : public Error { public: using Error::Error; };

// taut-hilb
class WindowTooSmall : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };

// modular-qseries
class InvalidDiscriminant : public Error { public: using Error::Error; };
class WindowInconsistent : public Error { public: using Error::Error; };

// chern-geom
class NotIntegral : public Error { public: using Error::Error; };

/// Raised when an internal consistency check fails. These indicate a bug,
/// never bad user input.
class InvariantViolation : public Error { public: using Error::Error; };

class NoConsistentNormalization : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};
class NonRationalCoefficient : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

} // namespace vwstack

#endif
