#ifndef PENCILDIST_ERRORS_HPP
#define PENCILDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pencildist {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// The requested structured mapping does not exist for the given vectors.
class InfeasibleMapping : public Error {
public:
    using Error::Error;
};

class InvalidStructure : public Error {
public:
    using Error::Error;
};

class UnsupportedTag : public Error {
public:
    using Error::Error;
};

class NotPalindromic : public Error {
public:
    using Error::Error;
};

class LambdaNotAdmissible : public Error {
public:
    using Error::Error;
};

class FamilyConstructionFailed : public Error {
public:
    using Error::Error;
};

class Unbounded : public Error {
public:
    using Error::Error;
};

class NoFeasibleStart : public Error {
public:
    using Error::Error;
};

class MissingPerturbations : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

} // namespace pencildist

#endif
