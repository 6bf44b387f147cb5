#ifndef FREECURVE_ERRORS_HPP
#define FREECURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freecurve {

// Base of everything thrown by the toolkit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A refusal: preconditions not met, unsupported input, parse failure.
// The CLI maps these to exit code 1. Mathematical negatives (NotFree,
// "not in degree piece", ...) are ordinary return values, never thrown.
class Refusal : public Error {
  public:
    using Error::Error;
};

// A proved theorem came out false at runtime. Always an implementation
// bug; the CLI maps these to exit code 2 and the test suite fails.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

class FieldMismatch : public Refusal {
  public:
    FieldMismatch() : Refusal("operands belong to different fields") {}
    explicit FieldMismatch(const std::string& what) : Refusal(what) {}
};

class DivisionByZero : public Refusal {
  public:
    DivisionByZero() : Refusal("division by zero") {}
};

class NotPrime : public Refusal {
  public:
    explicit NotPrime(const std::string& what) : Refusal(what) {}
};

class NonHomogeneous : public Refusal {
  public:
    explicit NonHomogeneous(const std::string& what) : Refusal(what) {}
};

class FieldUnsupported : public Refusal {
  public:
    explicit FieldUnsupported(const std::string& what) : Refusal(what) {}
};

class NotTangent : public Refusal {
  public:
    explicit NotTangent(const std::string& what) : Refusal(what) {}
};

class TangencyViolated : public Refusal {
  public:
    explicit TangencyViolated(const std::string& what) : Refusal(what) {}
};

class CharacteristicDividesDegree : public Refusal {
  public:
    explicit CharacteristicDividesDegree(const std::string& what) : Refusal(what) {}
};

class NotReduced : public Refusal {
  public:
    explicit NotReduced(const std::string& what) : Refusal(what) {}
};

class DegreeMismatch : public Refusal {
  public:
    explicit DegreeMismatch(const std::string& what) : Refusal(what) {}
};

class DegreeTooSmall : public Refusal {
  public:
    explicit DegreeTooSmall(const std::string& what) : Refusal(what) {}
};

class EigenschemeNotFinite : public Refusal {
  public:
    explicit EigenschemeNotFinite(const std::string& what) : Refusal(what) {}
};

class InconclusiveProfile : public Refusal {
  public:
    explicit InconclusiveProfile(const std::string& what) : Refusal(what) {}
};

class PositiveDimensional : public Refusal {
  public:
    explicit PositiveDimensional(const std::string& what) : Refusal(what) {}
};

class ChartUnavailable : public Refusal {
  public:
    explicit ChartUnavailable(const std::string& what) : Refusal(what) {}
};

class DuplicateMember : public Refusal {
  public:
    explicit DuplicateMember(const std::string& what) : Refusal(what) {}
};

class CommonFactor : public Refusal {
  public:
    explicit CommonFactor(const std::string& what) : Refusal(what) {}
};

class NotAMemberProduct : public Refusal {
  public:
    explicit NotAMemberProduct(const std::string& what) : Refusal(what) {}
};

class MemberSingularOutsideBase : public Refusal {
  public:
    explicit MemberSingularOutsideBase(const std::string& what) : Refusal(what) {}
};

class InfiniteZ : public Refusal {
  public:
    explicit InfiniteZ(const std::string& what) : Refusal(what) {}
};

class ParseError : public Refusal {
  public:
    ParseError(std::size_t position, const std::string& what)
        : Refusal("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace freecurve

#endif
