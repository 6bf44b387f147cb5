#ifndef FREECURVE_UNIVARIATE_HPP
#define FREECURVE_UNIVARIATE_HPP

#include <array>
#include <vector>

#include "freecurve/poly.hpp"
#include "freecurve/scalar.hpp"

namespace freecurve {

/// Dense univariate polynomial over an exact field, little-endian
/// coefficients (c[0] + c[1] t + ...).
class UPoly {
  public:
    explicit UPoly(const FieldId& f) : field_(f) {}
    UPoly(const FieldId& f, std::vector<Scalar> coeffs);

    static UPoly zero(const FieldId& f) { return UPoly(f); }
    static UPoly constant(const Scalar& c);
    static UPoly identity_t(const FieldId& f);  // the polynomial t

    const FieldId& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& leading() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Scalar& s) const;
    bool operator==(const UPoly& o) const;

    UPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    UPoly monic() const;

    /// Division with remainder by a nonzero divisor.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;

  private:
    void normalize();
    FieldId field_;
    std::vector<Scalar> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);       // monic
UPoly lcm(const UPoly& a, const UPoly& b);       // monic
UPoly squarefree_part(const UPoly& p);           // monic

/// Restriction of a trivariate polynomial to the parameterized line
/// s |-> s*P + Q, as a univariate polynomial in s.
UPoly restrict_to_line(const Poly& f, const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& q);

/// Roots of p lying in its coefficient field, plus the degree of the
/// root-free residual cofactor of the squarefree part (0 when it splits).
/// Exact and complete over Q and GF(p); over Q(i) every reported root is
/// verified exactly.
struct RootReport {
    std::vector<Scalar> roots;
    int residual_degree = 0;
};
RootReport roots_in_field(const UPoly& p);

}  // namespace freecurve

#endif
