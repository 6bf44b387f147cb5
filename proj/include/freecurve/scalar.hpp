#ifndef FREECURVE_SCALAR_HPP
#define FREECURVE_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "freecurve/field.hpp"

namespace freecurve {

/// An exact field element. Always canonical: reduced fraction over Q,
/// reduced real/imaginary parts over Q(i), least nonnegative residue mod p.
/// Immutable in spirit; all arithmetic returns fresh values.
class Scalar {
  public:
    Scalar() : field_(FieldId::rationals()) {}  // rational zero

    static Scalar zero(const FieldId& f);
    static Scalar one(const FieldId& f);
    static Scalar of_int(const FieldId& f, long v);
    static Scalar rational(const mpq_class& v);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);
    static Scalar imaginary_unit() { return gaussian(0, 1); }
    static Scalar fp(const FieldId& f, const mpz_class& v);
    static Scalar fp(const FieldId& f, std::uint64_t v);

    const FieldId& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Component access. re/im are meaningful for Q and QI, fp_value for Fp.
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    std::uint64_t fp_value() const { return fp_; }

    /// Reduction homomorphism Q -> GF(p) (and QI -> GF(p) given i_image with
    /// i_image^2 = -1 mod p). Throws FieldUnsupported when a denominator
    /// vanishes mod p or the source field cannot map.
    std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t i_image = 0) const;

    /// Canonical text form: "a/b" or "a"; "a/b+c/d*i"; least residue for Fp.
    std::string str() const;

  private:
    void check_same_field(const Scalar& o) const;

    FieldId field_;
    mpq_class re_, im_;     // Q, QI payload
    std::uint64_t fp_ = 0;  // Fp payload
};

}  // namespace freecurve

#endif
