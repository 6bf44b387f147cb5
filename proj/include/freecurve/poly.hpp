#ifndef FREECURVE_POLY_HPP
#define FREECURVE_POLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/scalar.hpp"

namespace freecurve {

/// Power product x^a y^b z^c. Ordered by graded reverse lex with x > y > z.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    std::uint32_t degree() const { return e[0] + e[1] + e[2]; }

    Monomial operator*(const Monomial& o) const {
        return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        return Monomial{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
    }

    bool operator==(const Monomial&) const = default;
    // grevlex: higher total degree wins; on ties the rightmost nonzero
    // entry of the exponent difference decides (negative => greater).
    bool operator<(const Monomial& o) const {
        std::uint32_t da = degree(), db = o.degree();
        if (da != db) return da < db;
        for (int k = 2; k >= 0; --k) {
            if (e[k] != o.e[k]) return e[k] > o.e[k];
        }
        return false;
    }
    bool operator>(const Monomial& o) const { return o < *this; }

    std::string str() const;
};

struct Term {
    Monomial m;
    Scalar c;
};

/// Sparse polynomial in x, y, z over an exact field. Terms are strictly
/// descending in grevlex (leading term first) with no zero coefficients.
class Poly {
  public:
    Poly() : field_(FieldId::rationals()) {}
    explicit Poly(const FieldId& f) : field_(f) {}
    Poly(const FieldId& f, std::vector<Term> terms);

    static Poly zero(const FieldId& f) { return Poly(f); }
    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, const Monomial& m);
    static Poly variable(const FieldId& f, int var);  // 0 = x, 1 = y, 2 = z

    const FieldId& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree (max over terms); -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const { return hom_degree_ >= -1; }
    /// Degree of a homogeneous polynomial; throws NonHomogeneous otherwise.
    int homogeneous_degree() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }

    const Term& leading_term() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Scalar& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Formal partial derivative; var in {0,1,2}.
    Poly partial(int var) const;
    std::array<Poly, 3> gradient() const;

    Scalar evaluate(const std::array<Scalar, 3>& point) const;

    /// Exact division: returns q with *this == q * d, or nullopt.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Coefficient of a monomial (zero scalar if absent).
    Scalar coefficient(const Monomial& m) const;

    /// Substitute 1 for the given variable (dehomogenization on a chart).
    Poly substitute_one(int var) const;
    /// Rename variables: out_var[k] receives the exponent of variable k.
    Poly rename_variables(const std::array<int, 3>& out_var) const;

    std::string str() const;

  private:
    void normalize();

    FieldId field_;
    std::vector<Term> terms_;
    int hom_degree_ = -1;  // >= -1: homogeneous of that degree (-1 = zero); -2: not homogeneous
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

/// Componentwise cross product of two polynomial triples.
std::array<Poly, 3> wedge(const std::array<Poly, 3>& u, const std::array<Poly, 3>& v);

/// Small polynomial matrix (at most 3x3); entries share one field.
class PolyMatrix {
  public:
    PolyMatrix(int rows, int cols, const FieldId& f);
    static PolyMatrix from_columns(const std::vector<std::array<Poly, 3>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldId& field() const { return field_; }
    const Poly& at(int r, int c) const { return e_[r * cols_ + c]; }
    Poly& at(int r, int c) { return e_[r * cols_ + c]; }

  private:
    int rows_, cols_;
    FieldId field_;
    std::vector<Poly> e_;
};

/// Cofactor-expansion determinant of a 3x3 polynomial matrix.
Poly det3(const PolyMatrix& m);

/// The three signed 2x2 minors (R1,R2,R3) of a 3x2 matrix, ordered so that
/// appending a third column (q1,q2,q3) gives det3 = q1*R1 + q2*R2 + q3*R3.
std::array<Poly, 3> minors2x2(const PolyMatrix& m);

/// The triple (x, y, z) as degree-1 polynomials.
std::array<Poly, 3> coordinate_triple(const FieldId& f);

}  // namespace freecurve

#endif
