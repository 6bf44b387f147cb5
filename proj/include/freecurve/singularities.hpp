#ifndef FREECURVE_SINGULARITIES_HPP
#define FREECURVE_SINGULARITIES_HPP

#include <array>
#include <optional>
#include <vector>

#include "freecurve/gradedlin.hpp"
#include "freecurve/matrix.hpp"
#include "freecurve/poly.hpp"

namespace freecurve {

// Affine bivariate polynomials are Poly values using only the x and y
// slots (u = x, v = y). Charts map projective coordinates there:
//   chart z=1: (u,v) = (x,y);  chart y=1: (u,v) = (x,z);  chart x=1: (u,v) = (y,z).

/// Dehomogenize onto the chart where `chart_var` (0=x,1=y,2=z) equals 1.
Poly dehomogenize(const Poly& f, int chart_var);

/// Affine image of a projective point on that chart.
std::array<Scalar, 2> affine_image(const std::array<Scalar, 3>& p, int chart_var);

/// First nonzero coordinate in the order z, y, x picks the chart.
int chart_for(const std::array<Scalar, 3>& p);

/// Reduced Groebner basis (grevlex, 2 variables, sugar pair selection).
std::vector<Poly> buchberger2(std::vector<Poly> gens);

/// Finite-dimensional quotient of K[u,v] with its multiplication matrices.
struct QuotientAlgebra {
    FieldId field;
    std::vector<Poly> groebner;
    std::vector<Monomial> basis;  // standard monomials, ascending
    Mat mul_u, mul_v;             // commuting multiplication matrices
    int dim = 0;
};

/// Throws PositiveDimensional when the staircase is unbounded.
QuotientAlgebra quotient_algebra(std::vector<Poly> gb);

struct AffinePoints {
    std::vector<std::array<Scalar, 2>> points;
    int residual_degree_u = 0;  // degrees of root-free eigenvalue factors
    int residual_degree_v = 0;
};

/// Rational points of the variety via eigenvalues of the multiplication
/// matrices; candidates are validated by evaluating the generators.
AffinePoints solve_points(const QuotientAlgebra& q);

/// Dimension of the joint generalized eigenspace at p (0 when p is not in
/// the variety).
int local_multiplicity(const QuotientAlgebra& q, const std::array<Scalar, 2>& p);

/// Milnor number of the curve germ at a projective point.
int milnor_at(const Poly& f, const std::array<Scalar, 3>& p);
/// Tjurina number of the curve germ at a projective point.
int tjurina_at(const Poly& f, const std::array<Scalar, 3>& p);
/// Total Tjurina number: stable Hilbert value of R / <f_x, f_y, f_z>.
long tjurina_total(const Poly& f);

struct LocalInvariants {
    std::array<Scalar, 3> point;
    int mu = 0;
    int tau = 0;
    bool quasihomogeneous() const { return mu == tau; }
};

struct ProjectivePoints {
    std::vector<std::array<Scalar, 3>> points;  // last nonzero coordinate = 1
    std::vector<int> residual_degrees;          // nonzero entries flag unresolved factors
};

/// Field-rational points of V(I) for a homogeneous ideal with finite zero
/// locus, collected chart by chart.
ProjectivePoints projective_points(const GradedIdeal& ideal);

std::string point_str(const std::array<Scalar, 3>& p);

}  // namespace freecurve

#endif
