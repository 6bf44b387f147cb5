#ifndef FREECURVE_GRADEDLIN_HPP
#define FREECURVE_GRADEDLIN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freecurve/matrix.hpp"
#include "freecurve/poly.hpp"

namespace freecurve {

/// Homogeneous ideal given by generators. Generator order is part of the
/// identity: membership certificates refer to generator indices.
struct GradedIdeal {
    FieldId field = FieldId::rationals();
    std::vector<Poly> gens;

    GradedIdeal() = default;
    GradedIdeal(const FieldId& f, std::vector<Poly> generators);
};

enum class ProfileVerdict { Finite, PositiveDimensional, Inconclusive };

/// Values of dim_K (R/I)_t for t = 0..t_reached, with the declared stopping
/// rule: finite once the last four values agree (zero last difference),
/// positive-dimensional once the last four first-differences agree and are
/// positive, inconclusive if neither happens by t_max.
struct HilbertProfile {
    std::vector<long> values;
    std::optional<long> stable_value;
    std::optional<int> stabilized_at;
    int t_max = 0;
    ProfileVerdict verdict = ProfileVerdict::Inconclusive;

    bool finite() const { return verdict == ProfileVerdict::Finite; }
    /// Length (degree) of the finite scheme; throws unless finite.
    long length() const;
};

/// All C(e+2,2) monomials of degree e, descending grevlex (leading first).
std::vector<Monomial> monomial_basis(int e);

long dim_rt(int t);  // dim of the full degree-t piece of K[x,y,z]

struct DegreePiece {
    int dim = 0;
    std::vector<Poly> basis;  // row-reduced, leading monomials distinct
};

/// Row-reduced basis of the degree-t piece spanned by monomial multiples
/// of the generators.
DegreePiece degree_piece(const GradedIdeal& ideal, int t, ElimBackend backend = ElimBackend::FastParallel);

/// Dimension only (avoids materializing the basis polys).
int degree_piece_dim(const GradedIdeal& ideal, int t, ElimBackend backend = ElimBackend::FastParallel);

/// Hilbert profile of R/I up to t_max (auto bound when omitted), with early
/// exit at stabilization. Degrees are processed independently; value lists
/// are identical regardless of parallelism.
HilbertProfile hilbert_profile(const GradedIdeal& ideal, std::optional<int> t_max = std::nullopt,
                               ElimBackend backend = ElimBackend::FastParallel);

/// On success, coefficients Q_i (homogeneous, deg F - deg g_i) with
/// sum Q_i g_i = F, verified by expansion. nullopt = F is certified not to
/// lie in the degree-N piece spanned by the generators.
std::optional<std::vector<Poly>> membership_certificate(const Poly& f, const GradedIdeal& ideal,
                                                        ElimBackend backend = ElimBackend::FastParallel);

/// Basis of { (A_1..A_k) in (R_e)^k : sum A_j h_j = 0 } for equal-degree
/// homogeneous maps h_j.
std::vector<std::vector<Poly>> graded_kernel(std::span<const Poly> maps, int e,
                                             ElimBackend backend = ElimBackend::FastParallel);

std::string verdict_name(ProfileVerdict v);

}  // namespace freecurve

#endif
