#ifndef FREECURVE_PENCIL_HPP
#define FREECURVE_PENCIL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "freecurve/eigenscheme.hpp"
#include "freecurve/singularities.hpp"

namespace freecurve {

/// The pencil generated by (f^a, g^b) with lcm(n,m) = a n = b m, carrying
/// its canonical derivation [grad f ^ grad g] . grad of degree n+m-2.
struct Pencil {
    Poly f, g;
    int n = 0, m = 0;  // degrees of f, g
    int a = 1, b = 1;  // lcm powers
    Derivation canonical;

    Poly member(const Scalar& lambda, const Scalar& mu) const;  // lambda f^a + mu g^b
};

/// Canonical derivation of a pair (no pencil validation).
Derivation canonical_derivation(const Poly& f, const Poly& g);

/// Validates: homogeneous nonconstant, both reduced, no common factor
/// (finite Hilbert profile of <f,g>).
Pencil make_pencil(const Poly& f, const Poly& g);

using PencilParam = std::pair<Scalar, Scalar>;  // (lambda : mu)

PencilParam normalize_param(const PencilParam& p);
std::string param_str(const PencilParam& p);

struct MemberSelection {
    std::vector<PencilParam> params;  // projective normal form, pairwise distinct
    Poly union_poly;                  // product of the selected members
};

/// Union of pencil members; asserts the canonical derivation kills it.
MemberSelection member_union(const Pencil& pencil, const std::vector<PencilParam>& params);

/// Tangency cofactors (K_F, K_G) for a coprime splitting F G of a member
/// union; verifies K_F G + K_G F = 0.
std::pair<Poly, Poly> split_tangency(const Pencil& pencil, const Poly& f_part, const Poly& g_part);

struct SingularMember {
    std::array<Scalar, 3> point;
    PencilParam param;
};

struct PencilAnalysis {
    HilbertProfile base_locus;      // B = <f, g>
    HilbertProfile gradient_locus;  // Z = <grad f ^ grad g>
    Eigenscheme gamma;              // eigenscheme of the canonical derivation
    std::vector<SingularMember> singular_members;
    std::vector<int> residual_degrees;       // point extraction leftovers
    std::optional<Scalar> substitution;      // f was replaced by f + c g (n = m case)

    long base_length() const { return base_locus.length(); }
    long gradient_length() const { return gradient_locus.length(); }
};

/// Base locus, gradient-parallel locus, eigenscheme, and the singular
/// members located at field-rational points of Z off the base locus.
/// Verifies deg Gamma = deg B + deg Z when all three are finite.
PencilAnalysis analyze(const Pencil& pencil, ElimBackend backend = ElimBackend::FastParallel);

/// Executable pencil freeness test: for F | F_k (a union of k >= 2 members,
/// deg F = N > n+m-1), V(F) is free with exponents (n+m-2, N-n-m+1) iff F
/// contains the eigenscheme in degree N. Both sides are computed
/// independently; disagreement throws ConsistencyError.
struct PencilFreenessReport {
    int a_exp = 0, b_exp = 0;
    bool free = false;
    bool contains = false;
    std::optional<FreenessCertificate> freeness_certificate;
    std::optional<ContainmentCertificate> containment_certificate;
};
PencilFreenessReport pencil_freeness_check(const Pencil& pencil, const Poly& curve, const Poly& member_product,
                                           ElimBackend backend = ElimBackend::FastParallel);
PencilFreenessReport pencil_freeness_check(const Pencil& pencil, const Poly& curve,
                                           const std::vector<PencilParam>& members,
                                           ElimBackend backend = ElimBackend::FastParallel);

/// Adding a member that is smooth outside the base locus to a free union
/// keeps it free, with exponents (n+m-2, N+an-n-m+1). Checked both via
/// containment and via the Saito search; both must agree.
struct SmoothMemberReport {
    PencilParam param;
    Poly extended_curve;
    PencilFreenessReport extension;
};
SmoothMemberReport add_smooth_member(const Pencil& pencil, const Poly& curve, const Poly& member_product,
                                     const PencilParam& param,
                                     ElimBackend backend = ElimBackend::FastParallel);

}  // namespace freecurve

#endif
