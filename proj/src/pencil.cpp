#include "freecurve/pencil.hpp"

#include <numeric>

#include "freecurve/errors.hpp"

namespace freecurve {

Poly Pencil::member(const Scalar& lambda, const Scalar& mu) const {
    return f.pow(static_cast<unsigned>(a)) * lambda + g.pow(static_cast<unsigned>(b)) * mu;
}

Derivation canonical_derivation(const Poly& f, const Poly& g) {
    if (f.homogeneous_degree() < 1 || g.homogeneous_degree() < 1)
        throw Refusal("canonical derivation requires nonconstant polynomials");
    auto w = wedge(f.gradient(), g.gradient());
    return Derivation(std::move(w));  // throws on the identically-degenerate case
}

Pencil make_pencil(const Poly& f, const Poly& g) {
    int n = f.homogeneous_degree();
    int m = g.homogeneous_degree();
    if (n < 1 || m < 1) throw Refusal("pencil generators must be nonconstant");
    ReducednessReport rf = is_reduced(f);
    if (!rf.reduced) throw NotReduced("pencil generator f: " + rf.diagnostic);
    ReducednessReport rg = is_reduced(g);
    if (!rg.reduced) throw NotReduced("pencil generator g: " + rg.diagnostic);
    HilbertProfile common = hilbert_profile(GradedIdeal(f.field(), {f, g}));
    if (common.verdict != ProfileVerdict::Finite)
        throw CommonFactor("pencil generators share a factor (<f,g> is not zero-dimensional)");
    int l = std::lcm(n, m);
    Pencil p{f, g, n, m, l / n, l / m, canonical_derivation(f, g)};
    return p;
}

PencilParam normalize_param(const PencilParam& p) {
    if (!p.first.is_zero()) {
        Scalar inv = p.first.inverse();
        return {Scalar::one(p.first.field()), p.second * inv};
    }
    if (p.second.is_zero()) throw Refusal("(0:0) is not a pencil parameter");
    return {Scalar::zero(p.second.field()), Scalar::one(p.second.field())};
}

std::string param_str(const PencilParam& p) { return "(" + p.first.str() + ":" + p.second.str() + ")"; }

MemberSelection member_union(const Pencil& pencil, const std::vector<PencilParam>& params) {
    if (params.empty()) throw Refusal("member_union requires at least one parameter");
    MemberSelection sel;
    for (const PencilParam& p : params) {
        PencilParam norm = normalize_param(p);
        for (const PencilParam& seen : sel.params)
            if (seen.first == norm.first && seen.second == norm.second)
                throw DuplicateMember("pencil member " + param_str(norm) + " selected twice");
        sel.params.push_back(norm);
    }
    Poly acc = Poly::constant(Scalar::one(pencil.f.field()));
    for (const PencilParam& p : sel.params) acc = acc * pencil.member(p.first, p.second);
    sel.union_poly = std::move(acc);
    if (!pencil.canonical(sel.union_poly).is_zero())
        throw ConsistencyError("canonical derivation does not annihilate the member union");
    return sel;
}

std::pair<Poly, Poly> split_tangency(const Pencil& pencil, const Poly& f_part, const Poly& g_part) {
    if (f_part.is_zero() || g_part.is_zero()) throw Refusal("split_tangency requires nonzero factors");
    Poly product = f_part * g_part;
    if (!pencil.canonical(product).is_zero())
        throw NotAMemberProduct("the product is not annihilated by the canonical derivation");
    if (!f_part.is_constant() && !g_part.is_constant()) {
        HilbertProfile common = hilbert_profile(GradedIdeal(f_part.field(), {f_part, g_part}));
        if (common.verdict != ProfileVerdict::Finite)
            throw CommonFactor("the two factors share a component");
    }
    auto kf = tangency(pencil.canonical, f_part);
    auto kg = tangency(pencil.canonical, g_part);
    if (!kf || !kg) throw ConsistencyError("coprime factors of an annihilated product must be tangent");
    if (!(*kf * g_part + *kg * f_part).is_zero())
        throw ConsistencyError("tangency cofactors do not cancel on the product");
    return {*kf, *kg};
}

namespace {

PencilAnalysis analyze_inner(const Pencil& pencil, ElimBackend backend, std::optional<Scalar> substitution) {
    const FieldId field = pencil.f.field();
    auto w = wedge(pencil.f.gradient(), pencil.g.gradient());
    std::vector<Poly> zgens;
    for (const Poly& p : w)
        if (!p.is_zero()) zgens.push_back(p);

    HilbertProfile zprof;
    bool z_finite = false;
    if (!zgens.empty()) {
        zprof = hilbert_profile(GradedIdeal(field, zgens), std::nullopt, backend);
        z_finite = zprof.verdict == ProfileVerdict::Finite;
    }
    if (!z_finite) {
        // Degenerate gradient locus. For n = m the pencil contains a
        // non-reduced member; try replacing f by f + c g.
        if (pencil.n == pencil.m && !substitution) {
            for (long c = 1; c <= 10; ++c) {
                for (long sign : {1L, -1L}) {
                    Scalar cs = Scalar::of_int(field, sign * c);
                    Poly fprime = pencil.f + pencil.g * cs;
                    try {
                        Pencil alt = make_pencil(fprime, pencil.g);
                        return analyze_inner(alt, backend, cs);
                    } catch (const Refusal&) {
                        continue;
                    }
                }
            }
            throw InfiniteZ(
                "V(grad f ^ grad g) is not finite and no substitution f + c g repaired it; "
                "the pencil contains a non-reduced member whose reduced model needs factorization");
        }
        throw InfiniteZ("V(grad f ^ grad g) is not a finite scheme");
    }

    PencilAnalysis out{hilbert_profile(GradedIdeal(field, {pencil.f, pencil.g}), std::nullopt, backend),
                       std::move(zprof),
                       eigenscheme_of(pencil.canonical, std::nullopt, backend),
                       {},
                       {},
                       substitution};
    if (out.base_locus.finite() && out.gamma.finite()) {
        if (out.gamma.length() != out.base_locus.length() + out.gradient_locus.length())
            throw ConsistencyError("deg Gamma != deg B + deg Z on a finite pencil");
    }

    // Singular members at field-rational points of Z off the base locus.
    GradedIdeal zideal(field, zgens);
    ProjectivePoints pts = projective_points(zideal);
    out.residual_degrees = pts.residual_degrees;
    for (const auto& p : pts.points) {
        Scalar fv = pencil.f.evaluate(p);
        Scalar gv = pencil.g.evaluate(p);
        if (fv.is_zero() || gv.is_zero()) continue;
        auto gf = pencil.f.gradient();
        auto gg = pencil.g.gradient();
        int j = -1;
        std::array<Scalar, 3> gfv{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)};
        std::array<Scalar, 3> ggv{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)};
        for (int k = 0; k < 3; ++k) {
            gfv[k] = gf[k].evaluate(p);
            ggv[k] = gg[k].evaluate(p);
            if (j < 0 && !gfv[k].is_zero()) j = k;
        }
        if (j < 0) throw ConsistencyError("grad f vanished at a point where f does not (Euler)");
        // a lambda f^(a-1) grad f + b mu g^(b-1) grad g = 0 at p.
        auto powsc = [&](const Scalar& s, int e) {
            Scalar r = Scalar::one(field);
            for (int t = 0; t < e; ++t) r *= s;
            return r;
        };
        Scalar lambda = Scalar::of_int(field, pencil.b) * powsc(gv, pencil.b - 1) * ggv[j];
        Scalar mu = -Scalar::of_int(field, pencil.a) * powsc(fv, pencil.a - 1) * gfv[j];
        PencilParam param = normalize_param({lambda, mu});
        // The member really is singular at p: all three gradient
        // coordinates of lambda f^a + mu g^b must vanish.
        Poly member = pencil.member(param.first, param.second);
        for (int k = 0; k < 3; ++k)
            if (!member.partial(k).evaluate(p).is_zero())
                throw ConsistencyError("located member is not singular at its point");
        out.singular_members.push_back(SingularMember{p, param});
    }
    return out;
}

}  // namespace

PencilAnalysis analyze(const Pencil& pencil, ElimBackend backend) {
    return analyze_inner(pencil, backend, std::nullopt);
}

PencilFreenessReport pencil_freeness_check(const Pencil& pencil, const Poly& curve, const Poly& member_product,
                                           ElimBackend backend) {
    const int n = pencil.n, m = pencil.m;
    int deg_product = member_product.homogeneous_degree();
    int lcm_deg = pencil.a * pencil.n;
    if (deg_product < 2 * lcm_deg) throw Refusal("a union of at least two pencil members is required");
    if (!pencil.canonical(member_product).is_zero())
        throw NotAMemberProduct("the stated union is not annihilated by the canonical derivation");
    if (!member_product.divide_exact(curve))
        throw NotAMemberProduct("the curve does not divide the stated member union");
    int big_n = curve.homogeneous_degree();
    if (big_n <= n + m - 1) throw DegreeTooSmall("curve degree must exceed n + m - 1");
    ReducednessReport red = is_reduced(curve);
    if (!red.reduced) throw NotReduced("pencil freeness check requires a reduced curve: " + red.diagnostic);

    Eigenscheme gamma = eigenscheme_of(pencil.canonical, std::nullopt, backend);
    if (!gamma.finite()) throw EigenschemeNotFinite("the canonical derivation has a non-finite eigenscheme");

    PencilFreenessReport rep;
    rep.a_exp = n + m - 2;
    rep.b_exp = big_n - n - m + 1;
    ExponentCheck side_a = free_with_exponents(curve, rep.a_exp, rep.b_exp, backend);
    ContainmentResult side_b = contains_curve(gamma, curve, backend);
    rep.free = side_a.free;
    rep.contains = side_b.contains();
    rep.freeness_certificate = std::move(side_a.certificate);
    rep.containment_certificate = std::move(side_b.certificate);
    if (rep.free != rep.contains)
        throw ConsistencyError("pencil freeness and eigenscheme containment disagree");
    return rep;
}

PencilFreenessReport pencil_freeness_check(const Pencil& pencil, const Poly& curve,
                                           const std::vector<PencilParam>& members, ElimBackend backend) {
    MemberSelection sel = member_union(pencil, members);
    return pencil_freeness_check(pencil, curve, sel.union_poly, backend);
}

SmoothMemberReport add_smooth_member(const Pencil& pencil, const Poly& curve, const Poly& member_product,
                                     const PencilParam& param, ElimBackend backend) {
    PencilFreenessReport base = pencil_freeness_check(pencil, curve, member_product, backend);
    if (!base.free) throw Refusal("the starting union is not free via the pencil criterion");
    PencilParam norm = normalize_param(param);

    // The added member must be smooth outside the base locus: it may not
    // occur among the located singular members.
    PencilAnalysis an = analyze(pencil, backend);
    for (const SingularMember& s : an.singular_members)
        if (s.param.first == norm.first && s.param.second == norm.second)
            throw MemberSingularOutsideBase("member " + param_str(norm) + " is singular outside the base locus");

    Poly member = pencil.member(norm.first, norm.second);
    Poly extended = curve * member;
    SmoothMemberReport rep{norm, extended, {}};
    rep.extension = pencil_freeness_check(pencil, extended, member_product * member, backend);
    return rep;
}

}  // namespace freecurve
