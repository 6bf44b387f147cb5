#include "freecurve/singularities.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "freecurve/errors.hpp"
#include "freecurve/univariate.hpp"

namespace freecurve {

Poly dehomogenize(const Poly& f, int chart_var) {
    Poly cleared = f.substitute_one(chart_var);
    switch (chart_var) {
        case 2: return cleared;                             // (x,y) already
        case 1: return cleared.rename_variables({0, 1, 1}); // z -> v slot
        case 0: return cleared.rename_variables({0, 0, 1}); // y -> u, z -> v
        default: throw Refusal("invalid chart variable");
    }
}

std::array<Scalar, 2> affine_image(const std::array<Scalar, 3>& p, int chart_var) {
    Scalar inv = p[static_cast<std::size_t>(chart_var)].inverse();
    switch (chart_var) {
        case 2: return {p[0] * inv, p[1] * inv};
        case 1: return {p[0] * inv, p[2] * inv};
        case 0: return {p[1] * inv, p[2] * inv};
        default: throw Refusal("invalid chart variable");
    }
}

int chart_for(const std::array<Scalar, 3>& p) {
    for (int v : {2, 1, 0})
        if (!p[static_cast<std::size_t>(v)].is_zero()) return v;
    throw Refusal("(0,0,0) is not a projective point");
}

namespace {

void require_bivariate(const Poly& p) {
    for (const Term& t : p.terms())
        if (t.m.e[2] != 0) throw Refusal("affine machinery expects polynomials in u,v only");
}

// Full reduction of p modulo the basis (leading terms eliminated anywhere).
Poly normal_form(Poly p, const std::vector<Poly>& basis) {
    const FieldId field = p.field();
    Poly out(field);
    while (!p.is_zero()) {
        bool reduced = false;
        const Term& lt = p.leading_term();
        for (const Poly& g : basis) {
            const Term& glt = g.leading_term();
            if (glt.m.divides(lt.m)) {
                Poly q = Poly::monomial(lt.c / glt.c, lt.m / glt.m);
                p = p - q * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Poly head = Poly::monomial(lt.c, lt.m);
            out = out + head;
            p = p - head;
        }
    }
    return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    return Monomial{{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]), std::max(a.e[2], b.e[2])}};
}

}  // namespace

std::vector<Poly> buchberger2(std::vector<Poly> gens) {
    std::vector<Poly> basis;
    for (Poly& g : gens) {
        if (g.is_zero()) continue;
        require_bivariate(g);
        basis.push_back(std::move(g));
    }
    if (basis.empty()) throw Refusal("buchberger2 requires a nonzero generator");
    const FieldId field = basis[0].field();

    struct Pair {
        std::size_t i, j;
        int sugar;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (!(a.lcm == b.lcm)) return a.lcm < b.lcm;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<int> sugar_of;
    for (const Poly& g : basis) sugar_of.push_back(g.degree());

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t jnew) {
        for (std::size_t i = 0; i < jnew; ++i) {
            Monomial l = mono_lcm(basis[i].leading_term().m, basis[jnew].leading_term().m);
            int sug = std::max(sugar_of[i] - basis[i].degree(), sugar_of[jnew] - basis[jnew].degree()) +
                      static_cast<int>(l.degree());
            queue.push_back(Pair{i, jnew, sug, l});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pair = *it;
        queue.erase(it);
        const Poly& f = basis[pair.i];
        const Poly& g = basis[pair.j];
        const Term& lf = f.leading_term();
        const Term& lg = g.leading_term();
        // Buchberger's coprimality criterion.
        if (mono_lcm(lf.m, lg.m).degree() == lf.m.degree() + lg.m.degree()) continue;
        Poly s = Poly::monomial(Scalar::one(field), pair.lcm / lf.m) * f * Poly::constant(lg.c) -
                 Poly::monomial(Scalar::one(field), pair.lcm / lg.m) * g * Poly::constant(lf.c);
        Poly rem = normal_form(std::move(s), basis);
        if (rem.is_zero()) continue;
        sugar_of.push_back(std::max(pair.sugar, rem.degree()));
        basis.push_back(std::move(rem));
        push_pairs(basis.size() - 1);
    }

    // Interreduce to the reduced basis: drop redundant leading terms, then
    // fully reduce each element against the others and normalize.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_term().m;
            const Monomial& mj = basis[j].leading_term().m;
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
        if (r.is_zero()) continue;
        reduced.push_back(r * r.leading_term().c.inverse());
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Poly& a, const Poly& b) { return a.leading_term().m < b.leading_term().m; });
    return reduced;
}

QuotientAlgebra quotient_algebra(std::vector<Poly> gb) {
    if (gb.empty()) throw Refusal("quotient_algebra requires a basis");
    const FieldId field = gb[0].field();
    // The staircase is bounded iff some leading term is a pure power of u
    // and some is a pure power of v.
    std::optional<std::uint32_t> ucap, vcap;
    for (const Poly& g : gb) {
        const Monomial& m = g.leading_term().m;
        if (m.e[1] == 0) ucap = ucap ? std::min(*ucap, m.e[0]) : m.e[0];
        if (m.e[0] == 0) vcap = vcap ? std::min(*vcap, m.e[1]) : m.e[1];
    }
    if (!ucap || !vcap)
        throw PositiveDimensional("quotient algebra is infinite-dimensional (unbounded staircase)");

    std::vector<Monomial> std_mons;
    for (std::uint32_t a = 0; a < *ucap; ++a) {
        for (std::uint32_t b = 0; b < *vcap; ++b) {
            Monomial m{{a, b, 0}};
            bool in_ideal = false;
            for (const Poly& g : gb)
                if (g.leading_term().m.divides(m)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) std_mons.push_back(m);
        }
    }
    std::sort(std_mons.begin(), std_mons.end());

    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < std_mons.size(); ++i) index.emplace(std_mons[i], static_cast<int>(i));
    int dim = static_cast<int>(std_mons.size());

    QuotientAlgebra q{field, gb, std_mons, Mat(dim, dim, field), Mat(dim, dim, field), dim};
    for (int var = 0; var < 2; ++var) {
        Mat& mat = var == 0 ? q.mul_u : q.mul_v;
        for (int j = 0; j < dim; ++j) {
            Monomial shifted = std_mons[static_cast<std::size_t>(j)];
            shifted.e[var] += 1;
            Poly nf = normal_form(Poly::monomial(Scalar::one(field), shifted), gb);
            for (const Term& t : nf.terms()) mat.at(index.at(t.m), j) = t.c;
        }
    }
    // Commutation is a structural invariant of the construction.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Scalar uv = Scalar::zero(field), vu = Scalar::zero(field);
            for (int k = 0; k < dim; ++k) {
                uv += q.mul_u.at(i, k) * q.mul_v.at(k, j);
                vu += q.mul_v.at(i, k) * q.mul_u.at(k, j);
            }
            if (uv != vu) throw ConsistencyError("multiplication matrices do not commute");
        }
    return q;
}

namespace {

// Minimal polynomial via Krylov sequences from every basis vector.
UPoly minimal_polynomial(const Mat& m) {
    const FieldId field = m.field;
    const int dim = m.nr;
    UPoly acc = UPoly::constant(Scalar::one(field));
    for (int j = 0; j < dim; ++j) {
        // Krylov matrix [v, Mv, ..., M^dim v].
        Mat kry(dim, dim + 2, field);
        std::vector<Scalar> v(static_cast<std::size_t>(dim), Scalar::zero(field));
        v[static_cast<std::size_t>(j)] = Scalar::one(field);
        for (int c = 0; c <= dim; ++c) {
            for (int i = 0; i < dim; ++i) kry.at(i, c) = v[static_cast<std::size_t>(i)];
            std::vector<Scalar> nv(static_cast<std::size_t>(dim), Scalar::zero(field));
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < dim; ++k)
                    if (!m.at(i, k).is_zero() && !v[static_cast<std::size_t>(k)].is_zero())
                        nv[static_cast<std::size_t>(i)] += m.at(i, k) * v[static_cast<std::size_t>(k)];
            v = std::move(nv);
        }
        Mat work = kry;
        RrefInfo info = rref(work, ElimBackend::Fast);
        // First non-pivot column = degree of the local minimal polynomial.
        std::vector<bool> pivot(static_cast<std::size_t>(kry.nc), false);
        for (int c : info.pivot_cols) pivot[static_cast<std::size_t>(c)] = true;
        int deg = dim + 1;
        for (int c = 0; c <= dim + 1 && c < kry.nc; ++c)
            if (!pivot[static_cast<std::size_t>(c)]) {
                deg = c;
                break;
            }
        // Dependency coefficients from the reduced column.
        std::vector<Scalar> coeffs(static_cast<std::size_t>(deg) + 1, Scalar::zero(field));
        coeffs[static_cast<std::size_t>(deg)] = Scalar::one(field);
        for (int k = 0; k < info.rank; ++k) {
            if (info.pivot_cols[static_cast<std::size_t>(k)] < deg)
                coeffs[static_cast<std::size_t>(info.pivot_cols[static_cast<std::size_t>(k)])] = -work.at(k, deg);
        }
        acc = lcm(acc, UPoly(field, coeffs));
        if (acc.degree() == dim) break;  // cannot grow further
    }
    return acc;
}

Mat matrix_power_shifted(const Mat& m, const Scalar& shift, int e) {
    const FieldId field = m.field;
    const int dim = m.nr;
    Mat base = m;
    for (int i = 0; i < dim; ++i) base.at(i, i) -= shift;
    Mat result(dim, dim, field);
    for (int i = 0; i < dim; ++i) result.at(i, i) = Scalar::one(field);
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat c(dim, dim, field);
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < dim; ++j)
                    if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    };
    int k = e;
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

}  // namespace

AffinePoints solve_points(const QuotientAlgebra& q) {
    AffinePoints out;
    if (q.dim == 0) return out;
    RootReport ru = roots_in_field(minimal_polynomial(q.mul_u));
    RootReport rv = roots_in_field(minimal_polynomial(q.mul_v));
    out.residual_degree_u = ru.residual_degree;
    out.residual_degree_v = rv.residual_degree;
    for (const Scalar& u0 : ru.roots) {
        for (const Scalar& v0 : rv.roots) {
            bool on_variety = true;
            for (const Poly& g : q.groebner) {
                if (!g.evaluate({u0, v0, Scalar::zero(q.field)}).is_zero()) {
                    on_variety = false;
                    break;
                }
            }
            if (on_variety) out.points.push_back({u0, v0});
        }
    }
    return out;
}

int local_multiplicity(const QuotientAlgebra& q, const std::array<Scalar, 2>& p) {
    if (q.dim == 0) return 0;
    Mat pu = matrix_power_shifted(q.mul_u, p[0], q.dim);
    Mat pv = matrix_power_shifted(q.mul_v, p[1], q.dim);
    Mat stacked(2 * q.dim, q.dim, q.field);
    for (int i = 0; i < q.dim; ++i)
        for (int j = 0; j < q.dim; ++j) {
            stacked.at(i, j) = pu.at(i, j);
            stacked.at(q.dim + i, j) = pv.at(i, j);
        }
    return q.dim - rank_of(std::move(stacked), ElimBackend::Fast);
}

namespace {

QuotientAlgebra local_algebra(const Poly& f, const std::array<Scalar, 3>& p, bool include_f,
                              std::array<Scalar, 2>& image_out) {
    if (!f.evaluate(p).is_zero()) throw Refusal("point does not lie on the curve");
    int chart = chart_for(p);
    Poly h = dehomogenize(f, chart);
    image_out = affine_image(p, chart);
    std::vector<Poly> gens{h.partial(0), h.partial(1)};
    if (include_f) gens.insert(gens.begin(), h);
    std::vector<Poly> nonzero;
    for (Poly& g : gens)
        if (!g.is_zero()) nonzero.push_back(std::move(g));
    if (nonzero.empty()) throw PositiveDimensional("critical scheme is the whole chart");
    return quotient_algebra(buchberger2(std::move(nonzero)));
}

}  // namespace

int milnor_at(const Poly& f, const std::array<Scalar, 3>& p) {
    std::array<Scalar, 2> image{Scalar::zero(f.field()), Scalar::zero(f.field())};
    QuotientAlgebra q = local_algebra(f, p, false, image);
    return local_multiplicity(q, image);
}

int tjurina_at(const Poly& f, const std::array<Scalar, 3>& p) {
    std::array<Scalar, 2> image{Scalar::zero(f.field()), Scalar::zero(f.field())};
    QuotientAlgebra q = local_algebra(f, p, true, image);
    return local_multiplicity(q, image);
}

long tjurina_total(const Poly& f) {
    GradedIdeal jac(f.field(), {f.partial(0), f.partial(1), f.partial(2)});
    HilbertProfile prof = hilbert_profile(jac);
    if (prof.verdict == ProfileVerdict::PositiveDimensional)
        throw NotReduced("Jacobian ideal is not zero-dimensional; curve is not reduced");
    return prof.length();  // throws InconclusiveProfile if undetermined
}

std::string point_str(const std::array<Scalar, 3>& p) {
    return "(" + p[0].str() + ":" + p[1].str() + ":" + p[2].str() + ")";
}

ProjectivePoints projective_points(const GradedIdeal& ideal) {
    ProjectivePoints out;
    const FieldId field = ideal.field;
    if (ideal.gens.empty()) throw Refusal("projective_points requires generators");

    // Chart z = 1 covers every point with nonzero last coordinate.
    std::vector<Poly> affine;
    for (const Poly& g : ideal.gens) {
        Poly h = dehomogenize(g, 2);
        if (!h.is_zero()) affine.push_back(h);
    }
    if (affine.empty()) throw PositiveDimensional("the plane z=0 complement lies in the variety");
    QuotientAlgebra q = quotient_algebra(buchberger2(std::move(affine)));
    AffinePoints ap = solve_points(q);
    for (const auto& uv : ap.points) out.points.push_back({uv[0], uv[1], Scalar::one(field)});
    if (ap.residual_degree_u) out.residual_degrees.push_back(ap.residual_degree_u);
    if (ap.residual_degree_v) out.residual_degrees.push_back(ap.residual_degree_v);

    // The line z = 0: restrict, set y = 1 for a univariate problem in x.
    std::vector<UPoly> restricted;
    bool all_zero = true;
    for (const Poly& g : ideal.gens) {
        // Keep only terms without z, then set y = 1.
        std::vector<Term> kept;
        for (const Term& t : g.terms())
            if (t.m.e[2] == 0) kept.push_back(t);
        Poly line_part(field, kept);
        if (line_part.is_zero()) continue;
        all_zero = false;
        Poly uni = line_part.substitute_one(1);
        std::vector<Scalar> coeffs;
        int dmax = uni.degree();
        coeffs.assign(static_cast<std::size_t>(dmax) + 1, Scalar::zero(field));
        for (const Term& t : uni.terms()) coeffs[t.m.e[0]] = t.c;
        restricted.emplace_back(field, std::move(coeffs));
    }
    if (all_zero) throw PositiveDimensional("the line z=0 lies in the variety");
    UPoly g0 = restricted[0];
    for (std::size_t i = 1; i < restricted.size(); ++i) g0 = gcd(g0, restricted[i]);
    if (g0.degree() >= 1) {
        RootReport rr = roots_in_field(g0);
        for (const Scalar& x0 : rr.roots) out.points.push_back({x0, Scalar::one(field), Scalar::zero(field)});
        if (rr.residual_degree) out.residual_degrees.push_back(rr.residual_degree);
    }
    // The last remaining point (1:0:0).
    bool origin = true;
    for (const Poly& g : ideal.gens)
        if (!g.evaluate({Scalar::one(field), Scalar::zero(field), Scalar::zero(field)}).is_zero()) {
            origin = false;
            break;
        }
    if (origin) out.points.push_back({Scalar::one(field), Scalar::zero(field), Scalar::zero(field)});
    return out;
}

}  // namespace freecurve
