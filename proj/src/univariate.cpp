#include "freecurve/univariate.hpp"

#include <algorithm>
#include <random>

#include "freecurve/errors.hpp"
#include "freecurve/numbertheory.hpp"

namespace freecurve {

UPoly::UPoly(const FieldId& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { normalize(); }

void UPoly::normalize() {
    for (const Scalar& s : c_)
        if (!(s.field() == field_)) throw FieldMismatch("univariate coefficient in wrong field");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::identity_t(const FieldId& f) { return UPoly(f, {Scalar::zero(f), Scalar::one(f)}); }

const Scalar& UPoly::leading() const {
    if (c_.empty()) throw Refusal("zero polynomial has no leading coefficient");
    return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    std::vector<Scalar> out(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    std::vector<Scalar> out(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (is_zero() || o.is_zero()) return UPoly(field_);
    std::vector<Scalar> out(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator*(const Scalar& s) const {
    std::vector<Scalar> out = c_;
    for (Scalar& x : out) x *= s;
    return UPoly(field_, std::move(out));
}

bool UPoly::operator==(const UPoly& o) const {
    if (!(field_ == o.field_) || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Scalar> out(c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Scalar::of_int(field_, static_cast<long>(i));
    return UPoly(field_, std::move(out));
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    UPoly rem = *this;
    UPoly quot(field_);
    Scalar lead_inv = d.leading().inverse();
    int dd = d.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Scalar c = rem.leading() * lead_inv;
        std::vector<Scalar> qc(static_cast<std::size_t>(shift) + 1, Scalar::zero(field_));
        qc.back() = c;
        UPoly qterm(field_, std::move(qc));
        quot = quot + qterm;
        rem = rem - qterm * d;
    }
    return {quot, rem};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field());
    UPoly g = gcd(a, b);
    return (a * b).divrem(g).first.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly d = p.derivative();
    if (d.is_zero()) throw FieldUnsupported("derivative vanished; characteristic too small for squarefree part");
    UPoly g = gcd(p, d);
    return p.divrem(g).first.monic();
}

UPoly restrict_to_line(const Poly& f, const std::array<Scalar, 3>& p, const std::array<Scalar, 3>& q) {
    const FieldId field = f.field();
    // Powers of the three linear parameterizations s*p_k + q_k.
    std::array<std::vector<UPoly>, 3> pw;
    for (int k = 0; k < 3; ++k) pw[k].push_back(UPoly::constant(Scalar::one(field)));
    auto power = [&](int k, std::uint32_t e) -> const UPoly& {
        UPoly lin(field, {q[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]});
        while (pw[k].size() <= e) pw[k].push_back(pw[k].back() * lin);
        return pw[k][e];
    };
    UPoly acc(field);
    for (const Term& t : f.terms()) {
        UPoly term = UPoly::constant(t.c);
        for (int k = 0; k < 3; ++k)
            if (t.m.e[k]) term = term * power(k, t.m.e[k]);
        acc = acc + term;
    }
    return acc;
}

namespace {

// ---- root extraction over GF(p) ----

std::vector<Scalar> fp_roots(const UPoly& s) {
    const FieldId f = s.field();
    const std::uint64_t p = f.p;
    std::vector<Scalar> roots;
    if (p < (1u << 20)) {
        for (std::uint64_t r = 0; r < p; ++r) {
            if (s.eval(Scalar::fp(f, r)).is_zero()) roots.push_back(Scalar::fp(f, r));
        }
        return roots;
    }
    // Large modulus: split off the product of linear factors, then seeded
    // Cantor-Zassenhaus.
    auto mulmod_poly = [&](const UPoly& a, const UPoly& b, const UPoly& mod) {
        return (a * b).divrem(mod).second;
    };
    auto powmod_poly = [&](UPoly base, mpz_class e, const UPoly& mod) {
        UPoly r = UPoly::constant(Scalar::one(f));
        base = base.divrem(mod).second;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mulmod_poly(r, base, mod);
            base = mulmod_poly(base, base, mod);
            e >>= 1;
        }
        return r;
    };
    UPoly t = UPoly::identity_t(f);
    UPoly tp = powmod_poly(t, mpz_class(static_cast<unsigned long>(p)), s);
    UPoly linear_part = gcd(tp - t, s);
    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<UPoly> stack{linear_part};
    while (!stack.empty()) {
        UPoly g = stack.back();
        stack.pop_back();
        if (g.degree() <= 0) continue;
        if (g.degree() == 1) {
            roots.push_back(-(g.coeffs()[0] / g.coeffs()[1]));
            continue;
        }
        UPoly shift(f, {Scalar::fp(f, rng() % p), Scalar::one(f)});
        UPoly h = powmod_poly(shift, mpz_class(static_cast<unsigned long>((p - 1) / 2)), g);
        UPoly split = gcd(h - UPoly::constant(Scalar::one(f)), g);
        if (split.degree() <= 0 || split.degree() == g.degree()) {
            stack.push_back(g);  // retry with a fresh shift
            continue;
        }
        stack.push_back(split);
        stack.push_back(g.divrem(split).first);
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.fp_value() < b.fp_value(); });
    return roots;
}

// ---- root extraction over Q and Q(i) via scan + Hensel lift + rational
// reconstruction; every candidate is verified exactly before acceptance ----

struct LiftContext {
    std::uint64_t p;
    std::vector<mpz_class> coeffs;  // integer images of the squarefree part
    mpz_class bound;                // covers numerator and denominator of any root
};

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
    mpz_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % m;
    if (acc < 0) acc += m;
    return acc;
}

std::optional<mpq_class> wang_reconstruct(const mpz_class& r, const mpz_class& m) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = r % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

// Minimal Gaussian-integer arithmetic for reconstruction over Q(i).
struct Gint {
    mpz_class a, b;  // a + b*i
    Gint conj() const { return {a, -b}; }
    mpz_class norm() const { return a * a + b * b; }
};
Gint gmul(const Gint& x, const Gint& y) { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a}; }
Gint gsub(const Gint& x, const Gint& y) { return {x.a - y.a, x.b - y.b}; }
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) q += 1;
    return q;
}
Gint gdiv_round(const Gint& x, const Gint& y) {
    Gint num = gmul(x, y.conj());
    mpz_class n = y.norm();
    return {round_div(num.a, n), round_div(num.b, n)};
}

// Gaussian rational reconstruction: find n, d in Z[i] with n = r*d mod m
// and small norms. The caller verifies candidates exactly, so borderline
// failures only cost a retry with a larger modulus.
std::optional<std::pair<Gint, Gint>> gaussian_reconstruct(const mpz_class& r, const mpz_class& m) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    Gint r0{m, 0}, r1{r % m, 0};
    Gint t0{0, 0}, t1{1, 0};
    while (r1.norm() > bound) {
        if (r1.norm() == 0) return std::nullopt;
        Gint q = gdiv_round(r0, r1);
        Gint nr = gsub(r0, gmul(q, r1));
        r0 = r1;
        r1 = nr;
        Gint nt = gsub(t0, gmul(q, t1));
        t0 = t1;
        t1 = nt;
    }
    if (t1.norm() == 0 || t1.norm() > bound) return std::nullopt;
    return std::make_pair(r1, t1);
}

std::vector<Scalar> lifted_roots(const UPoly& s) {
    const FieldId field = s.field();
    const bool gaussian = field.kind == FieldKind::QI;

    // Clear denominators to integer (or Gaussian-integer) coefficients.
    mpz_class den_lcm = 1;
    for (const Scalar& c : s.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().get_den().get_mpz_t());
        if (gaussian) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im().get_den().get_mpz_t());
    }
    std::vector<Gint> zc;
    for (const Scalar& c : s.coeffs()) {
        mpz_class re = c.re().get_num() * (den_lcm / c.re().get_den());
        mpz_class im = gaussian ? mpz_class(c.im().get_num() * (den_lcm / c.im().get_den())) : mpz_class(0);
        zc.push_back(Gint{re, im});
    }
    // Bound covering numerators and denominators of any root in the field:
    // denominators divide the leading coefficient, numerators the trailing.
    mpz_class lead_n = zc.back().norm();
    std::size_t t0i = 0;
    while (t0i < zc.size() && zc[t0i].norm() == 0) ++t0i;  // t^k factor: root 0 handled by caller
    mpz_class trail_n = zc[t0i].norm();
    mpz_class target = 2 * std::max(lead_n, trail_n) * std::max(lead_n, trail_n) + 16;

    // Pick a lift prime: coefficients reduce, leading/trailing stay nonzero,
    // image squarefree. For Q(i) the prime must split (p = 1 mod 4).
    std::uint64_t p = 0, i_image = 0;
    for (std::uint64_t cand = 10007;; cand += 2) {
        if (!is_prime_u64(cand)) continue;
        if (gaussian && cand % 4 != 1) continue;
        std::uint64_t ii = 0;
        if (gaussian) {
            for (std::uint64_t g = 2;; ++g) {
                std::uint64_t v = pow_mod(g, (cand - 1) / 4, cand);
                if (mul_mod(v, v, cand) == cand - 1) {
                    ii = v;
                    break;
                }
                if (g > 1000) break;
            }
            if (ii == 0) continue;
        }
        auto to_fp = [&](const Gint& g) -> std::uint64_t {
            mpz_class m = g.a % mpz_class(static_cast<unsigned long>(cand));
            if (m < 0) m += mpz_class(static_cast<unsigned long>(cand));
            std::uint64_t v = m.get_ui();
            if (gaussian) {
                mpz_class mi = g.b % mpz_class(static_cast<unsigned long>(cand));
                if (mi < 0) mi += mpz_class(static_cast<unsigned long>(cand));
                v = (v + mul_mod(mi.get_ui(), ii, cand)) % cand;
            }
            return v;
        };
        if (to_fp(zc.back()) == 0 || to_fp(zc[t0i]) == 0) continue;
        // Squarefree image check: gcd(S, S') constant mod cand.
        FieldId fp_field = FieldId::prime_field(cand);
        std::vector<Scalar> img;
        for (const Gint& g : zc) img.push_back(Scalar::fp(fp_field, to_fp(g)));
        UPoly simg(fp_field, img);
        UPoly d = simg.derivative();
        if (d.is_zero() || gcd(simg, d).degree() != 0) continue;
        p = cand;
        i_image = ii;
        break;
    }

    FieldId fp_field = FieldId::prime_field(p);
    auto to_fp = [&](const Gint& g) -> std::uint64_t {
        mpz_class m = g.a % mpz_class(static_cast<unsigned long>(p));
        if (m < 0) m += mpz_class(static_cast<unsigned long>(p));
        std::uint64_t v = m.get_ui();
        if (gaussian) {
            mpz_class mi = g.b % mpz_class(static_cast<unsigned long>(p));
            if (mi < 0) mi += mpz_class(static_cast<unsigned long>(p));
            v = (v + mul_mod(mi.get_ui(), i_image, p)) % p;
        }
        return v;
    };
    std::vector<Scalar> img;
    for (const Gint& g : zc) img.push_back(Scalar::fp(fp_field, to_fp(g)));
    UPoly simg(fp_field, img);
    std::vector<Scalar> base_roots = fp_roots(simg);

    // Integer coefficient images for Newton lifting: for Q(i), the lift runs
    // in Z/p^k through the splitting-prime embedding i -> i_image.
    std::vector<Scalar> found;
    for (const Scalar& r0 : base_roots) {
        mpz_class modulus(static_cast<unsigned long>(p));
        mpz_class root(static_cast<unsigned long>(r0.fp_value()));
        while (modulus < target) {
            mpz_class next = modulus * modulus;
            std::vector<mpz_class> cmod;
            mpz_class iimg_lift;
            if (gaussian) {
                // Lift i_image to a square root of -1 mod p^(2k) by Newton.
                // x -> x - (x^2+1) / (2x)
                iimg_lift = mpz_class(static_cast<unsigned long>(i_image));
                mpz_class m2(static_cast<unsigned long>(p));
                while (m2 < next) {
                    m2 = m2 * m2;
                    mpz_class inv2x;
                    mpz_class twox = 2 * iimg_lift % m2;
                    mpz_invert(inv2x.get_mpz_t(), twox.get_mpz_t(), m2.get_mpz_t());
                    iimg_lift = (iimg_lift - (iimg_lift * iimg_lift + 1) % m2 * inv2x) % m2;
                    if (iimg_lift < 0) iimg_lift += m2;
                }
            }
            for (const Gint& g : zc) {
                mpz_class v = g.a % next;
                if (gaussian) v = (v + g.b * iimg_lift) % next;
                if (v < 0) v += next;
                cmod.push_back(v);
            }
            // Newton step for the root.
            std::vector<mpz_class> dmod;
            for (std::size_t i = 1; i < cmod.size(); ++i) dmod.push_back(cmod[i] * static_cast<unsigned long>(i) % next);
            mpz_class fv = eval_mod(cmod, root, next);
            mpz_class dv = eval_mod(dmod, root, next);
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), next.get_mpz_t()) == 0) break;
            root = (root - fv * dinv) % next;
            if (root < 0) root += next;
            modulus = next;
        }
        if (modulus < target) continue;
        if (!gaussian) {
            auto q = wang_reconstruct(root, modulus);
            if (!q) continue;
            Scalar cand = Scalar::rational(*q);
            if (s.eval(cand).is_zero()) found.push_back(cand);
        } else {
            auto nd = gaussian_reconstruct(root, modulus);
            if (!nd) continue;
            Gint n = nd->first, d = nd->second;
            mpz_class dn = d.norm();
            Gint num = gmul(n, d.conj());
            Scalar cand = Scalar::gaussian(mpq_class(num.a, dn), mpq_class(num.b, dn));
            if (s.eval(cand).is_zero()) found.push_back(cand);
        }
    }
    return found;
}

}  // namespace

RootReport roots_in_field(const UPoly& p) {
    if (p.is_zero()) throw Refusal("roots_in_field: zero polynomial");
    RootReport rep;
    if (p.degree() == 0) return rep;
    UPoly s = squarefree_part(p);

    // Split off the root at zero; the lifting machinery assumes a nonzero
    // trailing coefficient.
    const FieldId field = p.field();
    if (s.coeffs()[0].is_zero()) {
        rep.roots.push_back(Scalar::zero(field));
        s = s.divrem(UPoly::identity_t(field)).first;
    }
    std::vector<Scalar> rs;
    if (s.degree() >= 1) {
        rs = field.kind == FieldKind::Fp ? fp_roots(s) : lifted_roots(s);
    }
    for (const Scalar& r : rs) rep.roots.push_back(r);
    // Residual cofactor degree after removing the found linear factors.
    UPoly cof = s;
    for (const Scalar& r : rs) {
        UPoly lin(field, {-r, Scalar::one(field)});
        cof = cof.divrem(lin).first;
    }
    rep.residual_degree = std::max(0, cof.degree());
    return rep;
}

}  // namespace freecurve
