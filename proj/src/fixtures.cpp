#include "freecurve/fixtures.hpp"

#include <random>

#include "freecurve/errors.hpp"

namespace freecurve::fixtures {

namespace {

Poly var(const FieldId& f, int v) { return Poly::variable(f, v); }

Poly line(const FieldId& f, long cx, long cy, long cz) {
    return var(f, 0) * Scalar::of_int(f, cx) + var(f, 1) * Scalar::of_int(f, cy) +
           var(f, 2) * Scalar::of_int(f, cz);
}

bool proportional(const Derivation& d1, const Derivation& d2) {
    auto w = wedge(d1.coeffs(), d2.coeffs());
    return w[0].is_zero() && w[1].is_zero() && w[2].is_zero();
}

}  // namespace

Ceva ceva(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly f = (x - y) * z;
    Poly g = y * (x - z);
    Ceva out{x * y * z * (x - y) * (x - z) * (y - z), make_pencil(f, g), {}, 2, 3};
    Scalar one = Scalar::one(field), zero = Scalar::zero(field);
    out.member_params = {{one, zero}, {zero, one}, {one, -one}};
    return out;
}

Hesse hesse(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly f = x.pow(3) + y.pow(3) + z.pow(3);
    Poly g = x * y * z;
    Poly arrangement = g * (f.pow(3) - g.pow(3) * Scalar::of_int(field, 27));
    return Hesse{f, g, arrangement, make_pencil(f, g), 4, 7, 21};
}

Fermat fermat(int n, const FieldId& field) {
    if (n < 2) throw Refusal("fermat fixture needs n >= 2");
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    unsigned un = static_cast<unsigned>(n);
    Poly f = x.pow(un) - y.pow(un);
    Poly g = x.pow(un) - z.pow(un);
    Poly fmg = y.pow(un) - z.pow(un);
    Fermat out{n, f * g * fmg, make_pencil(f, g), std::min(n + 1, 2 * n - 2), std::max(n + 1, 2 * n - 2)};
    return out;
}

SexticPencil sextic_pencil(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly f = x * x + y * y + z * z;
    Poly g = x * y * z;
    Pencil pencil = make_pencil(f, g);  // powers (3,2)
    Poly singular = f.pow(3) - g.pow(2) * Scalar::of_int(field, 27);
    SexticPencil out{f,
                     g,
                     pencil,
                     singular,
                     g * singular,
                     y * z * singular,
                     13,
                     {Scalar::one(field), Scalar::of_int(field, -27)}};
    return out;
}

OsculatingConics osculating_conics(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly f = x * z;
    Poly g = z * z - x * y;
    Pencil pencil = make_pencil(f, g);
    Poly fpg = f + g, fmg = f - g;
    OsculatingConics out{
        f,
        g,
        pencil,
        {x * (z * z + x * y), x * x * z, z.pow(3)},
        f * g,
        g * fpg * fmg,
        x * fpg * fmg,
        f * fpg * fmg,
        fpg * fmg,
        {Scalar::zero(field), Scalar::one(field), Scalar::zero(field)},
        7,
        15,
        16,
        11,
        12};
    return out;
}

DiagonalConicPencil diagonal_conic_pencil(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly f = x * x + y * y + z * z;
    Poly g = x * x + y * y * Scalar::of_int(field, 2) + z * z * Scalar::of_int(field, 3);
    return DiagonalConicPencil{make_pencil(f, g), 4, 3, 7};
}

QuadrupleContactPencil quadruple_contact_pencil(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly conic = y * z - x * x;
    Pencil pencil = make_pencil(z, conic);  // n=1, m=2, powers (2,1)
    Scalar one = Scalar::one(field), zero = Scalar::zero(field);
    QuadrupleContactPencil out{pencil, Poly(field), {{zero, one}, {one, one}}, 3};
    out.two_smooth = pencil.member(zero, one) * pencil.member(one, one);
    return out;
}

TangentConicPencil tangent_conic_pencil(const FieldId& field) {
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    Poly c = y * z - x * x;
    Poly d = c + x * z;
    Pencil pencil = make_pencil(c, d);
    Scalar one = Scalar::one(field), zero = Scalar::zero(field);
    TangentConicPencil out{pencil, Poly(field), Poly(field), {{one, zero}, {zero, one}, {one, one}}, 7};
    out.two_smooth = c * d;
    out.three_smooth = c * d * (c + d);
    return out;
}

ReflectionNet reflection_net(int n, const FieldId& field, std::uint64_t seed) {
    if (n < 1) throw Refusal("reflection_net needs n >= 1");
    Poly x = var(field, 0), y = var(field, 1), z = var(field, 2);
    unsigned un = static_cast<unsigned>(n);
    Poly xy = x.pow(un) - y.pow(un);
    Poly xz = x.pow(un) - z.pow(un);
    Poly yz = y.pow(un) - z.pow(un);

    ReflectionNet out{n,
                      x * y * z * xy * xz * yz,
                      Derivation({x.pow(un + 1), y.pow(un + 1), z.pow(un + 1)}),
                      Derivation({x * xy * xz, y * xy * yz, z * xz * yz}),
                      {y * z * yz, x * z * (z.pow(un) - x.pow(un)), x * y * xy},
                      {},
                      {},
                      0,
                      static_cast<long>(n) * n + 3 * n + 3};

    const Poly& f = out.net[0];
    const Poly& g = out.net[1];
    const Poly& h = out.net[2];
    Derivation d_fg = canonical_derivation(f, g);
    Derivation d_fh = canonical_derivation(f, h);
    Derivation d_gh = canonical_derivation(g, h);

    // General members: seeded small coefficients with a genericity gate:
    // the two tangent derivations built from (a,b,c) must be nonzero and
    // non-proportional, and members must be pairwise independent.
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<long>(rng() % 7) - 3; };
    while (out.members.size() < 5) {
        long a = draw(), b = draw(), c = draw();
        ++out.resample_attempts;
        if (a == 0 && b == 0 && c == 0) continue;
        if ((b == 0 && c == 0) || (a == 0 && b == 0)) continue;  // degenerate proof derivations
        Scalar sa = Scalar::of_int(field, a), sb = Scalar::of_int(field, b), sc = Scalar::of_int(field, c);
        Derivation d1 = d_fg * sb + d_fh * sc;
        Derivation d2 = d_fh * sa + d_gh * sb;
        if (proportional(d1, d2)) continue;
        bool fresh = true;
        for (const auto& coeffs : out.member_coeffs) {
            // proportional (a,b,c) triples define the same member
            if (coeffs[0] * b == coeffs[1] * a && coeffs[1] * c == coeffs[2] * b &&
                coeffs[0] * c == coeffs[2] * a) {
                fresh = false;
                break;
            }
        }
        if (!fresh) continue;
        out.members.push_back(f * sa + g * sb + h * sc);
        out.member_coeffs.push_back({a, b, c});
    }
    return out;
}

std::vector<SuiteCase> reflection_suite(const ReflectionNet& net, int max_members) {
    if (max_members < 1 || max_members > 5) throw Refusal("reflection_suite supports 1..5 members");
    const int n = net.n;
    std::vector<SuiteCase> cases;
    auto tag = [&](const std::string& s) { return "n=" + std::to_string(n) + " " + s; };

    Poly acc = net.arrangement;
    std::vector<std::optional<std::pair<int, int>>> expected = {
        std::make_pair(2 * n + 2, 2 * n + 2),
        std::make_pair(2 * n + 2, 3 * n + 4),
        std::make_pair(3 * n + 4, 3 * n + 4),
        std::make_pair(3 * n + 5, 4 * n + 5),
        std::nullopt,
    };
    for (int k = 0; k < max_members; ++k) {
        acc = acc * net.members[static_cast<std::size_t>(k)];
        cases.push_back(SuiteCase{tag("F*G1..G" + std::to_string(k + 1)), acc, expected[static_cast<std::size_t>(k)]});
    }

    // Pencil products inside the net: F * prod_i (a_i G1 + b_i G2) with
    // k = 3 distinct parameter pairs.
    if (max_members >= 2) {
        const FieldId field = net.arrangement.field();
        const Poly& g1 = net.members[0];
        const Poly& g2 = net.members[1];
        std::vector<std::pair<long, long>> pairs = {{1, 1}, {1, -1}, {2, 1}};
        Poly prod = net.arrangement;
        for (auto [ai, bi] : pairs) prod = prod * (g1 * Scalar::of_int(field, ai) + g2 * Scalar::of_int(field, bi));
        int k = static_cast<int>(pairs.size());
        cases.push_back(SuiteCase{tag("F*prod(aG1+bG2), k=3"), prod,
                                  std::make_pair(2 * n + 2, (k + 1) * n + 2 * k)});
    }
    return cases;
}

std::vector<std::string> fixture_names() {
    return {"ceva",
            "hesse",
            "fermat",
            "sextic-pencil",
            "osculating-conics",
            "diagonal-conic-pencil",
            "quadruple-contact-pencil",
            "tangent-conic-pencil",
            "reflection-net"};
}

}  // namespace freecurve::fixtures
