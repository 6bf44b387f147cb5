#ifndef FREECURVE_FIXTURES_HPP
#define FREECURVE_FIXTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freecurve/pencil.hpp"

namespace freecurve::fixtures {

/// Ceva / braid line arrangement and its generating conic pencil.
struct Ceva {
    Poly sextic;  // xyz(x-y)(x-z)(y-z)
    Pencil pencil;
    std::vector<PencilParam> member_params;
    int exp_a = 2, exp_b = 3;
};
Ceva ceva(const FieldId& field);

/// Hesse pencil of a smooth cubic and its Hessian; the arrangement of the
/// four singular members. Over fields without cube roots of unity the union
/// is built in product form g (f^3 - 27 g^3).
struct Hesse {
    Poly f, g;
    Poly arrangement;  // degree 12
    Pencil pencil;
    int exp_a = 4, exp_b = 7;
    long gamma_length = 21;
};
Hesse hesse(const FieldId& field);

/// Fermat-type line arrangement (x^n - y^n)(x^n - z^n)(y^n - z^n).
struct Fermat {
    int n = 0;
    Poly arrangement;
    Pencil pencil;
    int exp_a = 0, exp_b = 0;  // normalized (min, max) of (n+1, 2n-2)
};
Fermat fermat(int n, const FieldId& field);

/// Pencil of sextics (f^3, g^2) for a smooth conic f and a triangle g.
struct SexticPencil {
    Poly f, g;
    Pencil pencil;
    Poly singular_member;  // f^3 - 27 g^2
    Poly xyz_curve;        // xyz (f^3 - 27 g^2), free (3,5)
    Poly yz_curve;         // yz (f^3 - 27 g^2), free (3,4)
    long gamma_length = 13;
    PencilParam singular_param;  // (1 : -27)
};
SexticPencil sextic_pencil(const FieldId& field);

/// Pencil of osculating conics xz and z^2 - xy.
struct OsculatingConics {
    Poly f, g;
    Pencil pencil;
    std::array<Poly, 3> ideal_uvw;  // x(z^2+xy), x^2 z, z^3
    Poly fg;                        // free (1,2)
    Poly three_smooth;              // g(f+g)(f-g), free (2,3)
    Poly line_member_union;         // x(f+g)(f-g), free (2,2)
    Poly f_member_union;            // f(f+g)(f-g), free (2,3)
    Poly two_smooth;                // (f+g)(f-g), not free
    std::array<Scalar, 3> tangency_point;  // (0:1:0)
    long gamma_length = 7;
    int tau_three = 15, mu_three = 16;  // at the tangency point
    int tau_line = 11, mu_line = 12;
};
OsculatingConics osculating_conics(const FieldId& field);

/// Generic-looking conic pencil with four distinct base points.
struct DiagonalConicPencil {
    Pencil pencil;
    long base_length = 4, gradient_length = 3, gamma_length = 7;
};
DiagonalConicPencil diagonal_conic_pencil(const FieldId& field);

/// Conics meeting at a single quadruple point; modelled on the reduced
/// pencil (line, conic) whose eigenscheme has length 3.
struct QuadrupleContactPencil {
    Pencil pencil;  // (z, yz - x^2), powers (2,1)
    Poly two_smooth;  // product of two smooth conic members, free (1,2)
    std::vector<PencilParam> member_params;
    long gamma_length = 3;
};
QuadrupleContactPencil quadruple_contact_pencil(const FieldId& field);

/// Conics meeting at one simple and one triple point; three smooth members
/// are needed for freeness.
struct TangentConicPencil {
    Pencil pencil;  // (yz - x^2, yz - x^2 + xz)
    Poly two_smooth;    // not free
    Poly three_smooth;  // free (2,3)
    std::vector<PencilParam> three_params;
    long gamma_length = 7;
};
TangentConicPencil tangent_conic_pencil(const FieldId& field);

/// Complete reflection-type line arrangement with the net of its singular
/// points and seeded general net members.
struct ReflectionNet {
    int n = 0;
    Poly arrangement;            // F = xyz prod(x^n-y^n)...
    Derivation mu;               // x^{n+1} dx + y^{n+1} dy + z^{n+1} dz
    Derivation delta;            // the cleared-denominator tangent derivation
    std::array<Poly, 3> net;     // f, g, h spanning the net
    std::vector<Poly> members;   // general net members G_1..G_5
    std::vector<std::array<long, 3>> member_coeffs;
    int resample_attempts = 0;
    long gamma_mu_length = 0;  // n^2 + 3n + 3
};
ReflectionNet reflection_net(int n, const FieldId& field, std::uint64_t seed = 1);

struct SuiteCase {
    std::string name;
    Poly curve;
    std::optional<std::pair<int, int>> expected_exponents;  // nullopt = not free
};
/// Curves F * (products of general net members) with their expected
/// verdicts, including the pencil products of item-style unions.
std::vector<SuiteCase> reflection_suite(const ReflectionNet& net, int max_members);

std::vector<std::string> fixture_names();

}  // namespace freecurve::fixtures

#endif
