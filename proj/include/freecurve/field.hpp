#ifndef FREECURVE_FIELD_HPP
#define FREECURVE_FIELD_HPP

#include <cstdint>
#include <string>

namespace freecurve {

enum class FieldKind : std::uint8_t { Q, QI, Fp };

/// Identifies the ground field: Q, Q(i), or GF(p) with p prime, p < 2^62.
struct FieldId {
    FieldKind kind = FieldKind::Q;
    std::uint64_t p = 0;  // modulus, Fp only

    static FieldId rationals() { return FieldId{FieldKind::Q, 0}; }
    static FieldId gaussian_rationals() { return FieldId{FieldKind::QI, 0}; }
    static FieldId prime_field(std::uint64_t p);  // validates primality and the 2^62 bound

    bool operator==(const FieldId&) const = default;

    bool is_prime_field() const { return kind == FieldKind::Fp; }
    std::string name() const;

    /// Parses "q", "qi" or "fp:P".
    static FieldId parse(const std::string& text);
};

}  // namespace freecurve

#endif
