#ifndef FREECURVE_NUMBERTHEORY_HPP
#define FREECURVE_NUMBERTHEORY_HPP

#include <cstdint>

namespace freecurve {

// 64-bit modular arithmetic. Moduli are < 2^62 so sums never wrap.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // throws DivisionByZero on gcd != 1

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

}  // namespace freecurve

#endif
