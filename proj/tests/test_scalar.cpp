#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freecurve/errors.hpp"
#include "freecurve/numbertheory.hpp"
#include "freecurve/scalar.hpp"
#include "testutil.hpp"

using namespace freecurve;

TEST_CASE("rational arithmetic basics") {
    Scalar half = Scalar::rational(1, 2);
    Scalar third = Scalar::rational(1, 3);
    CHECK((half + third) == Scalar::rational(5, 6));
    CHECK((half - half).is_zero());
    CHECK((Scalar::rational(2, 4) - Scalar::rational(1, 2)).is_zero());
    CHECK((half * third) == Scalar::rational(1, 6));
    CHECK((half / third) == Scalar::rational(3, 2));
    CHECK(half.str() == "1/2");
    CHECK(Scalar::rational(-4, 2).str() == "-2");
}

TEST_CASE("gaussian rationals") {
    Scalar i = Scalar::imaginary_unit();
    CHECK((i * i) == Scalar::gaussian(-1, 0));
    CHECK((i - i).is_zero());
    Scalar z = Scalar::gaussian(mpq_class(1, 2), mpq_class(3, 4));
    CHECK(z.str() == "1/2+3/4*i");
    CHECK((z / z).is_one());
    CHECK((Scalar::gaussian(0, 1).inverse()) == Scalar::gaussian(0, -1));
}

TEST_CASE("prime field arithmetic") {
    FieldId f13 = FieldId::prime_field(13);
    Scalar three = Scalar::fp(f13, 3u);
    Scalar five = Scalar::fp(f13, 5u);
    CHECK((three * five) == Scalar::fp(f13, 2u));
    CHECK((three - five) == Scalar::fp(f13, 11u));
    CHECK((three / three).is_one());
    CHECK_THROWS_AS(Scalar::fp(f13, 0u).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldId::prime_field(12), NotPrime);
    CHECK_THROWS_AS(FieldId::prime_field(1ull << 62), NotPrime);
}

TEST_CASE("field mismatch is refused") {
    Scalar q = Scalar::rational(1, 2);
    Scalar g = Scalar::gaussian(1, 0);
    CHECK_THROWS_AS(q + g, FieldMismatch);
}

TEST_CASE("primality for 64-bit inputs") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(65537));
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(65536));
    CHECK(!is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(7);
    for (const FieldId& field :
         {FieldId::rationals(), FieldId::gaussian_rationals(), FieldId::prime_field(65537)}) {
        for (int k = 0; k < 1000; ++k) {
            Scalar a = testutil::random_scalar(field, rng);
            Scalar b = testutil::random_scalar(field, rng);
            Scalar c = testutil::random_scalar(field, rng);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a * b) == (b * a));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("reduction Q -> GF(p) is a homomorphism away from bad denominators") {
    std::mt19937_64 rng(11);
    const std::uint64_t p = 65537;
    FieldId fp = FieldId::prime_field(p);
    for (int k = 0; k < 500; ++k) {
        Scalar a = testutil::random_scalar(FieldId::rationals(), rng);
        Scalar b = testutil::random_scalar(FieldId::rationals(), rng);
        Scalar sum = a + b, prod = a * b;
        std::uint64_t ra = a.reduce_mod(p), rb = b.reduce_mod(p);
        CHECK(sum.reduce_mod(p) == (ra + rb) % p);
        CHECK(prod.reduce_mod(p) == mul_mod(ra, rb, p));
        CHECK(Scalar::fp(fp, a.reduce_mod(p)).field() == fp);
    }
}

TEST_CASE("canonical form is stable") {
    // Canonicalization happens on construction; re-canonicalizing changes nothing.
    Scalar s = Scalar::rational(6, -4);
    CHECK(s.str() == "-3/2");
    CHECK(Scalar::rational(s.re()) == s);
    Scalar g = Scalar::gaussian(mpq_class(2, 4), mpq_class(-6, 3));
    CHECK(g.str() == "1/2-2*i");
    CHECK(Scalar::gaussian(g.re(), g.im()) == g);
}
