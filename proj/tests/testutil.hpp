#ifndef FREECURVE_TESTUTIL_HPP
#define FREECURVE_TESTUTIL_HPP

#include <random>

#include "freecurve/gradedlin.hpp"
#include "freecurve/matrix.hpp"
#include "freecurve/poly.hpp"

namespace freecurve::testutil {

inline Scalar random_scalar(const FieldId& field, std::mt19937_64& rng, long span = 9) {
    if (field.kind == FieldKind::Fp) return Scalar::fp(field, rng() % field.p);
    long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span;
    long den = 1 + static_cast<long>(rng() % 4);
    if (field.kind == FieldKind::QI && rng() % 3 == 0) {
        long inum = static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span;
        return Scalar::gaussian(mpq_class(num, den), mpq_class(inum, den));
    }
    if (field.kind == FieldKind::QI) return Scalar::gaussian(mpq_class(num, den), 0);
    return Scalar::rational(mpz_class(num), mpz_class(den));
}

inline Poly random_homogeneous(const FieldId& field, int degree, std::mt19937_64& rng, int nonzero_chance = 2) {
    std::vector<Term> terms;
    for (const Monomial& m : monomial_basis(degree)) {
        if (rng() % static_cast<unsigned long>(nonzero_chance) != 0) continue;
        Scalar c = random_scalar(field, rng, 4);
        if (!c.is_zero()) terms.push_back(Term{m, c});
    }
    Poly p(field, terms);
    if (p.is_zero()) {
        auto basis = monomial_basis(degree);
        p = Poly::monomial(Scalar::one(field), basis[rng() % basis.size()]);
    }
    return p;
}

inline Mat random_mat(const FieldId& field, int nr, int nc, std::mt19937_64& rng, int zero_chance = 3) {
    Mat m(nr, nc, field);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (rng() % static_cast<unsigned long>(zero_chance) != 0) m.at(i, j) = random_scalar(field, rng, 5);
    return m;
}

// Independent rank oracle: plain fraction arithmetic, no pivoting strategy,
// no Bareiss, no normalization tricks. Kept deliberately naive.
inline int naive_rank(Mat m) {
    int rank = 0;
    for (int c = 0; c < m.nc && rank < m.nr; ++c) {
        int pivot = -1;
        for (int i = rank; i < m.nr; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.nc; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int i = rank + 1; i < m.nr; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c) / m.at(rank, c);
            for (int j = c; j < m.nc; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace freecurve::testutil

#endif
