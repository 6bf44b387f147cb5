#include <omp.h>

#include <cstdint>

#include "freecurve/errors.hpp"
#include "freecurve/matrix.hpp"
#include "freecurve/numbertheory.hpp"

// Production elimination kernels. Two families:
//   * GF(p): Gauss-Jordan on raw 64-bit residues.
//   * Q / Q(i): fraction-free Bareiss elimination after clearing row
//     denominators, so every intermediate entry is a (Gaussian-)integer
//     minor of the scaled matrix; a field-arithmetic back pass produces
//     the reduced echelon form.
// The OpenMP variants parallelize the per-row updates; every iteration
// writes only its own row, so parallel output is identical to serial.

namespace freecurve {

namespace {

constexpr int kParallelMinWork = 1 << 14;  // below this, threading overhead dominates

// ----- GF(p) kernel -----

struct FpView {
    int nr, nc;
    std::uint64_t p;
    std::vector<std::uint64_t> a;
    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * nc + j]; }
};

RrefInfo rref_fp(FpView& m, bool parallel) {
    RrefInfo info;
    const std::uint64_t p = m.p;
    int r = 0;
    for (int c = 0; c < m.nc && r < m.nr; ++c) {
        int pr = -1;
        for (int i = r; i < m.nr; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(r, j));
        }
        std::uint64_t inv = inv_mod(m.at(r, c), p);
        for (int j = c; j < m.nc; ++j) m.at(r, j) = mul_mod(m.at(r, j), inv, p);
        bool par = parallel && static_cast<long>(m.nr) * (m.nc - c) >= kParallelMinWork;
#pragma omp parallel for schedule(static) if (par)
        for (int i = 0; i < m.nr; ++i) {
            if (i == r) continue;
            std::uint64_t f = m.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.nc; ++j) {
                std::uint64_t sub = mul_mod(f, m.at(r, j), p);
                std::uint64_t v = m.at(i, j);
                m.at(i, j) = v >= sub ? v - sub : v + p - sub;
            }
        }
        info.pivot_cols.push_back(c);
        ++r;
    }
    info.rank = r;
    return info;
}

// ----- Q / Q(i) kernel -----

// Scale a row so all entries are (Gaussian-)integers with unit content.
void make_row_integral(Mat& m, int i) {
    mpz_class l = 1;
    for (int j = 0; j < m.nc; ++j) {
        const Scalar& s = m.at(i, j);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den().get_mpz_t());
        if (m.field.kind == FieldKind::QI)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (int j = 0; j < m.nc; ++j) {
        const Scalar& s = m.at(i, j);
        mpz_class nre = s.re().get_num() * (l / s.re().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nre.get_mpz_t());
        if (m.field.kind == FieldKind::QI) {
            mpz_class nim = s.im().get_num() * (l / s.im().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nim.get_mpz_t());
        }
    }
    if (g == 0) return;  // zero row
    mpq_class scale = mpq_class(l) / mpq_class(g);
    scale.canonicalize();
    if (scale == 1) return;
    Scalar sc = m.field.kind == FieldKind::QI ? Scalar::gaussian(scale, 0) : Scalar::rational(scale);
    for (int j = 0; j < m.nc; ++j) m.at(i, j) = m.at(i, j) * sc;
}

RrefInfo rref_bareiss(Mat& m, bool parallel) {
    RrefInfo info;
    for (int i = 0; i < m.nr; ++i) make_row_integral(m, i);

    const Scalar one = Scalar::one(m.field);
    Scalar prev = one;
    int r = 0;
    for (int c = 0; c < m.nc && r < m.nr; ++c) {
        int pr = -1;
        for (int i = r; i < m.nr; ++i) {
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(r, j));
        }
        const Scalar piv = m.at(r, c);
        const Scalar prev_inv = prev.inverse();
        bool par = parallel && static_cast<long>(m.nr - r) * (m.nc - c) >= kParallelMinWork;
#pragma omp parallel for schedule(static) if (par)
        for (int i = r + 1; i < m.nr; ++i) {
            Scalar f = m.at(i, c);
            // One-step fraction-free update: stays integral, and the
            // division by the previous pivot is exact in Z / Z[i].
            for (int j = c + 1; j < m.nc; ++j) {
                m.at(i, j) = (m.at(i, j) * piv - f * m.at(r, j)) * prev_inv;
            }
            m.at(i, c) = Scalar::zero(m.field);
        }
        prev = piv;
        info.pivot_cols.push_back(c);
        ++r;
    }
    info.rank = r;

    // Field-arithmetic back pass: normalize pivots to 1, clear above.
    for (int k = info.rank - 1; k >= 0; --k) {
        int pc = info.pivot_cols[k];
        Scalar inv = m.at(k, pc).inverse();
        for (int j = pc; j < m.nc; ++j) m.at(k, j) = m.at(k, j) * inv;
        bool par = parallel && static_cast<long>(k) * (m.nc - pc) >= kParallelMinWork;
#pragma omp parallel for schedule(static) if (par)
        for (int i = 0; i < k; ++i) {
            Scalar f = m.at(i, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < m.nc; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return info;
}

}  // namespace

RrefInfo rref_fast(Mat& m, bool parallel) {
    if (m.field.kind == FieldKind::Fp) {
        FpView v{m.nr, m.nc, m.field.p, {}};
        v.a.resize(m.a.size());
        for (std::size_t k = 0; k < m.a.size(); ++k) v.a[k] = m.a[k].fp_value();
        RrefInfo info = rref_fp(v, parallel);
        for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = Scalar::fp(m.field, v.a[k]);
        return info;
    }
    return rref_bareiss(m, parallel);
}

RrefInfo rref(Mat& m, ElimBackend backend) {
    switch (backend) {
        case ElimBackend::Reference: return rref_reference(m);
        case ElimBackend::Fast: return rref_fast(m, false);
        case ElimBackend::FastParallel: return rref_fast(m, true);
    }
    throw Error("unknown elimination backend");
}

}  // namespace freecurve
