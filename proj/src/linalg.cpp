#include <algorithm>
#include <cstdint>

#include "freecurve/errors.hpp"
#include "freecurve/matrix.hpp"
#include "freecurve/numbertheory.hpp"

// Kernel / solve layer. Direct path: one exact elimination. Over Q, large
// systems first run mod a ladder of 61-bit primes; candidate answers are
// lifted by CRT + rational reconstruction and then re-verified exactly, so
// a wrong prime can never leak into a result:
//   * a verified vector is a kernel vector, full stop;
//   * completeness follows from dim ker_Q <= dim ker_p for any prime at
//     which the matrix reduces, so matching the mod-p count is a proof.
// Any failure to certify falls back to the direct exact elimination.

namespace freecurve {

namespace {

const std::vector<std::uint64_t>& prime_ladder(std::size_t need) {
    static std::vector<std::uint64_t> primes;
    static mpz_class cursor = mpz_class(1) << 61;
    while (primes.size() < need) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        primes.push_back(static_cast<std::uint64_t>(cursor.get_ui()));
    }
    return primes;
}

constexpr std::size_t kMaxPrimes = 24;

struct FpMat {
    int nr = 0, nc = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> a;
    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * nc + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * nc + j]; }
};

std::optional<FpMat> reduce_mat(const Mat& m, std::uint64_t p) {
    FpMat r{m.nr, m.nc, p, {}};
    r.a.resize(m.a.size());
    try {
        for (std::size_t k = 0; k < m.a.size(); ++k) r.a[k] = m.a[k].reduce_mod(p);
    } catch (const FieldUnsupported&) {
        return std::nullopt;
    }
    return r;
}

RrefInfo rref_fp_mat(FpMat& m) {
    RrefInfo info;
    const std::uint64_t p = m.p;
    int r = 0;
    for (int c = 0; c < m.nc && r < m.nr; ++c) {
        int pr = -1;
        for (int i = r; i < m.nr; ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(r, j));
        std::uint64_t inv = inv_mod(m.at(r, c), p);
        for (int j = c; j < m.nc; ++j) m.at(r, j) = mul_mod(m.at(r, j), inv, p);
#pragma omp parallel for schedule(static) if (static_cast<long>(m.nr) * (m.nc - c) >= (1 << 15))
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

// Wang-style rational reconstruction; every candidate is re-verified later.
std::optional<mpq_class> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(modulus / 2).get_mpz_t());
    mpz_class r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
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
    if (t1 > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

void crt_combine(mpz_class& x, const mpz_class& modulus, std::uint64_t r, std::uint64_t p) {
    // x' = x + modulus * ((r - x) * modulus^{-1} mod p)
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_class mm = modulus % pm;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pm.get_mpz_t());
    mpz_class delta = ((mpz_class(static_cast<unsigned long>(r)) - x) % pm) * minv % pm;
    if (delta < 0) delta += pm;
    x += modulus * delta;
}

bool verify_kernel_vector(const Mat& m, const std::vector<Scalar>& v) {
    for (int i = 0; i < m.nr; ++i) {
        Scalar acc = Scalar::zero(m.field);
        for (int j = 0; j < m.nc; ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            acc += m.at(i, j) * v[j];
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<std::vector<Scalar>> kernel_from_rref(const Mat& m, const RrefInfo& info) {
    std::vector<bool> is_pivot(m.nc, false);
    for (int c : info.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < m.nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.nc, Scalar::zero(m.field));
        v[f] = Scalar::one(m.field);
        for (int k = 0; k < info.rank; ++k) v[info.pivot_cols[k]] = -m.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool worth_modular(const Mat& m) {
    if (m.field.kind != FieldKind::Q) return false;
    double work = static_cast<double>(m.nr) * m.nc * std::min(m.nr, m.nc);
    return work > 2.0e6;
}

// Multimodular kernel over Q. Returns nullopt when certification fails.
std::optional<std::vector<std::vector<Scalar>>> modular_kernel(const Mat& m) {
    struct Acc {
        RrefInfo shape;
        std::vector<mpz_class> residues;  // rank x (#free cols), row-major
        mpz_class modulus = 1;
        std::vector<int> free_cols;
        int primes_used = 0;
    };
    std::optional<Acc> acc;
    for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
        std::uint64_t p = prime_ladder(pi + 1)[pi];
        auto fm = reduce_mat(m, p);
        if (!fm) continue;
        RrefInfo info = rref_fp_mat(*fm);
        if (info.rank == m.nc) return std::vector<std::vector<Scalar>>{};  // dim ker_Q <= 0: certified empty
        if (acc && info.pivot_cols != acc->shape.pivot_cols) {
            if (info.rank > acc->shape.rank) acc.reset();  // previous primes were unlucky
            else
                continue;  // this prime is unlucky
        }
        if (!acc) {
            Acc a;
            a.shape = info;
            std::vector<bool> is_pivot(m.nc, false);
            for (int c : info.pivot_cols) is_pivot[c] = true;
            for (int c = 0; c < m.nc; ++c)
                if (!is_pivot[c]) a.free_cols.push_back(c);
            a.residues.assign(static_cast<std::size_t>(info.rank) * a.free_cols.size(), mpz_class(0));
            acc = std::move(a);
        }
        for (int k = 0; k < acc->shape.rank; ++k)
            for (std::size_t fj = 0; fj < acc->free_cols.size(); ++fj)
                crt_combine(acc->residues[k * acc->free_cols.size() + fj], acc->modulus,
                            fm->at(k, acc->free_cols[fj]), p);
        acc->modulus *= mpz_class(static_cast<unsigned long>(p));
        acc->primes_used++;

        // Attempt reconstruction + exact verification.
        std::vector<std::vector<Scalar>> basis;
        bool ok = true;
        for (std::size_t fj = 0; fj < acc->free_cols.size() && ok; ++fj) {
            std::vector<Scalar> v(m.nc, Scalar::zero(m.field));
            v[acc->free_cols[fj]] = Scalar::one(m.field);
            for (int k = 0; k < acc->shape.rank && ok; ++k) {
                auto q = rational_reconstruct(acc->residues[k * acc->free_cols.size() + fj], acc->modulus);
                if (!q) {
                    ok = false;
                    break;
                }
                v[acc->shape.pivot_cols[k]] = -Scalar::rational(*q);
            }
            if (ok) basis.push_back(std::move(v));
        }
        if (!ok) continue;
        for (const auto& v : basis)
            if (!verify_kernel_vector(m, v)) {
                ok = false;
                break;
            }
        if (ok) return basis;  // complete: count equals dim ker mod a good prime
    }
    return std::nullopt;
}

// Multimodular solve over Q; certifies one solution or one infeasibility witness.
std::optional<SolveOutcome> modular_solve(const Mat& m, const std::vector<Scalar>& b) {
    struct Acc {
        std::vector<int> pivot_cols;
        bool feasible = false;
        std::vector<mpz_class> residues;
        mpz_class modulus = 1;
    };
    std::optional<Acc> acc;
    int best_rank = -1;
    for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
        std::uint64_t p = prime_ladder(pi + 1)[pi];
        // Reduce the augmented system.
        Mat aug(m.nr, m.nc + 1, m.field);
        for (int i = 0; i < m.nr; ++i) {
            for (int j = 0; j < m.nc; ++j) aug.at(i, j) = m.at(i, j);
            aug.at(i, m.nc) = b[i];
        }
        auto fm = reduce_mat(aug, p);
        if (!fm) continue;
        RrefInfo info = rref_fp_mat(*fm);
        bool feasible = info.pivot_cols.empty() || info.pivot_cols.back() != m.nc;
        if (acc && (feasible != acc->feasible || info.pivot_cols != acc->pivot_cols)) {
            if (info.rank > best_rank) acc.reset();
            else
                continue;
        }
        if (!acc) {
            Acc a;
            a.pivot_cols = info.pivot_cols;
            a.feasible = feasible;
            best_rank = info.rank;
            if (feasible) {
                a.residues.assign(info.pivot_cols.size(), mpz_class(0));
            } else {
                // Infeasibility witness: a row combination proving 0 = 1.
                // Track it by eliminating [A | b | I] and reading the row
                // of the unit pivot in the b column.
                a.residues.assign(m.nr, mpz_class(0));
            }
            acc = std::move(a);
        }
        if (acc->feasible) {
            for (std::size_t k = 0; k < acc->pivot_cols.size(); ++k)
                crt_combine(acc->residues[k], acc->modulus, fm->at(static_cast<int>(k), m.nc), p);
        } else {
            // Re-run with an identity tail to extract the witness row.
            Mat wit(m.nr, m.nc + 1 + m.nr, m.field);
            for (int i = 0; i < m.nr; ++i) {
                for (int j = 0; j < m.nc; ++j) wit.at(i, j) = m.at(i, j);
                wit.at(i, m.nc) = b[i];
                wit.at(i, m.nc + 1 + i) = Scalar::one(m.field);
            }
            auto wm = reduce_mat(wit, p);
            if (!wm) continue;
            // Eliminate only the first nc+1 columns; the tail records row ops.
            FpMat& w = *wm;
            RrefInfo winfo;
            int r = 0;
            for (int c = 0; c <= m.nc && r < m.nr; ++c) {
                int pr = -1;
                for (int i = r; i < m.nr; ++i)
                    if (w.at(i, c) != 0) {
                        pr = i;
                        break;
                    }
                if (pr < 0) continue;
                if (pr != r)
                    for (int j = c; j < w.nc; ++j) std::swap(w.at(pr, j), w.at(r, j));
                std::uint64_t inv = inv_mod(w.at(r, c), p);
                for (int j = c; j < w.nc; ++j) w.at(r, j) = mul_mod(w.at(r, j), inv, p);
                for (int i = 0; i < m.nr; ++i) {
                    if (i == r) continue;
                    std::uint64_t f = w.at(i, c);
                    if (f == 0) continue;
                    for (int j = c; j < w.nc; ++j) {
                        std::uint64_t sub = mul_mod(f, w.at(r, j), p);
                        std::uint64_t v = w.at(i, j);
                        w.at(i, j) = v >= sub ? v - sub : v + p - sub;
                    }
                }
                winfo.pivot_cols.push_back(c);
                ++r;
            }
            int brow = -1;
            for (std::size_t k = 0; k < winfo.pivot_cols.size(); ++k)
                if (winfo.pivot_cols[k] == m.nc) brow = static_cast<int>(k);
            if (brow < 0) continue;  // disagreement with the plain reduction; skip
            for (int i = 0; i < m.nr; ++i)
                crt_combine(acc->residues[i], acc->modulus, w.at(brow, m.nc + 1 + i), p);
        }
        acc->modulus *= mpz_class(static_cast<unsigned long>(p));

        // Reconstruct + verify.
        std::vector<Scalar> vec(acc->residues.size(), Scalar::zero(m.field));
        bool ok = true;
        for (std::size_t k = 0; k < acc->residues.size(); ++k) {
            auto q = rational_reconstruct(acc->residues[k], acc->modulus);
            if (!q) {
                ok = false;
                break;
            }
            vec[k] = Scalar::rational(*q);
        }
        if (!ok) continue;
        if (acc->feasible) {
            std::vector<Scalar> x(m.nc, Scalar::zero(m.field));
            for (std::size_t k = 0; k < acc->pivot_cols.size(); ++k) x[acc->pivot_cols[k]] = vec[k];
            bool good = true;
            for (int i = 0; i < m.nr && good; ++i) {
                Scalar accum = Scalar::zero(m.field);
                for (int j = 0; j < m.nc; ++j)
                    if (!m.at(i, j).is_zero() && !x[j].is_zero()) accum += m.at(i, j) * x[j];
                good = accum == b[i];
            }
            if (good) return SolveOutcome{std::move(x), false};
        } else {
            // y^T A = 0 and y^T b != 0 proves infeasibility.
            bool good = true;
            Scalar yb = Scalar::zero(m.field);
            for (int i = 0; i < m.nr; ++i)
                if (!vec[i].is_zero()) yb += vec[i] * b[i];
            if (yb.is_zero()) good = false;
            for (int j = 0; j < m.nc && good; ++j) {
                Scalar accum = Scalar::zero(m.field);
                for (int i = 0; i < m.nr; ++i)
                    if (!vec[i].is_zero() && !m.at(i, j).is_zero()) accum += vec[i] * m.at(i, j);
                good = accum.is_zero();
            }
            if (good) return SolveOutcome{std::nullopt, true};
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::vector<Scalar>> right_kernel(const Mat& m, ElimBackend backend) {
    if (backend != ElimBackend::Reference && worth_modular(m)) {
        auto fast = modular_kernel(m);
        if (fast) return *fast;
    }
    Mat work = m;
    RrefInfo info = rref(work, backend);
    return kernel_from_rref(work, info);
}

SolveOutcome solve_linear(const Mat& m, const std::vector<Scalar>& b, ElimBackend backend) {
    if (static_cast<int>(b.size()) != m.nr) throw Refusal("solve_linear: right-hand side has wrong length");
    if (backend != ElimBackend::Reference && worth_modular(m)) {
        auto fast = modular_solve(m, b);
        if (fast) return *fast;
    }
    Mat aug(m.nr, m.nc + 1, m.field);
    for (int i = 0; i < m.nr; ++i) {
        for (int j = 0; j < m.nc; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.nc) = b[i];
    }
    RrefInfo info = rref(aug, backend);
    if (!info.pivot_cols.empty() && info.pivot_cols.back() == m.nc) return SolveOutcome{std::nullopt, true};
    std::vector<Scalar> x(m.nc, Scalar::zero(m.field));
    for (std::size_t k = 0; k < info.pivot_cols.size(); ++k) x[info.pivot_cols[k]] = aug.at(static_cast<int>(k), m.nc);
    return SolveOutcome{std::move(x), false};
}

int rank_of(Mat m, ElimBackend backend) { return rref(m, backend).rank; }

}  // namespace freecurve
