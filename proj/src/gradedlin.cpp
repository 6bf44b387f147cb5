#include "freecurve/gradedlin.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "freecurve/errors.hpp"

namespace freecurve {

GradedIdeal::GradedIdeal(const FieldId& f, std::vector<Poly> generators) : field(f) {
    for (Poly& g : generators) {
        if (g.is_zero()) continue;  // zero generators are dropped silently
        if (!(g.field() == f)) throw FieldMismatch("ideal generator in a different field");
        g.homogeneous_degree();  // throws NonHomogeneous
        gens.push_back(std::move(g));
    }
}

long HilbertProfile::length() const {
    if (verdict != ProfileVerdict::Finite || !stable_value)
        throw InconclusiveProfile("profile did not stabilize; no length available");
    return *stable_value;
}

std::string verdict_name(ProfileVerdict v) {
    switch (v) {
        case ProfileVerdict::Finite: return "finite";
        case ProfileVerdict::PositiveDimensional: return "positive-dimensional";
        case ProfileVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

long dim_rt(int t) {
    if (t < 0) return 0;
    return static_cast<long>(t + 2) * (t + 1) / 2;
}

std::vector<Monomial> monomial_basis(int e) {
    if (e < 0) throw Refusal("monomial_basis requires e >= 0");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(dim_rt(e)));
    for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(e); ++a)
        for (std::uint32_t b = 0; a + b <= static_cast<std::uint32_t>(e); ++b)
            out.push_back(Monomial{{a, b, static_cast<std::uint32_t>(e) - a - b}});
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return y < x; });
    return out;
}

namespace {

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis) {
    std::map<Monomial, int> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], static_cast<int>(k));
    return idx;
}

// Rows = monomial multiples m*g_i of all generators landing in degree t,
// columns = monomial basis of degree t.
Mat product_row_matrix(const GradedIdeal& ideal, int t, std::vector<Monomial>* cols_out = nullptr) {
    std::vector<Monomial> cols = monomial_basis(t);
    auto idx = index_of(cols);
    std::vector<std::pair<int, Monomial>> rows;  // (generator index, multiplier)
    for (std::size_t gi = 0; gi < ideal.gens.size(); ++gi) {
        int d = ideal.gens[gi].homogeneous_degree();
        if (d > t) continue;
        for (const Monomial& m : monomial_basis(t - d)) rows.emplace_back(static_cast<int>(gi), m);
    }
    Mat a(static_cast<int>(rows.size()), static_cast<int>(cols.size()), ideal.field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Poly& g = ideal.gens[static_cast<std::size_t>(rows[r].first)];
        for (const Term& term : g.terms()) {
            Monomial m = term.m * rows[r].second;
            a.at(static_cast<int>(r), idx.at(m)) = term.c;
        }
    }
    if (cols_out) *cols_out = std::move(cols);
    return a;
}

}  // namespace

int degree_piece_dim(const GradedIdeal& ideal, int t, ElimBackend backend) {
    if (t < 0) return 0;
    Mat a = product_row_matrix(ideal, t);
    if (a.nr == 0) return 0;
    return rank_of(std::move(a), backend);
}

DegreePiece degree_piece(const GradedIdeal& ideal, int t, ElimBackend backend) {
    DegreePiece out;
    if (t < 0) return out;
    std::vector<Monomial> cols;
    Mat a = product_row_matrix(ideal, t, &cols);
    if (a.nr == 0) return out;
    RrefInfo info = rref(a, backend);
    out.dim = info.rank;
    for (int k = 0; k < info.rank; ++k) {
        std::vector<Term> terms;
        for (int j = 0; j < a.nc; ++j)
            if (!a.at(k, j).is_zero()) terms.push_back(Term{cols[static_cast<std::size_t>(j)], a.at(k, j)});
        out.basis.emplace_back(ideal.field, std::move(terms));
    }
    return out;
}

HilbertProfile hilbert_profile(const GradedIdeal& ideal, std::optional<int> t_max, ElimBackend backend) {
    if (ideal.gens.empty()) throw Refusal("hilbert_profile requires at least one nonzero generator");
    int auto_bound;
    {
        long sum = 0, mx = 0;
        for (const Poly& g : ideal.gens) {
            int d = g.homogeneous_degree();
            sum += d;
            mx = std::max<long>(mx, d);
        }
        auto_bound = static_cast<int>(std::max(sum, 3 * mx)) + 3;
    }
    int bound = t_max.value_or(auto_bound);

    HilbertProfile prof;
    prof.t_max = bound;
    auto stabilized = [&](void) -> bool {
        std::size_t n = prof.values.size();
        if (n < 4) return false;
        return prof.values[n - 1] == prof.values[n - 2] && prof.values[n - 2] == prof.values[n - 3] &&
               prof.values[n - 3] == prof.values[n - 4];
    };
    auto linear_growth = [&](void) -> bool {
        std::size_t n = prof.values.size();
        if (n < 5) return false;
        long d = prof.values[n - 1] - prof.values[n - 2];
        if (d <= 0) return false;
        for (int k = 2; k <= 4; ++k)
            if (prof.values[n - k] - prof.values[n - k - 1] != d) return false;
        return true;
    };

    // Batched so independent degrees can run in parallel while the verdict
    // scan stays sequential and deterministic.
    int t = 0;
    while (t <= bound) {
        int hi = std::min(bound, t + std::max(1, omp_get_max_threads()));
        std::vector<long> vals(static_cast<std::size_t>(hi - t + 1));
#pragma omp parallel for schedule(dynamic, 1)
        for (int u = t; u <= hi; ++u)
            vals[static_cast<std::size_t>(u - t)] = dim_rt(u) - degree_piece_dim(ideal, u, ElimBackend::Fast);
        for (long v : vals) {
            prof.values.push_back(v);
            if (stabilized()) {
                prof.verdict = ProfileVerdict::Finite;
                prof.stable_value = prof.values.back();
                prof.stabilized_at = static_cast<int>(prof.values.size()) - 4;
                return prof;
            }
            if (linear_growth()) {
                prof.verdict = ProfileVerdict::PositiveDimensional;
                return prof;
            }
        }
        t = hi + 1;
    }
    prof.verdict = ProfileVerdict::Inconclusive;
    return prof;
}

std::optional<std::vector<Poly>> membership_certificate(const Poly& f, const GradedIdeal& ideal,
                                                        ElimBackend backend) {
    int n = f.homogeneous_degree();
    if (f.is_zero()) throw Refusal("membership_certificate: zero polynomial");
    if (ideal.gens.empty()) return std::nullopt;

    // Columns = (generator, multiplier monomial) pairs; right-hand side = f.
    std::vector<Monomial> rows_basis = monomial_basis(n);
    auto row_idx = index_of(rows_basis);
    struct Col {
        int gen;
        Monomial mult;
    };
    std::vector<Col> cols;
    for (std::size_t gi = 0; gi < ideal.gens.size(); ++gi) {
        int d = ideal.gens[gi].homogeneous_degree();
        if (d > n) continue;
        for (const Monomial& m : monomial_basis(n - d)) cols.push_back(Col{static_cast<int>(gi), m});
    }
    if (cols.empty()) return std::nullopt;
    Mat a(static_cast<int>(rows_basis.size()), static_cast<int>(cols.size()), ideal.field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Poly& g = ideal.gens[static_cast<std::size_t>(cols[c].gen)];
        for (const Term& term : g.terms())
            a.at(row_idx.at(term.m * cols[c].mult), static_cast<int>(c)) = term.c;
    }
    std::vector<Scalar> b(rows_basis.size(), Scalar::zero(ideal.field));
    for (const Term& term : f.terms()) b[static_cast<std::size_t>(row_idx.at(term.m))] = term.c;

    SolveOutcome out = solve_linear(a, b, backend);
    if (!out.solution) return std::nullopt;

    std::vector<Poly> qs(ideal.gens.size(), Poly::zero(ideal.field));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Scalar& coeff = (*out.solution)[c];
        if (coeff.is_zero()) continue;
        qs[static_cast<std::size_t>(cols[c].gen)] =
            qs[static_cast<std::size_t>(cols[c].gen)] + Poly::monomial(coeff, cols[c].mult);
    }
    // Re-check the identity by expansion, independent of the solver.
    Poly acc = Poly::zero(ideal.field);
    for (std::size_t gi = 0; gi < ideal.gens.size(); ++gi) acc = acc + qs[gi] * ideal.gens[gi];
    if (!(acc == f)) throw ConsistencyError("membership certificate failed re-expansion");
    return qs;
}

std::vector<std::vector<Poly>> graded_kernel(std::span<const Poly> maps, int e, ElimBackend backend) {
    if (maps.empty()) throw Refusal("graded_kernel: empty map list");
    const FieldId field = maps[0].field();
    int s = -1;
    for (const Poly& h : maps) {
        if (!(h.field() == field)) throw FieldMismatch();
        if (h.is_zero()) continue;
        int d = h.homogeneous_degree();
        if (s < 0) s = d;
        if (s != d) throw DegreeMismatch("graded_kernel maps must share one degree");
    }
    if (e < 0) return {};
    if (s < 0) {
        // All maps zero: everything is in the kernel; return the standard basis.
        std::vector<std::vector<Poly>> all;
        auto mons = monomial_basis(e);
        for (std::size_t j = 0; j < maps.size(); ++j)
            for (const Monomial& m : mons) {
                std::vector<Poly> tup(maps.size(), Poly::zero(field));
                tup[j] = Poly::monomial(Scalar::one(field), m);
                all.push_back(std::move(tup));
            }
        return all;
    }

    std::vector<Monomial> target = monomial_basis(e + s);
    auto row_idx = index_of(target);
    std::vector<Monomial> source = monomial_basis(e);
    const int k = static_cast<int>(maps.size());
    const int cols = k * static_cast<int>(source.size());
    Mat a(static_cast<int>(target.size()), cols, field);
    for (int j = 0; j < k; ++j) {
        for (std::size_t mi = 0; mi < source.size(); ++mi) {
            int col = j * static_cast<int>(source.size()) + static_cast<int>(mi);
            for (const Term& term : maps[static_cast<std::size_t>(j)].terms())
                a.at(row_idx.at(term.m * source[mi]), col) = term.c;
        }
    }
    auto kernel = right_kernel(a, backend);
    std::vector<std::vector<Poly>> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        std::vector<Poly> tup;
        tup.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            std::vector<Term> terms;
            for (std::size_t mi = 0; mi < source.size(); ++mi) {
                const Scalar& c = v[static_cast<std::size_t>(j) * source.size() + mi];
                if (!c.is_zero()) terms.push_back(Term{source[mi], c});
            }
            tup.emplace_back(field, std::move(terms));
        }
        // Every kernel tuple satisfies the defining relation exactly.
        Poly check = Poly::zero(field);
        for (int j = 0; j < k; ++j) check = check + tup[static_cast<std::size_t>(j)] * maps[static_cast<std::size_t>(j)];
        if (!check.is_zero()) throw ConsistencyError("graded_kernel output failed re-expansion");
        out.push_back(std::move(tup));
    }
    return out;
}

}  // namespace freecurve
