#ifndef FREECURVE_MATRIX_HPP
#define FREECURVE_MATRIX_HPP

#include <optional>
#include <vector>

#include "freecurve/scalar.hpp"

namespace freecurve {

/// Dense matrix of exact field elements, row-major.
struct Mat {
    int nr = 0, nc = 0;
    FieldId field = FieldId::rationals();
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int rows, int cols, const FieldId& f)
        : nr(rows), nc(cols), field(f), a(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * nc + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * nc + j]; }
};

/// Which elimination kernel to run.
///  - Reference: textbook exact Gauss-Jordan over the field, serial. Kept as
///    the oracle the fast kernels are tested against.
///  - Fast: fraction-free (Bareiss) elimination on cleared-denominator rows
///    for Q / Q(i), machine-word arithmetic for GF(p). Serial.
///  - FastParallel: same kernels with OpenMP row updates. Bitwise-identical
///    output to Fast by construction (independent row writes).
enum class ElimBackend { Reference, Fast, FastParallel };

struct RrefInfo {
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefInfo rref_reference(Mat& m);
RrefInfo rref_fast(Mat& m, bool parallel);
RrefInfo rref(Mat& m, ElimBackend backend);

/// Outcome of an exact linear solve. Exactly one of the two holds:
/// a verified solution, or a certified proof of infeasibility.
struct SolveOutcome {
    std::optional<std::vector<Scalar>> solution;
    bool infeasible = false;
};

/// Basis of { v : A v = 0 }. Over Q, large instances take a multimodular
/// fast path whose result is certified exactly (every vector re-checked
/// against A, and completeness forced by the mod-p dimension bound
/// dim ker_Q <= dim ker_p); on any certification failure it falls back to
/// the direct fraction-free elimination. Deterministic for fixed inputs.
std::vector<std::vector<Scalar>> right_kernel(const Mat& m, ElimBackend backend = ElimBackend::FastParallel);

/// Solve A x = b exactly (same certification scheme as right_kernel).
SolveOutcome solve_linear(const Mat& m, const std::vector<Scalar>& b,
                          ElimBackend backend = ElimBackend::FastParallel);

/// Rank only.
int rank_of(Mat m, ElimBackend backend = ElimBackend::FastParallel);

}  // namespace freecurve

#endif
