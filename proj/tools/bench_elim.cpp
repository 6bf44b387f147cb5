// Compares the elimination kernels: the serial reference Gauss-Jordan, the
// fraction-free / machine-word fast kernel, and its OpenMP variant.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>

#include "freecurve/gradedlin.hpp"
#include "freecurve/matrix.hpp"

using namespace freecurve;

namespace {

Mat random_matrix(const FieldId& field, int nr, int nc, std::mt19937_64& rng) {
    Mat m(nr, nc, field);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) {
            long v = static_cast<long>(rng() % 19) - 9;
            m.at(i, j) = field.kind == FieldKind::Fp ? Scalar::fp(field, static_cast<std::uint64_t>(v + 9))
                                                     : Scalar::of_int(field, v);
        }
    return m;
}

// A structured instance: the kernel matrix of the gradient map of a curve,
// the shape the toolkit spends most of its time on.
Mat gradient_matrix(const FieldId& field, int curve_degree, int e) {
    Poly x = Poly::variable(field, 0), y = Poly::variable(field, 1), z = Poly::variable(field, 2);
    unsigned n = static_cast<unsigned>(curve_degree) / 3;
    Poly f = (x.pow(n) - y.pow(n)) * (x.pow(n) - z.pow(n)) * (y.pow(n) - z.pow(n));
    auto grad = f.gradient();
    auto target = monomial_basis(e + f.homogeneous_degree() - 1);
    auto source = monomial_basis(e);
    std::map<Monomial, int> idx;
    for (std::size_t k = 0; k < target.size(); ++k) idx.emplace(target[k], static_cast<int>(k));
    Mat m(static_cast<int>(target.size()), 3 * static_cast<int>(source.size()), field);
    for (int j = 0; j < 3; ++j)
        for (std::size_t mi = 0; mi < source.size(); ++mi)
            for (const Term& t : grad[static_cast<std::size_t>(j)].terms())
                m.at(idx.at(t.m * source[mi]), j * static_cast<int>(source.size()) + static_cast<int>(mi)) = t.c;
    return m;
}

double time_rref(Mat m, ElimBackend backend) {
    auto t0 = std::chrono::steady_clock::now();
    rref(m, backend);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void run_case(const char* label, const Mat& m) {
    double ref = time_rref(m, ElimBackend::Reference);
    double fast = time_rref(m, ElimBackend::Fast);
    double par = time_rref(m, ElimBackend::FastParallel);
    std::printf("%-34s %5dx%-5d  reference %9.2f ms   fast %9.2f ms   parallel %9.2f ms\n", label, m.nr,
                m.nc, ref, fast, par);
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);
    FieldId q = FieldId::rationals();
    FieldId fp = FieldId::prime_field(65537);

    run_case("GF(65537) dense random", random_matrix(fp, 400, 400, rng));
    run_case("Q dense random small entries", random_matrix(q, 120, 120, rng));
    run_case("Q gradient kernel (deg 6, e=4)", gradient_matrix(q, 6, 4));
    run_case("GF(65537) gradient kernel", gradient_matrix(fp, 6, 6));
    return 0;
}
