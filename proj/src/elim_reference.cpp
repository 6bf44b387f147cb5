#include "freecurve/errors.hpp"
#include "freecurve/matrix.hpp"

namespace freecurve {

// Serial exact Gauss-Jordan over the field. Deliberately plain: this is the
// reference the fast kernels are compared against in the test suite.
RrefInfo rref_reference(Mat& m) {
    RrefInfo info;
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
            for (int j = 0; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(r, j));
        }
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.nc; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.nr; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.nc; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        info.pivot_cols.push_back(c);
        ++r;
    }
    info.rank = r;
    return info;
}

}  // namespace freecurve
