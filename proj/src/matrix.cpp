#include "qwalk/matrix.hpp"

#include <cmath>

namespace qwalk {

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    const size_t count = a.size() < b.size() ? a.size() : b.size();
    for (size_t i = 0; i < count; ++i) {
        const double d = std::fabs(a.data()[i] - b.data()[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

double inf_norm(const Matrix& a) {
    double worst = 0.0;
    for (int i = 0; i < a.n(); ++i) {
        double sum = 0.0;
        const double* r = a.row(i);
        for (int j = 0; j < a.n(); ++j) sum += std::fabs(r[j]);
        if (sum > worst) worst = sum;
    }
    return worst;
}

} // namespace qwalk
