#include "llg/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "llg/error.hpp"

namespace llg {

std::vector<std::vector<double>> fornberg_weights(double x0, const std::vector<double>& nodes,
                                                  int max_order) {
    const int n = static_cast<int>(nodes.size());
    if (n == 0 || max_order < 0 || max_order >= n)
        raise(Errc::Numerical, "fornberg_weights: need more nodes than derivative order");
    std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, max_order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            if (c3 == 0.0) raise(Errc::Numerical, "fornberg_weights: repeated node");
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

double stencil_derivative(const std::vector<double>& nodes, const std::vector<double>& values,
                          int order) {
    if (nodes.size() != values.size())
        raise(Errc::Numerical, "stencil_derivative: node/value count mismatch");
    const auto w = fornberg_weights(0.0, nodes, order);
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += w[order][k] * values[k];
    return acc;
}

std::array<double, 5> shifted_stencil5(double u, double h, double lo, double hi) {
    if (!(h > 0.0)) raise(Errc::Numerical, "shifted_stencil5: nonpositive step");
    if (hi - lo < 4.0 * h) raise(Errc::Numerical, "shifted_stencil5: domain shorter than stencil");
    const double slack = 1e-12 * (std::abs(hi) + std::abs(lo) + 1.0);
    int s = -2;
    while (s < 0 && u + s * h < lo - slack) ++s;
    while (s > -4 && u + (s + 4) * h > hi + slack) --s;
    std::array<double, 5> xs{};
    for (int m = 0; m < 5; ++m) xs[m] = u + (s + m) * h;
    return xs;
}

int odd_nodes(int n) {
    if (n < 3) return 3;
    return (n % 2 == 0) ? n + 1 : n;
}

std::vector<double> simpson_weights(int n, double a, double b) {
    if (n < 3 || n % 2 == 0) raise(Errc::Numerical, "simpson_weights: need odd n >= 3");
    const double h = (b - a) / (n - 1);
    std::vector<double> w(n, 0.0);
    w.front() = w.back() = h / 3.0;
    for (int i = 1; i < n - 1; ++i) w[i] = (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    return w;
}

} // namespace llg
