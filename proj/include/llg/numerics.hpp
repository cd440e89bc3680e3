#pragma once

#include <array>
#include <vector>

namespace llg {

// Finite-difference weights on arbitrary nodes (Fornberg's recursion).
// Returns (max_order+1) rows; row m holds the weights of the m-th derivative
// at x0, one weight per node. Exact for polynomials of degree < nodes.size().
std::vector<std::vector<double>> fornberg_weights(double x0, const std::vector<double>& nodes,
                                                  int max_order);

// Derivative of sampled data at 0 from an arbitrary stencil containing 0.
double stencil_derivative(const std::vector<double>& nodes, const std::vector<double>& values,
                          int order);

// Five abscissae u + m*h, m in {s..s+4}, with the window shifted so that all
// points stay inside [lo, hi] while still bracketing u (s in [-4, 0]).
std::array<double, 5> shifted_stencil5(double u, double h, double lo, double hi);

// Smallest odd node count >= n (and >= 3); composite Simpson needs odd n.
int odd_nodes(int n);

// Composite Simpson weights for n (odd, >= 3) equispaced nodes on [a, b].
std::vector<double> simpson_weights(int n, double a, double b);

}  // namespace llg
