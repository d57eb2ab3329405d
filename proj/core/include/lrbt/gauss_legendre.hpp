#ifndef LRBT_GAUSS_LEGENDRE_HPP
#define LRBT_GAUSS_LEGENDRE_HPP

#include <vector>

namespace lrbt {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // positive, sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

}  // namespace lrbt

#endif  // LRBT_GAUSS_LEGENDRE_HPP
