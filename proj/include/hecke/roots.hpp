#ifndef HECKE_ROOTS_HPP
#define HECKE_ROOTS_HPP

#include <vector>

#include "hecke/qpoly.hpp"
#include "hecke/real.hpp"

namespace hecke {

struct RootSet {
  std::vector<Complex> roots;
  unsigned bits = 0;      // precision actually used
  Real separation;        // smallest pairwise distance
};

/// All complex roots of a squarefree polynomial. Starts at `bits` and doubles the
/// precision (at most 8 times) until the roots are pairwise separated by more than
/// 2^(-bits/2). Roots whose conjugate is themselves are returned with zero imaginary part.
RootSet polynomial_roots(const QPoly& f, unsigned bits);

/// Index of the nearest element of `pts` to z; `dist` receives the distance.
size_t nearest(const std::vector<Complex>& pts, const Complex& z, Real* dist = nullptr);

}  // namespace hecke

#endif
