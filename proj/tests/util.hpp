#ifndef HECKE_TEST_UTIL_HPP
#define HECKE_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "hecke/qpoly.hpp"

// Polynomial from integer coefficients, lowest degree first.
inline hecke::QPoly poly(std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return hecke::QPoly(std::move(v));
}

#endif
