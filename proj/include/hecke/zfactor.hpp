#ifndef HECKE_ZFACTOR_HPP
#define HECKE_ZFACTOR_HPP

#include <vector>

#include "hecke/qpoly.hpp"

namespace hecke {

/// Monic irreducible factors over Q of a nonconstant polynomial, with multiplicity,
/// sorted by degree then coefficients. Berlekamp–Zassenhaus with Hensel lifting.
std::vector<QPoly> factor_over_q(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

/// A divisor of the Galois group order of f: lcm of Frobenius orders over nprimes good primes.
long galois_order_divisor(const QPoly& f, int nprimes = 30);

}  // namespace hecke

#endif
