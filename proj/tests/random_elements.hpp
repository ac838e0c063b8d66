#pragma once

#include <random>

#include "heisenweyl/hpq.hpp"
#include "random_scalars.hpp"

namespace heisenweyl::testing {

/// Random element of H with total degree at most max_degree. Coefficients
/// are small Laurent polynomials so products stay cheap.
inline PBWElement random_pbw(std::mt19937& rng, int max_degree, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_degree);
  PBWElement f;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    int i = split(rng);
    int j = std::uniform_int_distribution<int>(0, d - i)(rng);
    int k = d - i - j;
    f.add_term({i, j, k}, Scalar(random_laurent(rng, 2, 1, false, false)));
  }
  return f;
}

/// Like random_pbw but with x and z exponents in [-max_abs, max_abs].
inline PBWElement random_local(std::mt19937& rng, int max_abs, int max_y, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ik(-max_abs, max_abs), jd(0, max_y);
  PBWElement f;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) f.add_term({ik(rng), jd(rng), ik(rng)}, Scalar(random_laurent(rng, 2, 1, false, false)));
  return f;
}

}  // namespace heisenweyl::testing
