#pragma once

// Small hand-rolled generators for property tests. Fixed seeds keep every
// run reproducible.

#include "kpr/exactq/matrix.hpp"
#include "kpr/polyring/poly.hpp"

#include <random>

namespace gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  kpr::Rational rational(std::int64_t span = 50) {
    std::int64_t den = integer(1, span);
    return kpr::Rational(integer(-span, span), den);
  }

  // Occasionally huge, to push values through the arbitrary-precision path.
  kpr::Rational wide_rational() {
    if (integer(0, 3) != 0) return rational(1'000'000);
    kpr::Integer num(std::to_string(integer(1, 999'999'999)) + std::to_string(integer(100'000'000, 999'999'999)) +
                     std::to_string(integer(100'000'000, 999'999'999)));
    if (coin()) num = -num;
    return kpr::Rational(num, kpr::Integer(integer(1, 1'000'000'007)));
  }

  kpr::Rational nonzero_rational(std::int64_t span = 50) {
    for (;;) {
      auto r = rational(span);
      if (!r.is_zero()) return r;
    }
  }

  kpr::VectorQ vector(std::size_t n, std::int64_t span = 3) {
    kpr::VectorQ v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(kpr::Rational(integer(-span, span)));
    return v;
  }

  kpr::MatrixQ int_matrix(std::size_t m, std::size_t n, std::int64_t span = 3) {
    kpr::MatrixQ a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = kpr::Rational(integer(-span, span));
    }
    return a;
  }

  kpr::PolyZ0 poly(unsigned max_degree = 3) {
    std::map<unsigned, kpr::Rational> c;
    for (unsigned d = 1; d <= max_degree; ++d) {
      if (coin()) c[d] = rational(9);
    }
    return kpr::PolyZ0(c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
