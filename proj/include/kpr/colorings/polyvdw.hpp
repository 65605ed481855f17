#pragma once

#include "kpr/colorings/coloring.hpp"
#include "kpr/polyring/poly.hpp"

#include <optional>
#include <vector>

namespace kpr {

struct PolyVdwWitness {
  std::uint64_t a = 0;
  std::uint64_t d = 0;
  std::uint32_t color = 0;

  friend bool operator==(const PolyVdwWitness&, const PolyVdwWitness&) = default;
};

/// Least (a, d), ordered by a + d and then a, with a, d >= 1 such that
/// {a} and every a + P(d) lie in [1..N] and share a color. Values of P(d)
/// that are not integers disqualify d.
std::optional<PolyVdwWitness> poly_vdw_witness(const Coloring& c, const std::vector<PolyZ0>& polys);

/// {a} together with a + P(d) for each P, as given (no range check).
std::vector<Rational> poly_vdw_points(const std::vector<PolyZ0>& polys, std::uint64_t a, std::uint64_t d);

}  // namespace kpr
