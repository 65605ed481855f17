#include "kpr/colorings/polyvdw.hpp"

#include <algorithm>

namespace kpr {

namespace {

// Past this d some nonzero P has |P(d)| >= N, which pushes a + P(d) out of
// [1..N]: |P(d)| >= d^(k-1) (|c_k| d - S) with S the other coefficients' mass.
std::uint64_t d_bound(const std::vector<PolyZ0>& polys, std::uint64_t n) {
  std::optional<Rational> best;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const auto& cs = p.coefficients();
    Rational others;
    for (auto it = cs.begin(); it != std::prev(cs.end()); ++it) others += abs(it->second);
    const Rational bound = (others + Rational(static_cast<std::int64_t>(n))) / abs(cs.rbegin()->second);
    if (!best || bound < *best) best = bound;
  }
  if (!best) return 1;
  const Integer ceil_d = (best->numerator() + best->denominator() - 1) / best->denominator();
  return std::max<std::uint64_t>(1, std::min<std::uint64_t>(ceil_d.get_ui(), n + 1));
}

}  // namespace

std::vector<Rational> poly_vdw_points(const std::vector<PolyZ0>& polys, std::uint64_t a, std::uint64_t d) {
  const Rational ra(static_cast<std::int64_t>(a));
  const Rational rd(static_cast<std::int64_t>(d));
  std::vector<Rational> out{ra};
  for (const auto& p : polys) out.push_back(ra + p.eval(rd));
  return out;
}

std::optional<PolyVdwWitness> poly_vdw_witness(const Coloring& c, const std::vector<PolyZ0>& polys) {
  const std::uint64_t n = c.size();
  const std::uint64_t dmax = d_bound(polys, n);

  // shifts[d-1] holds P(d) for each P, or nothing if some value is not an
  // integer or has magnitude >= N (then no a in [1..N] works).
  std::vector<std::optional<std::vector<std::int64_t>>> shifts(dmax);
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    std::vector<std::int64_t> vals;
    bool ok = true;
    for (const auto& p : polys) {
      const Rational v = p.eval(Rational(static_cast<std::int64_t>(d)));
      const auto iv = v.is_integer() ? v.to_int64() : std::nullopt;
      if (!iv || *iv >= static_cast<std::int64_t>(n) || *iv <= -static_cast<std::int64_t>(n)) {
        ok = false;
        break;
      }
      vals.push_back(*iv);
    }
    if (ok) shifts[d - 1] = std::move(vals);
  }

  for (std::uint64_t s = 2; s <= n + dmax; ++s) {
    for (std::uint64_t a = std::max<std::uint64_t>(1, s > dmax ? s - dmax : 1); a < s && a <= n; ++a) {
      const std::uint64_t d = s - a;
      if (!shifts[d - 1]) continue;
      const std::uint32_t color = c[a];
      const bool mono = std::all_of(shifts[d - 1]->begin(), shifts[d - 1]->end(), [&](std::int64_t shift) {
        const std::int64_t v = static_cast<std::int64_t>(a) + shift;
        return v >= 1 && static_cast<std::uint64_t>(v) <= n && c[static_cast<std::uint64_t>(v)] == color;
      });
      if (mono) return PolyVdwWitness{a, d, color};
    }
  }
  return std::nullopt;
}

}  // namespace kpr
