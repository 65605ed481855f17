#include "kpr/colorings/coloring.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kpr {

Coloring::Coloring(std::size_t n, unsigned r, std::vector<std::uint32_t> colors) : r_(r), colors_(std::move(colors)) {
  if (n == 0) throw std::invalid_argument("coloring: N must be positive");
  if (r == 0) throw std::invalid_argument("coloring: need at least one color");
  if (colors_.size() != n) throw std::invalid_argument("coloring: expected " + std::to_string(n) + " entries");
  for (auto c : colors_) {
    if (c >= r) throw std::invalid_argument("coloring: color index out of range");
  }
}

Coloring Coloring::uniform(std::size_t n) { return Coloring(n, 1, std::vector<std::uint32_t>(n, 0)); }

Coloring Coloring::parity(std::size_t n) {
  std::vector<std::uint32_t> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = static_cast<std::uint32_t>(k % 2);
  return Coloring(n, 2, std::move(c));
}

Coloring Coloring::random(std::size_t n, unsigned r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, r - 1);
  std::vector<std::uint32_t> c(n);
  for (auto& x : c) x = pick(rng);
  return Coloring(n, r, std::move(c));
}

Coloring Coloring::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long r = 0;
  if (!(in >> n >> r) || n <= 0 || r <= 0) throw std::invalid_argument("coloring file: bad header, expected 'N r'");
  std::vector<std::uint32_t> colors;
  long long c = 0;
  while (in >> c) {
    if (c < 0) throw std::invalid_argument("coloring file: negative color");
    colors.push_back(static_cast<std::uint32_t>(c));
  }
  if (!in.eof()) throw std::invalid_argument("coloring file: non-numeric entry");
  return Coloring(static_cast<std::size_t>(n), static_cast<unsigned>(r), std::move(colors));
}

std::string Coloring::str() const {
  std::string out = std::to_string(size()) + " " + std::to_string(r_) + "\n";
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(colors_[i]);
  }
  return out + "\n";
}

std::uint32_t Coloring::color_of(std::uint64_t k) const {
  if (!contains(k)) throw std::out_of_range("coloring: " + std::to_string(k) + " outside [1.." + std::to_string(size()) + "]");
  return colors_[k - 1];
}

std::vector<std::uint64_t> Coloring::color_class(std::uint32_t c) const {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= colors_.size(); ++k) {
    if (colors_[k - 1] == c) out.push_back(k);
  }
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool has_zero_subset_sum_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
  // reachable[s]: some nonempty subset seen so far sums to s mod p
  std::vector<char> reachable(p, 0);
  const auto mod = static_cast<std::int64_t>(p);
  for (auto c : coeffs) {
    auto r = static_cast<std::size_t>(((c % mod) + mod) % mod);
    std::vector<char> next = reachable;
    next[r] = 1;
    for (std::size_t s = 0; s < p; ++s) {
      if (reachable[s]) next[(s + r) % p] = 1;
    }
    reachable = std::move(next);
  }
  return reachable[0] != 0;
}

RadoAvoider::RadoAvoider(std::vector<std::int64_t> coeffs, std::uint64_t p) : coeffs_(std::move(coeffs)), p_(p) {
  if (!is_prime(p_)) throw std::invalid_argument("rado-avoider: p must be prime");
  if (coeffs_.empty()) throw std::invalid_argument("rado-avoider: need at least one coefficient");
  for (auto c : coeffs_) {
    if (c == 0) throw std::invalid_argument("rado-avoider: coefficients must be nonzero");
  }
  if (has_zero_subset_sum_mod(coeffs_, p_)) {
    throw std::invalid_argument("rado-avoider: a nonempty subset of the coefficients sums to 0 mod " + std::to_string(p_));
  }
}

std::uint32_t RadoAvoider::color(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("rado-avoider: colors are defined on positive integers");
  while (n % p_ == 0) n /= p_;
  return static_cast<std::uint32_t>(n % p_ - 1);
}

Coloring RadoAvoider::take(std::size_t n) const {
  std::vector<std::uint32_t> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = color(k);
  return Coloring(n, num_colors(), std::move(c));
}

RadoAvoider rado_avoider_coloring(std::vector<std::int64_t> coeffs, std::uint64_t p) {
  return RadoAvoider(std::move(coeffs), p);
}

namespace {

std::string_view inside_parens(std::string_view spec, std::string_view head) {
  spec.remove_prefix(head.size());
  if (spec.size() < 2 || spec.front() != '(' || spec.back() != ')') {
    throw std::invalid_argument("coloring spec '" + std::string(head) + "' expects (...)");
  }
  return spec.substr(1, spec.size() - 2);
}

std::vector<std::int64_t> integers(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) {
    if (ch == ',' || ch == ';') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::int64_t v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("expected integers in '" + std::string(text) + "'");
  return out;
}

}  // namespace

Coloring make_coloring(std::string_view spec, std::size_t n, unsigned r, std::uint64_t seed) {
  if (spec == "all-one") return Coloring::uniform(n);
  if (spec == "parity") return Coloring::parity(n);
  if (spec == "random") return Coloring::random(n, r, seed);
  if (spec.starts_with("random(")) {
    auto args = integers(inside_parens(spec, "random"));
    if (args.size() != 1 || args[0] < 0) throw std::invalid_argument("random(SEED) takes one nonnegative seed");
    return Coloring::random(n, r, static_cast<std::uint64_t>(args[0]));
  }
  if (spec.starts_with("rado-avoider(")) {
    auto args = integers(inside_parens(spec, "rado-avoider"));
    if (args.size() < 2 || args.back() <= 0) throw std::invalid_argument("rado-avoider(c1,..,ck,p) needs coefficients and a prime");
    auto p = static_cast<std::uint64_t>(args.back());
    args.pop_back();
    return rado_avoider_coloring(std::move(args), p).take(n);
  }
  if (spec.starts_with("file:")) {
    std::ifstream in{std::string(spec.substr(5))};
    if (!in) throw std::invalid_argument("cannot open coloring file '" + std::string(spec.substr(5)) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return Coloring::parse(buf.str());
  }
  throw std::invalid_argument("unknown coloring generator '" + std::string(spec) + "'");
}

}  // namespace kpr
