#include "kpr/colorings/fsfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpr {

namespace {

void check_sequence(std::span<const Integer> seq) {
  if (seq.empty()) throw std::invalid_argument("FS/FP: sequence must be nonempty");
  if (seq.size() > kMaxSequenceLength) throw std::invalid_argument("FS/FP: sequence longer than 20");
  for (const auto& x : seq) {
    if (x <= 0) throw std::invalid_argument("FS/FP: terms must be positive integers");
  }
}

void check_set_sequence(const std::vector<IntSet>& seq) {
  if (seq.empty()) throw std::invalid_argument("FS/FP of sets: sequence must be nonempty");
  if (seq.size() > kMaxSequenceLength) throw std::invalid_argument("FS/FP of sets: sequence longer than 20");
  std::uint64_t selectors = 1;
  for (const auto& s : seq) {
    if (s.empty()) throw std::invalid_argument("FS/FP of sets: every set must be nonempty");
    if (*s.begin() <= 0) throw std::invalid_argument("FS/FP of sets: elements must be positive integers");
    selectors *= s.size();
    if (selectors > kMaxSelectorProduct) throw std::invalid_argument("FS/FP of sets: too many selectors");
  }
}

// S_k = S_{k-1} + F_k + (S_{k-1} op F_k); equals the selector union because a
// subset sum only sees the coordinates it uses.
template <typename Op>
IntSet closure(const std::vector<IntSet>& seq, Op op) {
  IntSet acc;
  for (const auto& f : seq) {
    IntSet next = acc;
    next.insert(f.begin(), f.end());
    for (const auto& s : acc) {
      for (const auto& x : f) next.insert(op(s, x));
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<IntSet> singletons(std::span<const Integer> seq) {
  std::vector<IntSet> out;
  for (const auto& x : seq) out.push_back({x});
  return out;
}

}  // namespace

IntSet fs(std::span<const Integer> seq) {
  check_sequence(seq);
  return closure(singletons(seq), [](const Integer& a, const Integer& b) { return Integer(a + b); });
}

IntSet fp(std::span<const Integer> seq) {
  check_sequence(seq);
  return closure(singletons(seq), [](const Integer& a, const Integer& b) { return Integer(a * b); });
}

IntSet fs_sets(const std::vector<IntSet>& seq) {
  check_set_sequence(seq);
  return closure(seq, [](const Integer& a, const Integer& b) { return Integer(a + b); });
}

IntSet fp_sets(const std::vector<IntSet>& seq) {
  check_set_sequence(seq);
  return closure(seq, [](const Integer& a, const Integer& b) { return Integer(a * b); });
}

IntSet product_set(const IntSet& f, const IntSet& g) {
  IntSet out;
  for (const auto& x : f) {
    for (const auto& y : g) out.insert(x * y);
  }
  return out;
}

IntSet mixed_structure(std::span<const Integer> a, std::span<const Integer> b, std::size_t n_limit) {
  if (n_limit == 0 || n_limit > a.size() || n_limit > b.size()) {
    throw std::invalid_argument("mixed_structure: need 1 <= N <= sequence lengths");
  }
  IntSet out;
  for (std::size_t m = 1; m <= n_limit; ++m) {
    IntSet part = product_set(fs(a.first(m)), fp(b.subspan(m - 1, n_limit - m + 1)));
    out.insert(part.begin(), part.end());
  }
  return out;
}

IntSet fsfp_elements(const FsfpWitness& w) {
  if (w.a_seq.empty() || w.a_seq.size() != w.b_seq.size()) {
    throw std::invalid_argument("FS/FP witness: sequences must be nonempty and of equal length");
  }
  IntSet out = fs(w.a_seq);
  IntSet prods = fp(w.b_seq);
  out.insert(prods.begin(), prods.end());
  for (std::size_t n = 1; n <= w.a_seq.size(); ++n) {
    IntSet mixed = mixed_structure(w.a_seq, w.b_seq, n);
    out.insert(mixed.begin(), mixed.end());
  }
  return out;
}

bool verify_fsfp(const FsfpWitness& w, const Coloring& c) {
  IntSet elems = fsfp_elements(w);
  if (*elems.rbegin() > Integer(static_cast<unsigned long>(c.size()))) {
    throw std::out_of_range("FS/FP witness reaches " + elems.rbegin()->get_str() + ", beyond the coloring range");
  }
  return std::all_of(elems.begin(), elems.end(),
                     [&](const Integer& x) { return c.color_of(x.get_ui()) == w.color; });
}

namespace {

class FsfpSearch {
 public:
  FsfpSearch(const Coloring& c, std::size_t depth, std::uint64_t node_limit)
      : col_(c), depth_(depth), limit_(node_limit), n_(c.size()) {}

  std::optional<FsfpWitness> run() {
    if (!extend_a()) return std::nullopt;
    FsfpWitness w;
    for (auto x : a_) w.a_seq.emplace_back(static_cast<unsigned long>(x));
    for (auto x : b_) w.b_seq.emplace_back(static_cast<unsigned long>(x));
    w.color = color_;
    return w;
  }

 private:
  bool good(std::uint64_t v) const { return v >= 1 && v <= n_ && col_[v] == color_; }

  bool tick() { return ++nodes_ <= limit_; }

  // Chooses a_{k+1}; all new finite sums must stay in range and in color.
  bool extend_a() {
    const std::size_t k = a_.size();
    // A copy: fs_prefix_ grows below and may reallocate.
    const std::vector<std::uint64_t> prev = k ? fs_prefix_.back() : std::vector<std::uint64_t>{};
    const std::uint64_t top = prev.empty() ? 0 : prev.back();
    for (std::uint64_t x = k ? a_.back() + 1 : 1; x + top <= n_; ++x) {
      if (!tick()) return false;
      if (k == 0) color_ = col_[x];
      if (!good(x)) continue;
      std::vector<std::uint64_t> next = prev;
      next.push_back(x);
      bool ok = true;
      for (auto s : prev) {
        if (!good(s + x)) {
          ok = false;
          break;
        }
        next.push_back(s + x);
      }
      if (!ok) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      a_.push_back(x);
      fs_prefix_.push_back(std::move(next));
      if (extend_b()) return true;
      a_.pop_back();
      fs_prefix_.pop_back();
      if (nodes_ > limit_) return false;
    }
    return false;
  }

  // Chooses b_{k+1} (k+1 = a_.size()). New elements are b times each
  // multiplier in {1} + FP(b_1..b_k) and, for every m, FS(a_1..a_m) times
  // b times {1} + FP(b_m..b_k).
  bool extend_b() {
    const std::size_t k = b_.size();
    std::vector<std::uint64_t> multipliers{1};
    for (auto p : fp_all_) multipliers.push_back(p);
    for (std::size_t m = 0; m <= k; ++m) {
      std::vector<std::uint64_t> tail{1};
      for (std::size_t t = m; t < k; ++t) {
        const std::size_t sz = tail.size();
        for (std::size_t i = 0; i < sz; ++i) tail.push_back(tail[i] * b_[t]);
      }
      for (auto s : fs_prefix_[m]) {
        for (auto q : tail) multipliers.push_back(s * q);
      }
    }
    std::sort(multipliers.begin(), multipliers.end());
    multipliers.erase(std::unique(multipliers.begin(), multipliers.end()), multipliers.end());
    const std::uint64_t top = multipliers.back();

    for (std::uint64_t y = b_.empty() ? 2 : b_.back() + 1; top <= n_ / y; ++y) {
      if (!tick()) return false;
      bool ok = true;
      for (auto q : multipliers) {
        if (!good(q * y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = fp_all_.size();
      fp_all_.push_back(y);
      for (std::size_t i = 0; i < old; ++i) fp_all_.push_back(fp_all_[i] * y);
      b_.push_back(y);
      if (b_.size() == depth_ || extend_a()) return true;
      b_.pop_back();
      fp_all_.resize(old);
      if (nodes_ > limit_) return false;
    }
    return false;
  }

  const Coloring& col_;
  std::size_t depth_;
  std::uint64_t limit_;
  std::uint64_t n_;
  std::uint64_t nodes_ = 0;
  std::uint32_t color_ = 0;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
  std::vector<std::vector<std::uint64_t>> fs_prefix_;  // FS(a_1..a_k) for k = 1..
  std::vector<std::uint64_t> fp_all_;                   // FP(b_1..b_k), with repeats
};

}  // namespace

std::optional<FsfpWitness> search_fsfp(const Coloring& c, std::size_t depth, std::uint64_t node_limit) {
  if (depth == 0 || depth > kMaxFsfpDepth) throw std::invalid_argument("search_fsfp: depth must be in 1..4");
  return FsfpSearch(c, depth, node_limit).run();
}

}  // namespace kpr
