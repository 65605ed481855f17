#include "kpr/colorings/families.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace kpr {

FiniteFamily FiniteFamily::ap(unsigned l) { return {FamilyKind::ArithmeticProgression, l, {}}; }
FiniteFamily FiniteFamily::gp(unsigned m) { return {FamilyKind::GeometricProgression, m, {}}; }
FiniteFamily FiniteFamily::sums(unsigned k) { return {FamilyKind::SumSingletons, k, {}}; }
FiniteFamily FiniteFamily::products(unsigned k) { return {FamilyKind::ProductSingletons, k, {}}; }
FiniteFamily FiniteFamily::explicit_sets(std::vector<IntSet> sets) {
  for (const auto& s : sets) {
    if (s.empty() || *s.begin() <= 0) throw std::invalid_argument("explicit family: sets must be nonempty and positive");
  }
  return {FamilyKind::Explicit, 0, std::move(sets)};
}

FiniteFamily FiniteFamily::parse(const std::string& text) {
  static const std::regex re(R"(\s*(ap|gp|sum-singletons|product-singletons)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("unknown family '" + text + "'");
  const auto k = static_cast<unsigned>(std::stoul(m[2].str()));
  const std::string head = m[1].str();
  if (head == "ap") return ap(k);
  if (head == "gp") return gp(k);
  if (head == "sum-singletons") return sums(k);
  return products(k);
}

std::string FiniteFamily::str() const {
  const std::string k = "(" + std::to_string(param) + ")";
  switch (kind) {
    case FamilyKind::ArithmeticProgression: return "ap" + k;
    case FamilyKind::GeometricProgression: return "gp" + k;
    case FamilyKind::SumSingletons: return "sum-singletons" + k;
    case FamilyKind::ProductSingletons: return "product-singletons" + k;
    case FamilyKind::Explicit: break;
  }
  return "explicit[" + std::to_string(sets.size()) + "]";
}

std::vector<IntSet> regular_family_members(const FiniteFamily& fam, std::uint64_t n) {
  std::vector<IntSet> out;
  const auto big = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
  switch (fam.kind) {
    case FamilyKind::ArithmeticProgression: {
      if (fam.param == 0) throw std::invalid_argument("ap(l) needs l >= 1");
      const std::uint64_t l = fam.param;
      for (std::uint64_t a = 1; a <= n; ++a) {
        for (std::uint64_t d = 1; a + l * d <= n; ++d) {
          IntSet s;
          for (std::uint64_t i = 0; i <= l; ++i) s.insert(big(a + i * d));
          out.push_back(std::move(s));
        }
      }
      break;
    }
    case FamilyKind::GeometricProgression: {
      if (fam.param == 0) throw std::invalid_argument("gp(m) needs m >= 1");
      for (std::uint64_t c = 1; c <= n; ++c) {
        for (std::uint64_t q = 2;; ++q) {
          IntSet s;
          std::uint64_t v = c;
          bool fits = true;
          for (unsigned i = 0; i < fam.param; ++i) {
            if (v > n) {
              fits = false;
              break;
            }
            s.insert(big(v));
            if (i + 1 < fam.param) v = v > n / q ? n + 1 : v * q;
          }
          if (!fits) break;
          out.push_back(std::move(s));
          if (fam.param == 1) break;  // every ratio gives the same singleton
        }
      }
      break;
    }
    case FamilyKind::SumSingletons:
      for (std::uint64_t s = std::max<std::uint64_t>(fam.param, 1); s <= n; ++s) out.push_back({big(s)});
      break;
    case FamilyKind::ProductSingletons:
      if (fam.param == 0) {
        if (n >= 1) out.push_back({Integer(1)});
      } else {
        for (std::uint64_t p = 1; p <= n; ++p) out.push_back({big(p)});
      }
      break;
    case FamilyKind::Explicit:
      for (const auto& s : fam.sets) {
        if (*s.rbegin() <= big(n)) out.push_back(s);
      }
      break;
  }
  return out;
}

bool family_contains(const FiniteFamily& fam, const IntSet& s) {
  if (s.empty() || *s.begin() <= 0) return false;
  switch (fam.kind) {
    case FamilyKind::ArithmeticProgression: {
      if (fam.param == 0 || s.size() != fam.param + 1) return false;
      const Integer d = *std::next(s.begin()) - *s.begin();
      Integer expect = *s.begin();
      for (const auto& x : s) {
        if (x != expect) return false;
        expect += d;
      }
      return true;
    }
    case FamilyKind::GeometricProgression: {
      if (fam.param == 0 || s.size() != fam.param) return false;
      if (fam.param == 1) return true;
      const Integer& c = *s.begin();
      const Integer& next = *std::next(s.begin());
      if (next % c != 0) return false;
      const Integer q = next / c;
      Integer expect = c;
      for (const auto& x : s) {
        if (x != expect) return false;
        expect *= q;
      }
      return q >= 2;
    }
    case FamilyKind::SumSingletons: return s.size() == 1 && *s.begin() >= std::max(fam.param, 1u);
    case FamilyKind::ProductSingletons: return s.size() == 1 && (fam.param > 0 || *s.begin() == 1);
    case FamilyKind::Explicit: return std::find(fam.sets.begin(), fam.sets.end(), s) != fam.sets.end();
  }
  return false;
}

IntSet mixed_structure_sets(const std::vector<IntSet>& f, const std::vector<IntSet>& g, std::size_t n_limit) {
  if (n_limit == 0 || n_limit > f.size() || n_limit > g.size()) {
    throw std::invalid_argument("mixed_structure_sets: need 1 <= N <= sequence lengths");
  }
  IntSet out;
  for (std::size_t m = 1; m <= n_limit; ++m) {
    std::vector<IntSet> head(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<IntSet> tail(g.begin() + static_cast<std::ptrdiff_t>(m - 1), g.begin() + static_cast<std::ptrdiff_t>(n_limit));
    IntSet part = product_set(fs_sets(head), fp_sets(tail));
    out.insert(part.begin(), part.end());
  }
  return out;
}

namespace {

const FiniteFamily& family_at(const std::vector<FiniteFamily>& fams, std::size_t i) {
  return fams.size() == 1 ? fams[0] : fams[i];
}

void check_family_lengths(const std::vector<FiniteFamily>& fams, std::size_t len, const char* what) {
  if (fams.empty() || (fams.size() != 1 && fams.size() < len)) {
    throw std::invalid_argument(std::string(what) + " families: give one family or one per index");
  }
}

}  // namespace

bool verify_family_witness(const std::vector<FiniteFamily>& additive, const std::vector<FiniteFamily>& multiplicative,
                           const FamilyWitness& w, const Coloring& c) {
  const std::size_t len = w.f_seq.size();
  if (len == 0 || w.g_seq.size() != len) throw std::invalid_argument("family witness: sequences must be nonempty and equal length");
  check_family_lengths(additive, len, "additive");
  check_family_lengths(multiplicative, len, "multiplicative");
  for (std::size_t i = 0; i < len; ++i) {
    if (!family_contains(family_at(additive, i), w.f_seq[i])) return false;
    if (!family_contains(family_at(multiplicative, i), w.g_seq[i])) return false;
  }
  IntSet elems = fs_sets(w.f_seq);
  IntSet prods = fp_sets(w.g_seq);
  elems.insert(prods.begin(), prods.end());
  for (std::size_t n = 1; n <= len; ++n) {
    IntSet mixed = mixed_structure_sets(w.f_seq, w.g_seq, n);
    elems.insert(mixed.begin(), mixed.end());
  }
  if (*elems.rbegin() > Integer(static_cast<unsigned long>(c.size()))) {
    throw std::out_of_range("family witness reaches " + elems.rbegin()->get_str() + ", beyond the coloring range");
  }
  return std::all_of(elems.begin(), elems.end(), [&](const Integer& x) { return c.color_of(x.get_ui()) == w.color; });
}

namespace {

// Straightforward backtracking: the full structure of the current prefix is
// recomputed at every node, which is fine at the depths this is used for.
class FamilySearch {
 public:
  FamilySearch(const std::vector<FiniteFamily>& add, const std::vector<FiniteFamily>& mul, const Coloring& c,
               std::size_t depth, std::uint64_t limit)
      : col_(c), depth_(depth), limit_(limit) {
    for (std::size_t i = 0; i < depth; ++i) {
      add_members_.push_back(regular_family_members(family_at(add, i), c.size()));
      mul_members_.push_back(regular_family_members(family_at(mul, i), c.size()));
    }
  }

  std::optional<FamilyWitness> run() {
    for (std::uint32_t color = 0; color < col_.num_colors(); ++color) {
      w_ = FamilyWitness{{}, {}, color};
      if (extend()) return w_;
      if (nodes_ > limit_) break;
    }
    return std::nullopt;
  }

 private:
  bool mono(const IntSet& s) const {
    const Integer n(static_cast<unsigned long>(col_.size()));
    return std::all_of(s.begin(), s.end(), [&](const Integer& x) { return x <= n && col_[x.get_ui()] == w_.color; });
  }

  bool prefix_ok() const {
    const std::size_t k = w_.f_seq.size();
    if (!mono(fs_sets(w_.f_seq))) return false;
    if (w_.g_seq.size() < k) return true;
    return mono(fp_sets(w_.g_seq)) && mono(mixed_structure_sets(w_.f_seq, w_.g_seq, k));
  }

  bool extend() {
    const std::size_t k = w_.g_seq.size();
    if (k == depth_) return true;
    for (const auto& f : add_members_[k]) {
      if (++nodes_ > limit_) return false;
      w_.f_seq.push_back(f);
      if (prefix_ok()) {
        for (const auto& g : mul_members_[k]) {
          if (++nodes_ > limit_) return false;
          w_.g_seq.push_back(g);
          if (prefix_ok() && extend()) return true;
          w_.g_seq.pop_back();
        }
      }
      w_.f_seq.pop_back();
    }
    return false;
  }

  const Coloring& col_;
  std::size_t depth_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<IntSet>> add_members_;
  std::vector<std::vector<IntSet>> mul_members_;
  FamilyWitness w_;
};

}  // namespace

std::optional<FamilyWitness> search_family_witness(const std::vector<FiniteFamily>& additive,
                                                   const std::vector<FiniteFamily>& multiplicative,
                                                   const Coloring& c, std::size_t depth, std::uint64_t node_limit) {
  if (depth == 0 || depth > kMaxFsfpDepth) throw std::invalid_argument("search_family_witness: depth must be in 1..4");
  check_family_lengths(additive, depth, "additive");
  check_family_lengths(multiplicative, depth, "multiplicative");
  return FamilySearch(additive, multiplicative, c, depth, node_limit).run();
}

}  // namespace kpr
