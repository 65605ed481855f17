#include "kpr/systems/constructions.hpp"

#include <stdexcept>
#include <string>

namespace kpr {

ConstructionAssignment construct_poly_sum_product(const std::vector<Rational>& a_list,
                                                  const std::vector<Rational>& b_list, const Rational& a,
                                                  const Rational& d, const std::vector<PolyZ0>& polys) {
  if (a_list.empty()) throw std::invalid_argument("construct_poly_sum_product: a_list must be nonempty");
  if (polys.empty()) throw std::invalid_argument("construct_poly_sum_product: need at least one polynomial");
  const std::size_t m = b_list.size() + 1;

  Rational sum;
  for (const auto& v : a_list) sum += v;
  Rational prod(1);
  for (const auto& v : b_list) prod *= v;
  const Rational scale = sum * prod;
  if (scale.is_zero()) throw std::domain_error("construct_poly_sum_product: (a_1+..+a_n) * b_1..b_{m-1} is zero");

  ConstructionAssignment out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    out["z" + std::to_string(i + 1)] = a - polys[i].eval(d) / scale;
  }
  for (std::size_t j = 0; j < a_list.size(); ++j) out["x" + std::to_string(j + 1)] = a_list[j] * prod * a;
  for (std::size_t k = 0; k + 1 < m; ++k) out["y" + std::to_string(k + 1)] = b_list[k];
  out["y" + std::to_string(m)] = sum;
  out["y" + std::to_string(m + 1)] = d;
  return out;
}

ConstructionAssignment construct_nonlinear_rado(const MatrixQ& a, const VectorQ& x, const Rational& scale,
                                                const Rational& d, const PolyColumn& p) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n < 2) throw std::invalid_argument("construct_nonlinear_rado: need at least two columns");
  if (x.size() != n) throw std::invalid_argument("construct_nonlinear_rado: kernel vector has wrong length");
  if (p.size() != m) throw std::invalid_argument("construct_nonlinear_rado: polynomial column has wrong length");
  if (!is_zero(a * x)) throw std::invalid_argument("construct_nonlinear_rado: X is not in the kernel of A");

  const Rational& last = x[n - 1];
  ConstructionAssignment out;
  for (std::size_t j = 0; j + 1 < n; ++j) out["x" + std::to_string(j + 1)] = scale * x[j];
  for (std::size_t i = 0; i < m; ++i) {
    const Rational denom = a.at(i, n - 1) * last;
    if (denom.is_zero()) throw std::domain_error("construct_nonlinear_rado: a_{i,n} * x_n is zero");
    out["y" + std::to_string(i + 1)] = last * (scale - p[i].eval(d) / denom);
  }
  out["z"] = d;
  return out;
}

ConstructionAssignment construct_power_product(const Rational& a, const Rational& q, const Rational& b,
                                               const Rational& c, const std::vector<PolyZ0>& polys) {
  if (a.is_zero() || q.is_zero()) throw std::domain_error("construct_power_product: a and q must be nonzero");
  ConstructionAssignment out;
  out["x"] = a * b;
  out["y"] = q;
  out["z"] = c;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Rational s = a * pow(q, static_cast<unsigned>(i + 1));
    out["z" + std::to_string(i + 1)] = s * (b - polys[i].eval(c) / s);
  }
  return out;
}

}  // namespace kpr
