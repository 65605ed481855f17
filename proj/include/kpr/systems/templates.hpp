#pragma once

#include "kpr/exactq/matrix.hpp"
#include "kpr/polyring/poly.hpp"
#include "kpr/systems/equation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpr {

/// A x = 0 over x1..xn. Status follows Rado's theorem: regular-by-paper when
/// the column condition holds, not-regular otherwise.
EquationSystem build_linear(const MatrixQ& a, std::string name = "linear");

/// Row i: sum_j a_{i,j} x_j (j < n) + a_{i,n} y_i + P_i(z) = 0 over
/// x1..x{n-1}, y1..ym, z. Marked regular-by-paper when A satisfies the
/// column condition and unknown otherwise.
EquationSystem build_nonlinear_rado(const MatrixQ& a, const PolyColumn& p);

struct TemplateParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> l;
  std::vector<PolyZ0> polys;
};

/// Named families:
///   schur                      x1 + x2 = y1
///   multiplicative-schur       x * y = z
///   poly-sum-product(n,m,P..)  x1+..+xn = y1..ym*zi + Pi(y{m+1})
///   sums-with-poly(n,P..)      x1+..+xn = zi + Pi(z)
///   power-product(n,P1..Pn)    x*y^i = zi + Pi(z)
///   ap-times-product(l,m,n)    x1 + i*x2 + x3+..+xn = zi*y1..ym, i = 1..l
///   ap-times-power(l,m,n)      x1 + i*x2 + x3+..+xn = yi*z^m, i = 1..l
///   rational-function(n,P,Q)   (x + P(d)) = z^n (y + Q(d)), y + Q(d) != 0
///   concluding-1(P1,P2,P3)     open systems, status unknown
///   concluding-2(P1,P2)
///   concluding-3(P1,P2,P3)
/// Throws std::invalid_argument for unknown names or bad parameters.
EquationSystem build_template(std::string_view family, const TemplateParams& params);

std::vector<std::string> template_names();

}  // namespace kpr
