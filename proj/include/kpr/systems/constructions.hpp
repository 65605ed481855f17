#pragma once

#include "kpr/exactq/matrix.hpp"
#include "kpr/polyring/poly.hpp"
#include "kpr/systems/equation.hpp"

#include <vector>

namespace kpr {

// Explicit assignments from the partition-regularity proofs. They are
// evaluated over Q; whether the values land in N is a separate question
// (integrality_check), since the proofs pick a, d from central sets.

/// Sum-equals-product with polynomial shift. With S = a_1 + .. + a_n and
/// B = b_1 * .. * b_{m-1} (empty product 1 when b_list is empty, so m = 1):
///   z_i     = a - P_i(d) / (S * B)
///   x_j     = a_j * B * a
///   y_k     = b_k          (k < m)
///   y_m     = S
///   y_{m+1} = d
/// Every equation x1+..+xn = y1..ym*zi + Pi(y{m+1}) then holds exactly.
/// Throws std::domain_error when S * B = 0 and std::invalid_argument when
/// a_list or polys is empty.
ConstructionAssignment construct_poly_sum_product(const std::vector<Rational>& a_list,
                                                  const std::vector<Rational>& b_list, const Rational& a,
                                                  const Rational& d, const std::vector<PolyZ0>& polys);

/// Nonlinear Rado assignment from a kernel vector X of A:
///   x_j = a * X_j (j < n),  y_i = X_n * (a - P_i(d) / (a_{i,n} X_n)),  z = d,
/// so row i evaluates to a * (A X)_i - P_i(d) + P_i(d) = 0.
/// Throws std::invalid_argument if A X != 0 or sizes disagree, and
/// std::domain_error if some a_{i,n} X_n = 0.
ConstructionAssignment construct_nonlinear_rado(const MatrixQ& a, const VectorQ& x, const Rational& scale,
                                                const Rational& d, const PolyColumn& p);

/// Power-product assignment from F = {a, q, aq, .., aq^n} and b, c:
///   x = a*b, y = q, z = c, z_i = a q^i (b - P_i(c) / (a q^i)) = x y^i - P_i(z).
/// Throws std::domain_error if a or q is zero.
ConstructionAssignment construct_power_product(const Rational& a, const Rational& q, const Rational& b,
                                               const Rational& c, const std::vector<PolyZ0>& polys);

}  // namespace kpr
