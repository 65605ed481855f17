#pragma once

#include "kpr/exactq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpr {

using VectorQ = std::vector<Rational>;

VectorQ operator+(const VectorQ& a, const VectorQ& b);
VectorQ operator-(const VectorQ& a, const VectorQ& b);
VectorQ operator*(const Rational& s, const VectorQ& v);
bool is_zero(const VectorQ& v);
std::string to_string(const VectorQ& v);

/// Dense row-major matrix of rationals, at least 1x1.
class MatrixQ {
 public:
  MatrixQ(std::size_t rows, std::size_t cols);
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows);
  static MatrixQ from_columns(const std::vector<VectorQ>& cols);

  /// One row per non-blank line; tokens are integers or "p/q". Lines
  /// starting with '#' are comments. Throws std::invalid_argument on ragged
  /// rows or bad tokens and std::domain_error on zero denominators.
  static MatrixQ parse(std::string_view text);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] VectorQ row(std::size_t i) const;
  [[nodiscard]] VectorQ column(std::size_t j) const;
  [[nodiscard]] VectorQ operator*(const VectorQ& x) const;

  /// Whitespace-separated rows, same format parse() reads.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace kpr
