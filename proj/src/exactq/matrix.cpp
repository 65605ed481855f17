#include "kpr/exactq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace kpr {

namespace {

void require_same(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

}  // namespace

VectorQ operator+(const VectorQ& a, const VectorQ& b) {
  require_same(a, b);
  VectorQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VectorQ operator-(const VectorQ& a, const VectorQ& b) {
  require_same(a, b);
  VectorQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VectorQ operator*(const Rational& s, const VectorQ& v) {
  VectorQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const VectorQ& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string to_string(const VectorQ& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix must be at least 1x1");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix must be at least 1x1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix must be at least 1x1");
  MatrixQ out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < out.cols_; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

MatrixQ MatrixQ::from_columns(const std::vector<VectorQ>& cols) {
  if (cols.empty() || cols.front().empty()) throw std::invalid_argument("matrix must be at least 1x1");
  MatrixQ out(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != out.rows_) throw std::invalid_argument("ragged matrix columns");
    for (std::size_t i = 0; i < out.rows_; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

MatrixQ MatrixQ::parse(std::string_view text) {
  std::vector<VectorQ> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    VectorQ row;
    std::string tok;
    while (fields >> tok) row.push_back(Rational::parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  return from_rows(rows);
}

VectorQ MatrixQ::row(std::size_t i) const {
  return VectorQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

VectorQ MatrixQ::column(std::size_t j) const {
  VectorQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

VectorQ MatrixQ::operator*(const VectorQ& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  VectorQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

std::string MatrixQ::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace kpr
