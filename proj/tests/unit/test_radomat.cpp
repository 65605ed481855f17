#include "kpr/radomat/column_condition.hpp"
#include "kpr/radomat/expanded.hpp"

#include "../oracles/oracles.hpp"
#include "../support/gen.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using kpr::ColumnPartitionWitness;
using kpr::MatrixQ;
using kpr::Rational;

namespace {

MatrixQ vdw_matrix(int m) {
  MatrixQ a(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 2));
  for (int i = 0; i < m; ++i) {
    a.at(static_cast<std::size_t>(i), 0) = 1;
    a.at(static_cast<std::size_t>(i), 1) = i + 1;
    a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 2)) = -1;
  }
  return a;
}

}  // namespace

TEST_CASE("column condition examples") {
  const auto schur = kpr::column_condition(MatrixQ{{1, 1, -1}});
  REQUIRE(schur);
  CHECK(*schur == ColumnPartitionWitness{{{0, 2}, {1}}});
  CHECK_FALSE(kpr::column_condition(MatrixQ{{1, 1, -3}}));

  const auto vdw3 = kpr::column_condition(vdw_matrix(3));
  REQUIRE(vdw3);
  CHECK(*vdw3 == ColumnPartitionWitness{{{0, 2, 3, 4}, {1}}});
  CHECK(kpr::column_condition(vdw_matrix(4)));

  const MatrixQ ex{{1, 2, -3}, {2, -1, -1}};
  const auto w = kpr::column_condition(ex);
  REQUIRE(w);
  CHECK(*w == ColumnPartitionWitness{{{0, 1, 2}}});
}

TEST_CASE("naive decider examples") {
  CHECK(kpr::column_condition_naive(MatrixQ{{1, 1, -1}}));
  const auto w = kpr::column_condition_naive(MatrixQ{{2, -2}});
  REQUIRE(w);
  CHECK(*w == ColumnPartitionWitness{{{0, 1}}});
  CHECK_FALSE(kpr::column_condition_naive(MatrixQ{{1, 2}}));
  CHECK_THROWS_AS(kpr::column_condition_naive(MatrixQ(1, 9)), std::invalid_argument);
  CHECK_THROWS_AS(kpr::column_condition(MatrixQ(1, 33)), std::invalid_argument);
}

TEST_CASE("zero column edge cases") {
  // An all-zero matrix: the single block {1..n} works.
  CHECK(kpr::column_condition(MatrixQ(2, 3)));
  // A zero column alone is a zero-sum first block, but the rest must follow.
  CHECK_FALSE(kpr::column_condition(MatrixQ{{0, 1}}));
  CHECK(kpr::column_condition(MatrixQ{{0, 1, -1}}));
}

TEST_CASE("witness validator rejects broken partitions") {
  const MatrixQ a{{1, 1, -1}};
  CHECK(kpr::is_valid_witness(a, {{{0, 2}, {1}}}));
  CHECK_FALSE(kpr::is_valid_witness(a, {{{1}, {0, 2}}}));   // first block must sum to zero
  CHECK_FALSE(kpr::is_valid_witness(a, {{{0, 2}}}));        // does not cover column 2
  CHECK_FALSE(kpr::is_valid_witness(a, {{{0, 2}, {1, 2}}}));  // overlap
  CHECK_FALSE(kpr::is_valid_witness(a, {{{0, 2}, {}}}));    // empty block
  CHECK_FALSE(kpr::is_valid_witness(a, {{{0, 5}, {1}}}));   // index out of range
}

TEST_CASE("witness json uses 1-based indices") {
  const ColumnPartitionWitness w{{{0, 2}, {1}}};
  const nlohmann::json j = w;
  CHECK(j.dump() == R"({"blocks":[[1,3],[2]]})");
  CHECK(j.get<ColumnPartitionWitness>() == w);
  CHECK_THROWS(nlohmann::json::parse(R"({"blocks":[[0]]})").get<ColumnPartitionWitness>());
}

TEST_CASE("property: both deciders agree with the recursive oracle") {
  gen::Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto n = static_cast<std::size_t>(g.integer(1, 5));
    const MatrixQ a = g.int_matrix(m, n, 2);
    const auto dp = kpr::column_condition(a);
    const auto naive = kpr::column_condition_naive(a);
    const bool expected = oracle::column_condition(a);
    CHECK(dp.has_value() == expected);
    CHECK(naive.has_value() == expected);
    if (dp) CHECK(kpr::is_valid_witness(a, *dp));
    if (naive) CHECK(kpr::is_valid_witness(a, *naive));
  }
}

TEST_CASE("property: zero row sums force a witness") {
  gen::Gen g(22);
  for (int i = 0; i < 300; ++i) {
    MatrixQ a = g.int_matrix(static_cast<std::size_t>(g.integer(1, 3)), static_cast<std::size_t>(g.integer(2, 6)));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Rational s;
      for (std::size_t j = 0; j + 1 < a.cols(); ++j) s += a.at(r, j);
      a.at(r, a.cols() - 1) = -s;
    }
    CHECK(kpr::column_condition(a));
  }
}

TEST_CASE("expanded matrix examples") {
  const auto e = kpr::expand_matrix(MatrixQ{{1, 2, -3}, {2, -1, -1}});
  CHECK(e.expanded == MatrixQ{{1, 2, -3, 0}, {2, -1, 0, -1}});
  CHECK(kpr::expand_matrix(MatrixQ{{1, 1, -1}}).expanded == MatrixQ{{1, 1, -1}});
  CHECK(kpr::expand_matrix(MatrixQ{{1, 0}, {0, 1}}).expanded == MatrixQ{{1, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(kpr::expand_matrix(MatrixQ{{1}}), std::invalid_argument);
}

TEST_CASE("property: expanded matrix shape and entries") {
  gen::Gen g(23);
  for (int i = 0; i < 300; ++i) {
    const auto m = static_cast<std::size_t>(g.integer(1, 4));
    const auto n = static_cast<std::size_t>(g.integer(2, 5));
    const MatrixQ a = g.int_matrix(m, n);
    const MatrixQ e = kpr::expand_matrix(a).expanded;
    REQUIRE(e.rows() == m);
    REQUIRE(e.cols() == n - 1 + m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < e.cols(); ++c) {
        Rational expect;
        if (c + 1 < n) expect = a.at(r, c);
        else if (c - (n - 1) == r) expect = a.at(r, n - 1);
        CHECK(e.at(r, c) == expect);
      }
    }
  }
}

TEST_CASE("constant solution examples") {
  CHECK(kpr::constant_solution(MatrixQ{{1, 1, -1}}, {Rational(5)}) == Rational(5));
  CHECK_FALSE(kpr::constant_solution(MatrixQ{{1, -1}}, {Rational(3)}));
  CHECK(kpr::constant_solution(MatrixQ{{1, 1}, {2, 2}}, {Rational(2), Rational(4)}) == Rational(1));
  CHECK_FALSE(kpr::constant_solution(MatrixQ{{1, 1}, {2, 2}}, {Rational(2), Rational(5)}));
  CHECK(kpr::constant_solution(MatrixQ{{1, -1}}, {Rational(0)}) == Rational(1));
  CHECK_THROWS_AS(kpr::constant_solution(MatrixQ{{1, 1}}, {}), std::invalid_argument);
}
