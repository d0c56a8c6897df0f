#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dgca/coeff_matrix.hpp"
#include "dgca/errors.hpp"
#include "dgca/json_io.hpp"

using namespace dgca;

namespace {

CoeffMatrix ones(int dim, const std::vector<Pos>& support) {
  std::vector<CoeffMatrix::RawEntry> raw;
  for (Pos p : support) raw.emplace_back(p.i, p.j, Rational(1));
  return CoeffMatrix::validate(dim, raw);
}

// Six nonzero entries in dimension 8; the support whose pattern is not rigid.
CoeffMatrix six_entry_dim8() {
  return ones(8, {{2, 4}, {3, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 4}});
}

}  // namespace

TEST_CASE("validate accepts the zero algebra") {
  const CoeffMatrix z = CoeffMatrix::zero(5);
  CHECK(z.dim() == 5);
  CHECK(z.entries().empty());
}

TEST_CASE("validate accepts the six-entry dimension-8 matrix") {
  const CoeffMatrix c = six_entry_dim8();
  CHECK(c.entries().size() == 6);
  CHECK(c.coeff(4, 2) == Rational(1));  // symmetric lookup
  CHECK(c.coeff(1, 1) == Rational(0));
}

TEST_CASE("validate rejects bad entries") {
  CHECK_THROWS_AS(CoeffMatrix::validate(4, {{0, 2, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CoeffMatrix::validate(4, {{2, 5, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(CoeffMatrix::validate(4, {{2, 3, Rational(1)}}), DomainError);  // i+j > 4
  CHECK_THROWS_AS(CoeffMatrix::validate(4, {{1, 2, Rational()}}), DomainError);
  CHECK_THROWS_AS(
      CoeffMatrix::validate(4, {{1, 2, Rational(1)}, {2, 1, Rational(2)}}),
      DomainError);
  // equal duplicates merge
  const CoeffMatrix ok = CoeffMatrix::validate(4, {{1, 2, Rational(2)}, {2, 1, Rational(2)}});
  CHECK(ok.entries().size() == 1);
}

TEST_CASE("validate reports the failing associativity triple") {
  // c_{12} c_{13} = 2 against c_{11} c_{22} = 0 at the triple (1,1,2)
  try {
    CoeffMatrix::validate(4, {{1, 1, Rational(1)}, {1, 2, Rational(2)}, {1, 3, Rational(1)}});
    FAIL("expected an associativity violation");
  } catch (const AssociativityError& e) {
    CHECK(e.i == 1);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
  // while {c_{11}, c_{12}} alone is consistent at dimension 3
  CHECK_NOTHROW(CoeffMatrix::validate(3, {{1, 1, Rational(1)}, {1, 2, Rational(2)}}));
}

TEST_CASE("basis multiplication") {
  const CoeffMatrix z = CoeffMatrix::zero(5);
  CHECK(multiply_basis(z, 2, 3).coefficient == Rational(0));
  CHECK(multiply_basis(z, 2, 3).degree == 5);
  CHECK_FALSE(multiply_basis(z, 3, 4).degree.has_value());

  const CoeffMatrix c = six_entry_dim8();
  const BasisProduct p = multiply_basis(c, 2, 4);
  CHECK(p.coefficient == Rational(1));
  CHECK(p.degree == 6);
  CHECK_THROWS_AS(multiply_basis(c, 0, 4), DomainError);
}

TEST_CASE("truncation splits the antidiagonal") {
  const auto [bar, theta] = truncate_decompose(six_entry_dim8());
  CHECK(bar.dim() == 7);
  CHECK(support_pattern(bar) ==
        SupportPattern::from_positions(7, {{2, 4}, {3, 3}, {2, 5}, {3, 4}}));
  CHECK(theta.n == 8);
  CHECK(theta.theta == std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(1),
                                             Rational(1), Rational(0), Rational(0)});

  const auto [zbar, ztheta] = truncate_decompose(CoeffMatrix::zero(5));
  CHECK(zbar == CoeffMatrix::zero(4));
  CHECK(ztheta.is_zero());
}

TEST_CASE("generator degrees") {
  CHECK(generators(CoeffMatrix::zero(4)) == std::vector<int>{1, 2, 3, 4});
  const CoeffMatrix c = ones(4, {{1, 2}, {2, 2}});
  CHECK(generators(c) == std::vector<int>{1, 2});
  CHECK(generators(six_entry_dim8()) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("support patterns and canonical representatives") {
  CHECK(support_pattern(CoeffMatrix::zero(3)).support.empty());

  const CoeffMatrix six = six_entry_dim8();
  std::vector<CoeffMatrix::RawEntry> raw;
  for (const auto& [pos, value] : six.entries())
    raw.emplace_back(pos.i, pos.j, pos == Pos{3, 3} ? Rational(2) : value);
  const CoeffMatrix scaled = CoeffMatrix::validate(8, raw);
  CHECK(support_pattern(scaled) == support_pattern(six_entry_dim8()));
  CHECK(canonical_rep(support_pattern(scaled)) == six_entry_dim8());

  CHECK_THROWS_AS(SupportPattern::from_positions(4, {{2, 3}}), DomainError);
}

TEST_CASE("element products are commutative and associative") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(-4, 4);
  const CoeffMatrix c = ones(6, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 4}, {2, 3}});
  for (int trial = 0; trial < 50; ++trial) {
    GradedVector x = GradedVector::zero(6), y = GradedVector::zero(6), z = GradedVector::zero(6);
    for (int i = 0; i < 6; ++i) {
      x.coords[static_cast<std::size_t>(i)] = Rational(coord(rng));
      y.coords[static_cast<std::size_t>(i)] = Rational(coord(rng));
      z.coords[static_cast<std::size_t>(i)] = Rational(coord(rng));
    }
    CHECK(multiply(c, x, y) == multiply(c, y, x));
    CHECK(multiply(c, multiply(c, x, y), z) == multiply(c, x, multiply(c, y, z)));
  }
  CHECK_THROWS_AS(multiply(c, GradedVector::zero(5), GradedVector::zero(6)), DomainError);
}

TEST_CASE("matrix json round trip is canonical") {
  const CoeffMatrix six = six_entry_dim8();
  std::vector<CoeffMatrix::RawEntry> raw;
  for (const auto& [pos, value] : six.entries())
    raw.emplace_back(pos.i, pos.j, pos == Pos{3, 3} ? Rational(-1, 2) : value);
  const CoeffMatrix c = CoeffMatrix::validate(8, raw);
  const Json doc = matrix_to_json(c);
  CHECK(matrix_from_json(doc) == c);
  CHECK(doc["entries"][1]["value"] == "-1/2");
  // entries serialized in level order
  CHECK(doc["entries"][0]["i"] == 2);
  CHECK(doc["entries"][0]["j"] == 4);
  CHECK(matrix_to_json(matrix_from_json(doc)) == doc);
}

TEST_CASE("matrix json rejects malformed documents") {
  CHECK_THROWS_AS(matrix_from_json(Json{{"entries", Json::array()}}), DomainError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dim":3,"entries":[{"i":1}]})")),
                  DomainError);
  CHECK_THROWS_AS(
      matrix_from_json(Json::parse(R"({"dim":3,"entries":[{"i":1,"j":1,"value":"0"}]})")),
      DomainError);
}
