#include <doctest.h>

#include <random>
#include <sstream>

#include "dqpair/rank3.hpp"
#include "test_util.hpp"

using namespace dqpair;
using dqt::cm;
using dqt::im;

namespace {

// Borders a tournament with a new point 0 dominating every old point:
// row 0 is +1, column 0 is -1, diagonal +1; the core keeps the orientation.
SkewHadamard border_tournament(const AssociationScheme& t) {
  const Index m = t.order();
  IntMatrix h(m + 1, m + 1);
  for (Index i = 0; i <= m; ++i) h(i, i) = 1;
  for (Index j = 1; j <= m; ++j) {
    h(0, j) = 1;
    h(j, 0) = -1;
  }
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (i != j) h(i + 1, j + 1) = t.colors()(i, j) == 1 ? 1 : -1;
  return make_skew_hadamard(std::move(h));
}

ColorMatrix c5_distance_colors() {
  ColorMatrix c(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) {
      int d = static_cast<int>(((j - i) % 5 + 5) % 5);
      c(i, j) = std::min(d, 5 - d);
    }
  return c;
}

}  // namespace

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(15));
}

TEST_CASE("paley q=3 is the cyclic shift tournament") {
  Rank3Input r = paley_tournament(3);
  CHECK(r.n == 4);
  CHECK(r.a == 3);
  CHECK(r.b == 1);
  CHECK(r.scheme.colors() == cm({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
  // b = 1: the square of the arc relation is exactly the reversed relation.
  IntMatrix a1 = r.scheme.relation_matrix(1);
  CHECK(mat_mul(a1, a1) == r.scheme.relation_matrix(2));
}

TEST_CASE("paley q=7 satisfies the product identities with b=3") {
  Rank3Input r = paley_tournament(7);
  CHECK(r.n == 8);
  CHECK(r.a == 7);
  CHECK(r.b == 3);
  // Residues mod 7 are {1,2,4}.
  for (long d : {1L, 2L, 4L}) CHECK(r.scheme.colors()(0, d) == 1);
  for (long d : {3L, 5L, 6L}) CHECK(r.scheme.colors()(0, d) == 2);

  // Independent multiplication oracle: A1^2 = 1*A1 + 2*A2.
  IntMatrix a1 = r.scheme.relation_matrix(1);
  IntMatrix a2 = r.scheme.relation_matrix(2);
  CHECK(mat_mul(a1, a1) == IntMatrix(a1 + Int(2) * a2));
  CHECK(mat_mul(a1, a2) == IntMatrix(Int(3) * identity_matrix(7) + a1 + a2));
}

TEST_CASE("paley rejects bad parameters") {
  CHECK_THROWS_AS(paley_tournament(5), ParameterError);
  CHECK_THROWS_AS(paley_tournament(4), ParameterError);
  CHECK_THROWS_AS(paley_tournament(9), ParameterError);
  CHECK_THROWS_AS(paley_tournament(1), ParameterError);
  CHECK_THROWS_AS(paley_tournament(-3), ParameterError);
}

TEST_CASE("paley tournaments are translation invariant") {
  for (long q : {3L, 7L, 11L}) {
    Rank3Input r = paley_tournament(q);
    const ColorMatrix& c = r.scheme.colors();
    for (Index i = 0; i < q; ++i)
      for (Index j = 0; j < q; ++j) CHECK(c(i, j) == c((i + 1) % q, (j + 1) % q));
    CHECK(r.scheme.valencies().n == std::vector<long>{1, r.b, r.b});
  }
}

TEST_CASE("validate_rank3 certifies paley 11") {
  Rank3Input r = paley_tournament(11);
  Rank3Input again = validate_rank3(r.scheme);
  CHECK(again.n == 12);
  CHECK(again.a == 11);
  CHECK(again.b == 5);
}

TEST_CASE("validate_rank3 rejects symmetric input with a distinct diagnostic") {
  AssociationScheme c5 = AssociationScheme::from_colors(c5_distance_colors());
  CHECK_THROWS_WITH_AS(validate_rank3(c5), doctest::Contains("symmetric"), InputCertError);
}

TEST_CASE("validate_rank3 rejects a random non-doubly-regular tournament") {
  std::mt19937 rng(23);
  IntMatrix a1 = IntMatrix::Zero(7, 7);
  std::bernoulli_distribution coin(0.5);
  for (Index i = 0; i < 7; ++i)
    for (Index j = i + 1; j < 7; ++j) {
      if (coin(rng))
        a1(i, j) = 1;
      else
        a1(j, i) = 1;
    }
  IntMatrix a2 = transpose(a1);
  try {
    validate_rank3({identity_matrix(7), a1, a2});
    CHECK(false);
  } catch (const InputCertError& e) {
    CHECK(dqt::contains(e.what(), "identity (3)"));
  }
}

TEST_CASE("validate_rank3 rejects wrong order residue") {
  // The unique tournament on one point extended to order 5 cannot exist, so
  // build the cyclic tournament on 5 points: order 5 = 1 mod 4 is rejected
  // before any product check.
  ColorMatrix c(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) {
      int d = static_cast<int>(((j - i) % 5 + 5) % 5);
      c(i, j) = d == 0 ? 0 : (d <= 2 ? 1 : 2);
    }
  IntMatrix a1 = IntMatrix::Zero(5, 5), a2 = IntMatrix::Zero(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) {
      if (c(i, j) == 1) a1(i, j) = 1;
      if (c(i, j) == 2) a2(i, j) = 1;
    }
  CHECK_THROWS_WITH_AS(validate_rank3({identity_matrix(5), a1, a2}),
                       doctest::Contains("3 mod 4"), InputCertError);
}

TEST_CASE("bordered shift tournament is the order-4 skew-Hadamard of paley 3") {
  Rank3Input p3 = paley_tournament(3);
  SkewHadamard h = border_tournament(p3.scheme);
  CHECK(h.h == im({{1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}}));

  Rank3Input r = skew_hadamard_to_rank3(h);
  CHECK(r.scheme.colors() == p3.scheme.colors());
}

TEST_CASE("sign-flip scrambles normalize back to the same tournament") {
  Rank3Input p7 = paley_tournament(7);
  SkewHadamard h = border_tournament(p7.scheme);

  IntMatrix scrambled = h.h;
  for (Index t : {2L, 5L}) {
    for (Index j = 0; j < 8; ++j) scrambled(t, j) *= -1;
    for (Index i = 0; i < 8; ++i) scrambled(i, t) *= -1;
  }
  Rank3Input r = skew_hadamard_to_rank3(make_skew_hadamard(scrambled));
  CHECK(r.scheme.colors() == p7.scheme.colors());
  CHECK(r.n == 8);
  CHECK(r.a == 7);
  CHECK(r.b == 3);
}

TEST_CASE("symmetric Hadamard matrices are rejected") {
  IntMatrix h2(2, 2);
  h2 << 1, 1, 1, -1;
  IntMatrix h4 = kronecker(h2, h2);
  CHECK_THROWS_WITH_AS(make_skew_hadamard(h4), doctest::Contains("skew"), InputCertError);
  CHECK_THROWS_AS(make_skew_hadamard(im({{1, 1}, {1, 1}})), InputCertError);
  CHECK_THROWS_AS(make_skew_hadamard(im({{1, 2}, {-2, 1}})), InputCertError);
}

TEST_CASE("hadamard file round trip and rejection") {
  Rank3Input p3 = paley_tournament(3);
  SkewHadamard h = border_tournament(p3.scheme);

  std::ostringstream os;
  write_had(os, h);
  CHECK(os.str() == "hadamard 4\n++++\n-++-\n--++\n-+-+\n");

  std::istringstream in(os.str());
  SkewHadamard back = read_had(in);
  CHECK(back.h == h.h);

  std::istringstream bad1("hadamard 2\n+x\n-+\n");
  CHECK_THROWS_AS(read_had(bad1), FormatError);
  std::istringstream bad2("hadamard 2\n++\n");
  CHECK_THROWS_AS(read_had(bad2), FormatError);
  std::istringstream bad3("hadamar 2\n++\n--\n");
  CHECK_THROWS_AS(read_had(bad3), FormatError);
}
