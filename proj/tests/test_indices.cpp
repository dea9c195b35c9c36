#include <doctest.h>

#include <stdexcept>

#include "ajf/generators.hpp"
#include "ajf/indices.hpp"

using namespace ajf;

TEST_CASE("half integers store the doubled value exactly") {
  CHECK(HalfInt::of(2).twice == 4);
  CHECK(HalfInt::from_twice(3).to_double() == 1.5);
  CHECK(HalfInt::from_twice(3).is_integer() == false);
  CHECK(HalfInt::of(-1).to_int() == -1);
  CHECK_THROWS_AS(HalfInt::from_twice(5).to_int(), std::logic_error);
  CHECK(abs(HalfInt::from_twice(-3)) == HalfInt::from_twice(3));
  CHECK(to_string(HalfInt::from_twice(3)) == "3/2");
  CHECK(to_string(HalfInt::of(2)) == "2");
  CHECK(to_string(HalfInt::from_twice(-1)) == "-1/2");
  CHECK(HalfInt::from_twice(1) + HalfInt::from_twice(1) == one());
  CHECK(3 * half() == HalfInt::from_twice(3));
  CHECK(HalfInt::of(1) < HalfInt::from_twice(3));
}

TEST_CASE("validation enforces the unitary range") {
  CHECK(is_valid(IndexTriple::of(1, 0, 0)));
  CHECK(is_valid(IndexTriple::from_twice(1, 1, 1)));
  CHECK(is_valid(IndexTriple::of(3, -2, 1)));

  // l - q must be an integer
  const IndexTriple mixed = IndexTriple::from_twice(1, 1, 0);
  CHECK_FALSE(is_valid(mixed));
  CHECK_FALSE(validate(mixed).violations.empty());

  CHECK_FALSE(is_valid(IndexTriple::of(1, 2, 0)));   // |m| > l
  CHECK_FALSE(is_valid(IndexTriple::of(-1, 0, 0)));  // l < 0
  CHECK_FALSE(is_valid(IndexTriple::from_twice(2, 1, 1)));  // l - m half-odd

  CHECK_THROWS_AS(require_valid(IndexTriple::of(0, 1, 0)), std::domain_error);
  CHECK_NOTHROW(require_valid(IndexTriple::from_twice(5, 3, -1)));
}

TEST_CASE("classical index maps are inverse to each other") {
  const ClassicalIndex c = to_classical(IndexTriple::of(2, 1, 1));
  CHECK(c.n == 1);
  CHECK(c.alpha == 2);
  CHECK(c.beta == 0);

  for (const auto& t : enumerate_states(HalfInt::from_twice(20)))
    CHECK(from_classical(to_classical(t)) == t);
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b) {
        const ClassicalIndex ci{n, a, b};
        CHECK(to_classical(from_classical(ci)) == ci);
      }
}

TEST_CASE("multiplet enumeration is complete and ordered") {
  const auto m1 = enumerate_multiplet(HalfInt::of(1));
  REQUIRE(m1.size() == 9);
  CHECK(m1.front() == IndexTriple::of(1, -1, -1));
  CHECK(m1.back() == IndexTriple::of(1, 1, 1));
  for (std::size_t i = 1; i < m1.size(); ++i) CHECK(m1[i - 1] < m1[i]);

  CHECK(enumerate_multiplet(HalfInt::from_twice(1)).size() == 4);
  CHECK(enumerate_multiplet(HalfInt::of(0)).size() == 1);

  // sum of (2l+1)^2 for 2l = 0..12
  CHECK(enumerate_states(HalfInt::of(6)).size() == 819);
  CHECK(enumerate_states(HalfInt::from_twice(1)).size() == 5);
  for (const auto& t : enumerate_states(HalfInt::of(6))) CHECK(is_valid(t));
}

TEST_CASE("diagonal eigenvalues") {
  const IndexTriple t = IndexTriple::from_twice(1, 1, 1);
  CHECK(cartan_eigenvalue(GeneratorId::C3, t) == HalfInt::from_twice(3));
  CHECK(cartan_eigenvalue(GeneratorId::F3, IndexTriple::of(1, 1, 1)) == half());
  CHECK(cartan_eigenvalue(GeneratorId::E3, IndexTriple::of(1, 1, -1)) == half());
  CHECK(cartan_eigenvalue(GeneratorId::D3, IndexTriple::of(2, 1, -1)) == HalfInt::from_twice(7));
  CHECK(cartan_eigenvalue(GeneratorId::A3, IndexTriple::of(2, -1, 0)) == HalfInt::of(-1));
  CHECK(cartan_eigenvalue(GeneratorId::L, t) == half());
  CHECK_THROWS_AS(cartan_eigenvalue(GeneratorId::APlus, t), std::invalid_argument);
}

TEST_CASE("generator bookkeeping") {
  CHECK(su22_basis().size() == 15);
  CHECK(ladder_generators().size() == 12);
  for (GeneratorId g : ladder_generators()) {
    CHECK(is_ladder(g));
    CHECK_FALSE(is_diagonal(g));
    CHECK(partner(partner(g)) == g);
    CHECK(ladder_sign(g) + ladder_sign(partner(g)) == 0);
    CHECK(parse_generator(name(g)) == g);
  }
  CHECK(family(GeneratorId::CPlus) == 'C');
  CHECK(name(GeneratorId::FMinus) == "F-");
  CHECK(is_diagonal(GeneratorId::B3));
  CHECK(parse_generator("Q") == GeneratorId::Q);
  CHECK_FALSE(parse_generator("G+").has_value());
}
