#include <catch2/catch_amalgamated.hpp>

#include "eea/field.hpp"

using namespace eea;

TEST_CASE("prime field descriptor validates the modulus") {
  CHECK_NOTHROW(FieldDescriptor::prime(2));
  CHECK_NOTHROW(FieldDescriptor::prime(13));
  CHECK_THROWS_AS(FieldDescriptor::prime(1), DomainError);
  CHECK_THROWS_AS(FieldDescriptor::prime(15), DomainError);
  CHECK_THROWS_AS(FieldDescriptor::prime(0), DomainError);
}

TEST_CASE("rational parsing normalizes") {
  auto f = FieldDescriptor::rational();
  CHECK(Scalar::parse("3/6", f).str() == "1/2");
  CHECK(Scalar::parse("-4/6", f).str() == "-2/3");
  CHECK(Scalar::parse("7", f).str() == "7");
  CHECK(Scalar::parse("-0.25", f).str() == "-1/4");
  CHECK(Scalar::parse("1.5", f).str() == "3/2");
  CHECK(Scalar::parse("0", f).is_zero());
  CHECK_THROWS_AS(Scalar::parse("1/0", f), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc", f), ParseError);
  CHECK_THROWS_AS(Scalar::parse("", f), ParseError);
}

TEST_CASE("prime field parsing reduces mod p") {
  auto f7 = FieldDescriptor::prime(7);
  CHECK(Scalar::parse("10", f7).res() == 3);
  CHECK(Scalar::parse("-1", f7).res() == 6);
  CHECK(Scalar::parse("1/2", f7).res() == 4);  // 2 * 4 = 8 = 1 (mod 7)
}

TEST_CASE("scalar arithmetic per field") {
  auto f = FieldDescriptor::rational();
  Scalar a = Scalar::parse("1/2", f), b = Scalar::parse("1/3", f);
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a - b).str() == "1/6");
  CHECK(div(a, b).str() == "3/2");
  CHECK((-a).str() == "-1/2");

  auto f5 = FieldDescriptor::prime(5);
  Scalar x = Scalar::from_residue(3, f5), y = Scalar::from_residue(4, f5);
  CHECK((x + y).res() == 2);
  CHECK((x * y).res() == 2);
  CHECK(div(x, y).res() == 2);  // 3 * 4^{-1} = 3 * 4 = 12 = 2
  CHECK_THROWS_AS(div(x, Scalar::zero(f5)), DomainError);

  CHECK_THROWS_AS(a + x, FieldMismatchError);
}

TEST_CASE("modular helpers") {
  CHECK(inv_mod(2, 7) == 4);
  CHECK(mul_mod(1'000'000'007ULL, 998'244'353ULL, 1'000'000'009ULL) ==
        (static_cast<unsigned __int128>(1'000'000'007ULL) * 998'244'353ULL) % 1'000'000'009ULL);
  CHECK_THROWS_AS(inv_mod(0, 7), DomainError);
}

TEST_CASE("real scalars round-trip through strings") {
  auto f = FieldDescriptor::real();
  Scalar s = Scalar::parse("0.1", f);
  Scalar t = Scalar::parse(s.str(), f);
  CHECK(s == t);
}
