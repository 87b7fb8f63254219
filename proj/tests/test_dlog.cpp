#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourier_cs/dlog.hpp"
#include "fourier_cs/rng.hpp"

using namespace fcs;

TEST_CASE("baby-step table matches the worked F_7 example") {
  Field F = Field::make(7, 1, 1);
  DlogTable table(F, F.from_int(3));
  CHECK(table.K() == 3);  // ceil(sqrt(6))
  REQUIRE(table.baby_steps().size() == 3);
  CHECK(table.baby_steps().at(F.encode(F.from_int(1))) == 0);
  CHECK(table.baby_steps().at(F.encode(F.from_int(3))) == 1);
  CHECK(table.baby_steps().at(F.encode(F.from_int(2))) == 2);  // 3^2 = 2 mod 7

  CHECK(table.log(F.from_int(1)) == 0);
  CHECK(table.log(F.from_int(3)) == 1);
  CHECK(table.log(F.from_int(6)) == 3);  // 3^3 = 27 = 6 mod 7
  CHECK_THROWS_AS(table.log(F.zero()), std::invalid_argument);
}

TEST_CASE("table size and K invariants") {
  Field F = Field::make(29, 1, 2, Coeffs{2, 0, 1});
  DlogTable table(F, F.element(Coeffs{1, 1}));
  CHECK(table.K() == 29);  // ceil(sqrt(840))
  CHECK(table.K() * table.K() >= F.group_order());
  CHECK(table.baby_steps().size() == table.K());
}

TEST_CASE("non-primitive base is rejected") {
  Field F = Field::make(29, 1, 2, Coeffs{2, 0, 1});
  CHECK_THROWS_AS(DlogTable(F, F.element(Coeffs{2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(DlogTable(F, F.one()), std::invalid_argument);
}

TEST_CASE("exhaustive round-trip on small fields") {
  for (Field F : {Field::make(7, 1, 1), Field::make(2, 1, 6),
                  Field::make(29, 1, 2, Coeffs{2, 0, 1}), Field::make(5, 1, 4)}) {
    FieldElement g = F.find_primitive_root();
    DlogTable table(F, g);
    FieldElement cur = F.one();
    for (u64 m = 0; m < F.group_order(); ++m) {
      CHECK(table.log(cur) == m);
      cur = F.mul(cur, g);
    }
  }
}

TEST_CASE("log is a homomorphism: log(uv) = log(u) + log(v) mod N") {
  Field F = Field::make(19, 1, 3, Coeffs{1, 1, 0, 1});
  DlogTable table(F, F.element(Coeffs{0, 2, 1}));
  Rng rng(0xd109);
  const u64 N = F.group_order();
  for (int i = 0; i < 500; ++i) {
    FieldElement u = F.decode(1 + rng.bounded(F.order() - 1));
    FieldElement v = F.decode(1 + rng.bounded(F.order() - 1));
    CHECK(table.log(F.mul(u, v)) == (table.log(u) + table.log(v)) % N);
  }
}

TEST_CASE("random round-trip on a larger field") {
  Field F = Field::make(101, 1, 2);  // order 10201
  FieldElement g = F.find_primitive_root();
  DlogTable table(F, g);
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    u64 m = rng.bounded(F.group_order());
    CHECK(table.log(F.pow(g, static_cast<i64>(m))) == m);
  }
}
