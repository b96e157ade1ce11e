#include <doctest.h>

#include "qk/coupling.hpp"
#include "qk/random.hpp"

using namespace qk;

TEST_CASE("series evaluation by repeated multiplication") {
  const CouplingSeries f({2.0, -1.0, 0.5});  // 2x - x^2 + 0.5 x^3
  Rng rng(3);
  const Mat Z = random_so_group(3, 0.8, rng).entries();
  const Mat direct = 2.0 * Z - Z * Z + 0.5 * Z * Z * Z;
  CHECK((f.apply(Z) - direct).norm() < 1e-14);
  CHECK(f.slope_at_identity() == doctest::Approx(2.0 - 2.0 + 1.5));

  const CouplingSeries id = CouplingSeries::identity();
  CHECK((id.apply(Z) - Z).norm() == 0.0);
  CHECK(id.slope_at_identity() == 1.0);
}

TEST_CASE("odd part lands in the algebra on SO(d)") {
  Rng rng(9);
  const CouplingSeries f({1.0, 0.3, -0.2});
  for (int trial = 0; trial < 20; ++trial) {
    const Mat Z = random_so_group(4, 1.0, rng).entries();
    const Mat g = f.odd_part(Z, group_inverse(Z, GroupTag::SOd));
    CHECK(algebra_membership(g, GroupTag::SOd, 1e-12));
  }
}

TEST_CASE("coupling series validation") {
  CHECK_THROWS_AS(CouplingSeries({}), DomainError);
  CHECK_THROWS_AS(CouplingSeries({1.0, std::nan("")}), NumericError);
}
