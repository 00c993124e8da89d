#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "magchain/floquet.hpp"
#include "magchain/graph_spectrum.hpp"

using namespace magchain;

TEST_CASE("free chain fills the half line") {
  const auto gs = assemble(FieldProfile::linear(Rational(0, 1), Rational(0, 1)), 0.0, 3);
  REQUIRE(gs.parts.size() == 4);
  CHECK(gs.parts[0].kind == SpectrumKind::Bands);
  CHECK(gs.parts[0].min() == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(gs.parts[0].max() == doctest::Approx(1.0).epsilon(1e-9));
  for (int n = 1; n <= 3; ++n) {
    CHECK(gs.parts[n].min() == doctest::Approx(n * n).epsilon(1e-8));
    CHECK(gs.parts[n].max() == doctest::Approx((n + 1.0) * (n + 1.0)).epsilon(1e-8));
  }
  for (const auto& gap : gs.gaps) CHECK(gap.touching);
}

TEST_CASE("degenerate profile yields q points per branch") {
  const auto gs = assemble(FieldProfile::linear(Rational(1, 2), Rational(1, 2)), 1.0, 3);
  CHECK(gs.discrete.kind == SpectrumKind::Points);
  for (const auto& part : gs.parts) {
    CHECK(part.kind == SpectrumKind::Points);
    CHECK(part.points.size() == 2);
  }
  CHECK(gs.dirichlet_points == std::vector<double>{1.0, 4.0, 9.0});
}

TEST_CASE("alpha = 1/3 with gamma = 1 yields three intervals per branch") {
  const auto gs = assemble(FieldProfile::linear(Rational(1, 3), Rational(0, 1)), 1.0, 3);
  CHECK(gs.discrete.kind == SpectrumKind::Bands);
  for (const auto& part : gs.parts) {
    CHECK(part.kind == SpectrumKind::Bands);
    CHECK(part.intervals.size() == 3);
  }
  SUBCASE("each n^2 sits strictly inside the adjacent gap") {
    REQUIRE(gs.gaps.size() == 3);
    for (int n = 1; n <= 3; ++n) {
      const auto& gap = gs.gaps[n - 1];
      CHECK(!gap.touching);
      CHECK(gap.lo < n * n);
      CHECK(n * n < gap.hi);
    }
  }
  SUBCASE("distance reports the owning branch") {
    int branch = -2;
    CHECK(gs.distance(4.0, &branch) == 0.0);
    CHECK(branch == -1);  // Dirichlet point
    const double mid = 0.5 * (gs.parts[1].intervals[0].lo + gs.parts[1].intervals[0].hi);
    CHECK(gs.distance(mid, &branch) == 0.0);
    CHECK(branch == 1);
  }
}

TEST_CASE("measure helpers") {
  const auto w0 = FieldProfile::linear(Rational(0, 1), Rational(0, 1)).evaluate(0, 0);
  CHECK(total_measure(bands_nondegenerate(w0)) == doctest::Approx(8.0).epsilon(1e-9));
  const auto w12 = FieldProfile::linear(Rational(1, 2), Rational(1, 2)).evaluate(0, 1);
  CHECK(total_measure(blocks_degenerate(w12)) == 0.0);
}

TEST_CASE("golden convergents") {
  const auto cs = golden_convergents(6);
  REQUIRE(cs.size() == 6);
  const long long want[6][2] = {{1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}, {13, 21}};
  for (int i = 0; i < 6; ++i) {
    CHECK(cs[i].num == want[i][0]);
    CHECK(cs[i].den == want[i][1]);
  }
}

TEST_CASE("box dimension calibration") {
  const std::vector<double> scales{0.1, 0.0316, 0.01, 0.00316, 0.001};
  SUBCASE("single interval is one-dimensional") {
    BandSet s;
    s.bands = {{-4.0, 4.0}};
    const auto fit = box_dimension_estimate(s, scales);
    CHECK(fit.dimension == doctest::Approx(1.0).epsilon(0.05));
  }
  SUBCASE("finite point set is zero-dimensional") {
    BandSet s;
    s.kind = SpectrumKind::Points;
    s.points = {-2.0, -0.5, 1.0, 3.0};
    const auto fit = box_dimension_estimate(s, scales);
    CHECK(std::abs(fit.dimension) < 0.05);
  }
  SUBCASE("input validation") {
    BandSet s;
    s.bands = {{0.0, 1.0}};
    CHECK_THROWS(box_dimension_estimate(s, {0.1, 0.05, 0.025, 0.0125}));  // < 2 decades
    CHECK_THROWS(box_dimension_estimate(s, {0.1, 0.001}));                // < 4 scales
  }
}

TEST_CASE("butterfly sweep") {
  SUBCASE("q_max = 1: alpha in {0, 1} each give [-4, 4]") {
    const auto t = butterfly(1, 0.0, 0.0, Coordinates::Discrete, 0);
    REQUIRE(t.rows.size() == 2);
    for (const auto& r : t.rows) {
      CHECK(r.lo == doctest::Approx(-4.0).epsilon(1e-9));
      CHECK(r.hi == doctest::Approx(4.0).epsilon(1e-9));
    }
  }
  SUBCASE("q_max = 2: the alpha = 1/2 row is degenerate with points +-2") {
    const auto t = butterfly(2, 0.0, 0.0, Coordinates::Discrete, 0);
    std::vector<double> half_points;
    for (const auto& r : t.rows)
      if (r.p == 1 && r.q == 2) {
        CHECK(r.kind == SpectrumKind::Points);
        half_points.push_back(r.lo);
      }
    REQUIRE(half_points.size() == 2);
    CHECK(half_points[0] == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(half_points[1] == doctest::Approx(2.0).epsilon(1e-10));
  }
  SUBCASE("row counts follow the Farey structure") {
    const auto t = butterfly(3, 0.123, 0.0, Coordinates::Discrete, 0);
    // alphas: 0, 1/3, 1/2, 2/3, 1 -> 1 + 3 + 2 + 3 + 1 = 10 rows
    CHECK(t.rows.size() == 10);
    for (size_t i = 1; i < t.rows.size(); ++i) {
      const double prev = static_cast<double>(t.rows[i - 1].p) / t.rows[i - 1].q;
      const double cur = static_cast<double>(t.rows[i].p) / t.rows[i].q;
      CHECK(prev <= cur);
    }
  }
}

TEST_CASE("CSV writers use the fixed schemas") {
  const auto gs = assemble(FieldProfile::linear(Rational(1, 2), Rational(1, 2)), 0.0, 1);
  std::ostringstream bands_os;
  write_bands_csv(bands_os, gs);
  CHECK(bands_os.str().rfind("n,kind,lo,hi\n", 0) == 0);

  std::ostringstream bf_os;
  write_butterfly_csv(bf_os, butterfly(1, 0.0, 0.0, Coordinates::Discrete, 0));
  CHECK(bf_os.str().rfind("p,q,theta,n,lo,hi,kind\n", 0) == 0);

  std::ostringstream ms_os;
  write_measure_csv(ms_os, {{1, 2, 0.0, 0.0}});
  CHECK(ms_os.str() == "p,q,total_measure,box_dimension\n1,2,0,0\n");

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-4.0) == "-4");
}
