#include <catch2/catch_amalgamated.hpp>

#include "hicalc/topology.hpp"

using hicalc::BettiVector;
using hicalc::compute_error;
using hicalc::input_error;
using hicalc::LinkProfile;

TEST_CASE("smooth hypersurface betti numbers", "[topology]") {
  CHECK(hicalc::smooth_hypersurface_betti(3, 5) ==
        BettiVector{1, 0, 1, 204, 1, 0, 1});
  CHECK(hicalc::smooth_hypersurface_betti(2, 4) == BettiVector{1, 0, 22, 0, 1});
  CHECK(hicalc::smooth_hypersurface_betti(2, 3) == BettiVector{1, 0, 7, 0, 1});
  CHECK(hicalc::smooth_hypersurface_betti(1, 3) == BettiVector{1, 2, 1});
  CHECK(hicalc::smooth_hypersurface_betti(1, 2) == BettiVector{1, 0, 1});
  CHECK(hicalc::smooth_hypersurface_betti(1, 5) == BettiVector{1, 12, 1});
  // degree 1 is the ambient projective space one dimension down
  CHECK(hicalc::smooth_hypersurface_betti(2, 1) == BettiVector{1, 0, 1, 0, 1});
  CHECK(hicalc::smooth_hypersurface_betti(3, 1) == BettiVector{1, 0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(hicalc::smooth_hypersurface_betti(0, 2), input_error);
  CHECK_THROWS_AS(hicalc::smooth_hypersurface_betti(1, 0), input_error);
}

TEST_CASE("euler characteristics of the smooth models", "[topology]") {
  CHECK(hicalc::euler_characteristic(hicalc::smooth_hypersurface_betti(3, 5)) == -200);
  CHECK(hicalc::euler_characteristic(hicalc::smooth_hypersurface_betti(2, 4)) == 24);
  CHECK(hicalc::euler_characteristic(hicalc::smooth_hypersurface_betti(1, 3)) == 0);
}

TEST_CASE("milnor fiber betti numbers", "[topology]") {
  // ranks over degrees 0..2n; everything above the middle stays zero
  CHECK(hicalc::milnor_fiber_betti(8, 1) == BettiVector{1, 8, 0});
  CHECK(hicalc::milnor_fiber_betti(1, 3) == BettiVector{1, 0, 0, 1, 0, 0, 0});
  CHECK(hicalc::milnor_fiber_betti(0, 2) == BettiVector{1, 0, 0, 0, 0});
}

TEST_CASE("link betti numbers in higher dimension", "[topology]") {
  // node on a surface: rational homology 3-sphere
  CHECK(hicalc::link_betti(1, 1, 2) == BettiVector{1, 0, 0, 1});
  // node on a threefold: rational homology of a sphere product
  CHECK(hicalc::link_betti(1, 0, 3) == BettiVector{1, 0, 1, 1, 0, 1});
  // generic weighted-homogeneous example
  CHECK(hicalc::link_betti(8, 8, 2) == BettiVector{1, 0, 0, 1});
  CHECK(hicalc::link_betti(4, 2, 2) == BettiVector{1, 2, 2, 1});
  CHECK_THROWS_AS(hicalc::link_betti(1, 0, 2, 3), input_error);
}

TEST_CASE("curve links are unions of circles", "[topology]") {
  // cusp: one branch
  CHECK(hicalc::link_betti(2, 2, 1) == BettiVector{1, 1});
  // node: two branches
  CHECK(hicalc::link_betti(1, 0, 1) == BettiVector{2, 2});
  // cone over three points: three branches
  CHECK(hicalc::link_betti(4, 2, 1) == BettiVector{3, 3});
  CHECK(hicalc::link_betti(4, 2, 1, 3) == BettiVector{3, 3});
  CHECK_THROWS_AS(hicalc::link_betti(4, 2, 1, 2), compute_error);
}

TEST_CASE("truncated link euler characteristic", "[topology]") {
  LinkProfile lp;
  lp.n = 2;
  lp.entries.push_back({1, 0, 16});  // sixteen rational sphere links
  CHECK(hicalc::truncated_link_euler(lp) == 16);

  LinkProfile quintic;
  quintic.n = 3;
  quintic.entries.push_back({1, 1, 125});
  CHECK(hicalc::truncated_link_euler(quintic) == 250);

  LinkProfile curve;
  curve.n = 1;
  curve.entries.push_back({2, 2, 1});  // a node's two circles
  CHECK(hicalc::truncated_link_euler(curve) == 2);

  LinkProfile surface_cone;
  surface_cone.n = 2;
  surface_cone.entries.push_back({1, 2, 1});  // middle rank 2 counts negatively
  CHECK(hicalc::truncated_link_euler(surface_cone) == -1);
}

TEST_CASE("singular fiber ranks from the smooth model", "[topology]") {
  const BettiVector smooth = hicalc::smooth_hypersurface_betti(2, 4);
  CHECK(hicalc::singular_fiber_betti(smooth, 16, 16, 0, 2) ==
        BettiVector{1, 0, 6, 0, 1});
  const BettiVector q = hicalc::smooth_hypersurface_betti(3, 5);
  CHECK(hicalc::singular_fiber_betti(q, 125, 0, 101, 3) ==
        BettiVector{1, 0, 1, 103, 25, 0, 1});
  CHECK(hicalc::singular_fiber_betti(q, 16, 0, 15, 3) ==
        BettiVector{1, 0, 1, 189, 2, 0, 1});
  // rho beyond its budget is refused
  CHECK_THROWS_AS(hicalc::singular_fiber_betti(smooth, 16, 16, 1, 2), input_error);
  CHECK_THROWS_AS(hicalc::singular_fiber_betti(smooth, 2, 0, 23, 2), input_error);
  CHECK_THROWS_AS(hicalc::singular_fiber_betti(smooth, 16, 16, -1, 2), input_error);
  // curves have no separate singular-fiber rank formula here
  CHECK_THROWS_AS(
      hicalc::singular_fiber_betti(hicalc::smooth_hypersurface_betti(1, 3), 1, 0, 0, 1),
      input_error);
}
