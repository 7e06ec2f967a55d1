#ifndef HICALC_TESTS_FIXTURES_HPP
#define HICALC_TESTS_FIXTURES_HPP

#include "hicalc/chain.hpp"

// Hand-checked chain pairs reused across the unit tests and the acceptance
// run.  Each models a concrete geometric situation whose answers are known.

namespace fixtures {

using hicalc::FiniteChainComplex;
using hicalc::PairComplex;
using hicalc::QMatrix;

// Pinched torus: exterior is a cylinder (vertices a, b; loops e_a, e_b; a
// connecting edge c; one face with boundary e_a - e_b), link is the two
// boundary circles, each mapped onto its loop.  Intersection space at the
// middle cutoff has the Betti numbers of the smooth torus, (1, 2, 0).
inline PairComplex pinched_torus() {
  FiniteChainComplex link({2, 2}, {QMatrix(2, 2)});
  FiniteChainComplex exterior(
      {2, 3, 1},
      {QMatrix{{0, 0, -1}, {0, 0, 1}}, QMatrix{{1}, {-1}, {0}}});
  std::vector<QMatrix> incl = {QMatrix::identity(2), QMatrix{{1, 0}, {0, 1}, {0, 0}}};
  return PairComplex(link, exterior, incl, 2, 1);
}

// Disk with boundary circle: the local model of a smooth point.  The
// intersection space is contractible.
inline PairComplex disk() {
  FiniteChainComplex link({1, 1}, {QMatrix(1, 1)});
  FiniteChainComplex exterior({1, 1, 1}, {QMatrix(1, 1), QMatrix{{1}}});
  std::vector<QMatrix> incl = {QMatrix{{1}}, QMatrix{{1}}};
  return PairComplex(link, exterior, incl, 2, 1);
}

// Exterior of the node on a conic degenerated into two lines: two disks with
// their two boundary circles.  Intersection space contractible, matching the
// profile-level answer for the same curve.
inline PairComplex split_conic() {
  FiniteChainComplex link({2, 2}, {QMatrix(2, 2)});
  FiniteChainComplex exterior({2, 2, 2}, {QMatrix(2, 2), QMatrix::identity(2)});
  std::vector<QMatrix> incl = {QMatrix::identity(2), QMatrix::identity(2)};
  return PairComplex(link, exterior, incl, 2, 1);
}

// Same complexes as the pinched torus but with a deliberately wrong (still
// chain-valid) inclusion.  Not a manifold pair; the complementary-cutoff
// rank symmetry fails at cutoff 0.
inline PairComplex corrupted_pinched_torus() {
  FiniteChainComplex link({2, 2}, {QMatrix(2, 2)});
  FiniteChainComplex exterior(
      {2, 3, 1},
      {QMatrix{{0, 0, -1}, {0, 0, 1}}, QMatrix{{1}, {-1}, {0}}});
  std::vector<QMatrix> incl = {QMatrix{{1, 1}, {0, 0}}, QMatrix(3, 2)};
  return PairComplex(link, exterior, incl, 2, 0);
}

}  // namespace fixtures

#endif
