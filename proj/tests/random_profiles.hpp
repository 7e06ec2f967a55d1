#ifndef HICALC_TESTS_RANDOM_PROFILES_HPP
#define HICALC_TESTS_RANDOM_PROFILES_HPP

#include <random>
#include <string>

#include "hicalc/stability.hpp"
#include "hicalc/topology.hpp"

// Deterministic generator of consistent hypersurface profiles driven purely
// by user-supplied singularity data (mu, rank, count), kept inside the rank
// budget of the smooth deformation so analysis never degenerates.

namespace testsupport {

inline long long pick_ll(std::mt19937& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline hicalc::HypersurfaceProfile random_profile(std::mt19937& rng) {
  hicalc::HypersurfaceProfile p;
  p.n = static_cast<int>(pick_ll(rng, 1, 4));
  p.d = pick_ll(rng, 2, p.n >= 4 ? 3 : 5);
  const hicalc::BettiVector smooth = hicalc::smooth_hypersurface_betti(p.n, p.d);

  long long rank_total = 0;
  long long points = 0;
  const long long groups = pick_ll(rng, 1, 3);
  for (long long g = 0; g < groups; ++g) {
    hicalc::SingularityData s;
    s.label = "random " + std::to_string(g);
    const long long mu = pick_ll(rng, 1, 5);
    const long long rank = pick_ll(rng, 0, mu);
    const long long count = pick_ll(rng, 1, p.n == 1 ? 2 : 3);
    s.mu = mu;
    s.rank_T_minus_1 = rank;
    s.count = count;
    const long long new_rank = rank_total + rank * count;
    const long long new_points = points + count;
    if (p.n >= 2) {
      if (new_rank > smooth[p.n]) continue;  // keep the middle rank non-negative
    } else {
      if (smooth[1] - new_rank + 2 * (new_points - 1) < 0) continue;
    }
    rank_total = new_rank;
    points = new_points;
    p.singularities.push_back(std::move(s));
  }
  if (p.singularities.empty()) {
    // every generated profile carries at least one singular point; a single
    // node fits any rank budget
    hicalc::SingularityData s;
    s.label = "fallback node";
    s.mu = 1;
    s.rank_T_minus_1 = 0;
    p.singularities.push_back(std::move(s));
    points = 1;
  }

  if (p.n >= 2 && pick_ll(rng, 0, 1) == 1) {
    long long mu_total = 0;
    for (const auto& s : p.singularities) mu_total += *s.mu * s.count;
    const long long cap = std::min(mu_total - rank_total, smooth[p.n] - rank_total);
    p.rho = pick_ll(rng, 0, cap);
    p.rho_explicit = true;
  }
  return p;
}

}  // namespace testsupport

#endif
