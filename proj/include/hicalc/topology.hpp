#ifndef HICALC_TOPOLOGY_HPP
#define HICALC_TOPOLOGY_HPP

#include <optional>
#include <vector>

#include "hicalc/rational.hpp"

namespace hicalc {

// Rational Betti numbers indexed by degree, starting at 0.
using BettiVector = std::vector<long long>;

inline long long euler_characteristic(const BettiVector& b) {
  long long chi = 0;
  long long sign = 1;
  for (long long v : b) {
    chi += sign * v;
    sign = -sign;
  }
  return chi;
}

// Betti numbers of a smooth degree-d hypersurface of complex dimension n in
// P^{n+1}: hyperplane classes in even degrees away from the middle, plus a
// middle rank pinned by chi = (n+2) + ((1-d)^{n+2} - 1)/d.
inline BettiVector smooth_hypersurface_betti(int n, long long d) {
  if (n < 1) throw input_error("hypersurface dimension must be at least 1");
  if (d < 1) throw input_error("hypersurface degree must be at least 1");
  Int pw = 1;
  for (int i = 0; i < n + 2; ++i) pw *= Int(1 - d);
  const Int chi = Int(n + 2) + (pw - 1) / Int(d);
  const Int middle = n % 2 == 0 ? chi - n : Int(n + 1) - chi;
  if (middle < 0) throw compute_error("negative middle Betti number");
  BettiVector b(2 * n + 1, 0);
  for (int i = 0; i <= 2 * n; i += 2) b[i] = 1;
  b[n] = to_int64(middle, "middle Betti number");
  return b;
}

// Local Milnor fiber of an isolated singularity: wedge of mu middle spheres.
inline BettiVector milnor_fiber_betti(long long mu, int n) {
  if (n < 1) throw input_error("fiber dimension must be at least 1");
  if (mu < 0) throw input_error("mu must be non-negative");
  BettiVector b(2 * n + 1, 0);
  b[0] = 1;
  b[n] += mu;
  return b;
}

// Betti numbers of the singularity link, a closed (2n-1)-manifold that is
// (n-2)-connected.  For n >= 2 the middle ranks come out of the Wang
// sequence of the fibered link complement, rank H_n(L) = mu - rank(T - 1),
// and Poincare duality fills in the rest.  For n = 1 the link is a disjoint
// union of circles, one per branch, and that count is 1 + mu - rank(T - 1).
inline BettiVector link_betti(long long mu, long long rank_t1, int n,
                              std::optional<long long> branches = std::nullopt) {
  if (n < 1) throw input_error("link dimension must be at least 1");
  if (mu < 0) throw input_error("mu must be non-negative");
  if (rank_t1 < 0 || rank_t1 > mu)
    throw input_error("rank(T-1) must lie between 0 and mu");
  if (n >= 2) {
    if (branches) throw input_error("branch counts only apply to curve singularities");
    BettiVector b(2 * n, 0);
    b[0] = 1;
    b[2 * n - 1] = 1;
    b[n - 1] = mu - rank_t1;
    b[n] = mu - rank_t1;
    return b;
  }
  const long long circles = 1 + mu - rank_t1;
  if (branches && *branches != circles)
    throw compute_error("supplied branch count disagrees with 1 + mu - rank(T-1)");
  return BettiVector{circles, circles};
}

// Per-singularity link data, enough to reconstruct every Betti number of the
// total link: components b_0(L_x) and the middle rank (b_{n-1} = b_n for
// n >= 2; equal to b_0 for circles when n = 1).
struct LinkProfile {
  struct Entry {
    long long components = 1;
    long long middle = 0;
    long long count = 1;
  };
  int n = 1;
  std::vector<Entry> entries;

  long long total_components() const {
    long long t = 0;
    for (const auto& e : entries) t += e.components * e.count;
    return t;
  }
  long long total_middle() const {
    long long t = 0;
    for (const auto& e : entries) t += e.middle * e.count;
    return t;
  }
};

// Truncated Euler characteristic of the total link, summing (-1)^i b_i(L)
// over degrees i strictly below the middle dimension n.
inline long long truncated_link_euler(const LinkProfile& link) {
  if (link.n < 1) throw input_error("link dimension must be at least 1");
  long long t = 0;
  for (const auto& e : link.entries) {
    long long per = 0;
    if (link.n == 1) {
      per = e.components;  // only i = 0 lies below the middle
    } else {
      per = 1;  // connected, i = 0
      const long long sign = (link.n - 1) % 2 == 0 ? 1 : -1;
      per += sign * e.middle;  // i = n-1 term; everything strictly between is 0
    }
    t += per * e.count;
  }
  return t;
}

// Betti numbers of the singular hypersurface itself (n >= 2) from the smooth
// deformation via the specialization sequence: the total Milnor rank mu
// enters in degree n+1 and the part that survives into the singular fiber,
// rho + rank(T-1), leaves degree n.
inline BettiVector singular_fiber_betti(const BettiVector& smooth, long long mu_total,
                                        long long rank_t1_total, long long rho, int n) {
  if (n < 2) throw input_error("singular-fiber Betti numbers need n >= 2");
  if (static_cast<int>(smooth.size()) != 2 * n + 1)
    throw input_error("smooth Betti vector has the wrong length");
  if (rho < 0) throw input_error("rho must be non-negative");
  if (rank_t1_total < 0 || rank_t1_total > mu_total)
    throw input_error("rank(T-1) must lie between 0 and mu");
  if (rho + rank_t1_total > mu_total)
    throw input_error("rho + rank(T-1) may not exceed mu");
  if (rho > smooth[n] - rank_t1_total)
    throw input_error("rho may not exceed the middle smooth rank minus rank(T-1)");
  BettiVector b = smooth;
  b[n] -= rho + rank_t1_total;
  b[n + 1] += mu_total - rho - rank_t1_total;
  return b;
}

}  // namespace hicalc

#endif
