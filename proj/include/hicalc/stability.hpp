#ifndef HICALC_STABILITY_HPP
#define HICALC_STABILITY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hicalc/monodromy.hpp"
#include "hicalc/polynomial.hpp"
#include "hicalc/standard_basis.hpp"
#include "hicalc/topology.hpp"

namespace hicalc {

/*
 * Deformation-stability analysis of a projective hypersurface with isolated
 * singularities: resolves each singularity to its Milnor number and
 * monodromy rank, assembles the Betti numbers of the intersection space and
 * of the nearby smooth deformation, and reports which degrees survive the
 * smoothing unchanged.
 */

struct SingularityData {
  std::string label;
  std::optional<Polynomial> germ;
  std::optional<ProjectivePoint> point;
  std::optional<std::vector<long long>> weights;
  std::optional<long long> weighted_degree;
  std::optional<long long> mu;
  std::optional<long long> rank_T_minus_1;
  std::optional<long long> branches;
  long long count = 1;
};

struct HypersurfaceProfile {
  int n = 1;                 // complex dimension of the hypersurface
  long long d = 1;           // degree
  std::optional<Polynomial> polynomial;
  long long rho = 0;         // rank of middle link homology inside the exterior
  bool rho_explicit = false;
  std::optional<BettiVector> ih_ranks;  // middle-perversity ranks, length 2n+1
  std::vector<SingularityData> singularities;
};

struct ResolvedSingularity {
  std::string label;
  long long count = 1;
  long long mu = 0;
  MonodromySource mu_source = MonodromySource::User;
  long long rank_T_minus_1 = 0;
  MonodromySource rank_source = MonodromySource::User;
  std::optional<long long> branches;  // set for n = 1
  BettiVector link;                   // Betti numbers of one copy of the link
};

struct AnalyzeOptions {
  bool assume_trivial_monodromy = false;
  std::optional<long long> rho_override;
  long long reduction_cap = 10000;
  std::vector<std::string>* trace = nullptr;  // optional derivation log
};

namespace detail {

inline void trace_line(const AnalyzeOptions& o, const std::string& line) {
  if (o.trace) o.trace->push_back(line);
}

}  // namespace detail

// Fill in mu, rank(T-1) and (for curves) the branch count of one singularity,
// cross-checking every supplied value against whatever an engine can compute.
// Engines, in order of preference: Groebner staircase for mu (from a germ,
// possibly localized from the ambient polynomial at a rational point); the
// node rule or the weighted-homogeneous divisor for rank(T-1); user values
// only where nothing is computable.
inline ResolvedSingularity resolve_singularity(const SingularityData& s, int n,
                                               const std::optional<Polynomial>& ambient =
                                                   std::nullopt,
                                               const AnalyzeOptions& opts = {}) {
  if (n < 1) throw input_error("hypersurface dimension must be at least 1");
  if (s.count < 1) throw input_error("singularity count must be at least 1");
  ResolvedSingularity r;
  r.label = s.label;
  r.count = s.count;

  std::optional<Polynomial> germ = s.germ;
  if (!germ && s.point) {
    if (!ambient)
      throw input_error("singularity '" + s.label +
                        "' names a point but the profile has no polynomial");
    if (!is_singular_point(*ambient, *s.point))
      throw compute_error("singularity '" + s.label +
                          "' names a point that is not singular on the polynomial");
    germ = localize_at(*ambient, *s.point);
  }
  if (germ && germ->variable_count() != n + 1)
    throw input_error("germ of '" + s.label + "' must live in n+1 = " +
                      std::to_string(n + 1) + " variables");

  std::optional<MonodromyDivisor> divisor;
  if (s.weights) {
    if (static_cast<int>(s.weights->size()) != n + 1)
      throw input_error("weights of '" + s.label + "' must have n+1 entries");
    std::optional<long long> wd = s.weighted_degree;
    if (germ) {
      const std::optional<long long> wdg = weighted_degree(*germ, *s.weights);
      if (!wdg)
        throw compute_error("germ of '" + s.label +
                            "' is not weighted-homogeneous for the supplied weights");
      if (wd && *wd != *wdg)
        throw compute_error("supplied weighted degree of '" + s.label +
                            "' disagrees with the germ");
      wd = wdg;
    }
    if (!wd)
      throw input_error("weights of '" + s.label +
                        "' need a weighted_degree (or a germ to infer one)");
    divisor = milnor_orlik(*s.weights, *wd);
  } else if (s.weighted_degree) {
    throw input_error("weighted_degree of '" + s.label + "' is meaningless without weights");
  }

  if (germ) {
    r.mu = milnor_number(*germ, opts.reduction_cap);
    r.mu_source = MonodromySource::Groebner;
    if (s.mu && *s.mu != r.mu)
      throw compute_error("supplied mu of '" + s.label + "' (" + std::to_string(*s.mu) +
                          ") disagrees with the computed value " + std::to_string(r.mu));
    if (divisor && divisor->total_eigenvalues() != r.mu)
      throw compute_error("weighted-homogeneous mu product of '" + s.label +
                          "' disagrees with the staircase dimension");
  } else if (divisor) {
    r.mu = divisor->total_eigenvalues();
    r.mu_source = MonodromySource::MilnorOrlik;
    if (r.mu < 1)
      throw compute_error("weights of '" + s.label + "' describe a smooth germ");
    if (s.mu && *s.mu != r.mu)
      throw compute_error("supplied mu of '" + s.label +
                          "' disagrees with the weighted-homogeneous product");
  } else if (s.mu) {
    if (*s.mu < 1) throw input_error("mu of '" + s.label + "' must be positive");
    r.mu = *s.mu;
    r.mu_source = MonodromySource::User;
  } else {
    throw input_error("insufficient singularity data for '" + s.label +
                      "': supply a germ, a point, weights, or mu");
  }

  if (opts.assume_trivial_monodromy) {
    r.rank_T_minus_1 = 0;
    r.rank_source = MonodromySource::User;
  } else if (germ && is_node(*germ)) {
    const MonodromyReport nr = node_rule(n + 1);
    if (divisor && rank_T_minus_1(r.mu, *divisor) != nr.rank_T_minus_1)
      throw compute_error("node rule disagrees with the weighted-homogeneous divisor for '" +
                          s.label + "'");
    if (s.rank_T_minus_1 && *s.rank_T_minus_1 != nr.rank_T_minus_1)
      throw compute_error("supplied rank_T_minus_1 of '" + s.label +
                          "' disagrees with the node rule");
    r.rank_T_minus_1 = nr.rank_T_minus_1;
    r.rank_source = MonodromySource::NodeRule;
  } else if (divisor) {
    const long long rr = rank_T_minus_1(r.mu, *divisor);
    if (s.rank_T_minus_1 && *s.rank_T_minus_1 != rr)
      throw compute_error("supplied rank_T_minus_1 of '" + s.label +
                          "' disagrees with the monodromy divisor");
    r.rank_T_minus_1 = rr;
    r.rank_source = MonodromySource::MilnorOrlik;
  } else if (s.rank_T_minus_1) {
    if (*s.rank_T_minus_1 < 0 || *s.rank_T_minus_1 > r.mu)
      throw input_error("rank_T_minus_1 of '" + s.label + "' must lie between 0 and mu");
    r.rank_T_minus_1 = *s.rank_T_minus_1;
    r.rank_source = MonodromySource::User;
  } else {
    throw input_error("insufficient singularity data for '" + s.label +
                      "': rank_T_minus_1 is not determined (supply weights, a node "
                      "germ, or the rank itself)");
  }

  if (n == 1) {
    r.link = link_betti(r.mu, r.rank_T_minus_1, n, s.branches);
    r.branches = r.link[0];
  } else {
    if (s.branches)
      throw input_error("branches of '" + s.label + "' only apply to curves (n = 1)");
    r.link = link_betti(r.mu, r.rank_T_minus_1, n);
  }
  return r;
}

struct StabilityVerdict {
  std::vector<bool> per_degree;  // b_i(IV) == b_i(V_s), degrees 0..2n
  bool middle = false;
  bool global = false;
};

struct MiddleBounds {
  long long lower = 0;
  long long upper = 0;
  std::map<std::string, long long> components;  // contributors to the lower bound
  std::vector<std::string> skipped;
  bool lower_attained = false;
  bool upper_attained = false;
};

struct EulerIdentity {
  long long lhs = 0;  // reduced HI Euler characteristic minus the IH one
  long long rhs = 0;  // -2 * truncated link Euler characteristic
  bool holds = false;
};

struct StabilityReport {
  int n = 1;
  long long d = 1;
  BettiVector smooth;                    // nearby smooth deformation
  BettiVector hi;                        // intersection space
  std::optional<BettiVector> singular;   // the singular hypersurface (n >= 2)
  std::vector<ResolvedSingularity> singularities;
  long long mu_total = 0;
  long long rank_T_minus_1_total = 0;
  long long point_count = 0;
  long long link_components = 0;
  long long link_middle = 0;
  long long truncated_link_euler = 0;
  bool monodromy_trivial = true;
  StabilityVerdict verdict;
  std::optional<MiddleBounds> bounds;
  std::optional<std::string> bounds_skipped_reason;
  std::optional<EulerIdentity> euler;
  std::optional<std::string> euler_skipped_reason;
  long long rho = 0;
  bool rho_explicit = false;
  bool assume_trivial_monodromy = false;
  std::vector<std::string> warnings;
};

namespace detail {

inline void validate_profile(const HypersurfaceProfile& p) {
  if (p.n < 1) throw input_error("n must be at least 1");
  if (p.d < 1) throw input_error("d must be at least 1");
  if (p.polynomial) {
    if (p.polynomial->variable_count() != p.n + 2)
      throw input_error("polynomial must have n+2 = " + std::to_string(p.n + 2) +
                        " variables");
    const std::optional<long long> hd = homogeneous_degree(*p.polynomial);
    if (!hd) throw input_error("polynomial is not homogeneous");
    if (*hd != p.d)
      throw input_error("polynomial degree " + std::to_string(*hd) +
                        " does not match d = " + std::to_string(p.d));
  }
  if (p.ih_ranks) {
    if (static_cast<int>(p.ih_ranks->size()) != 2 * p.n + 1)
      throw input_error("ih_ranks must have length 2n+1");
    for (long long v : *p.ih_ranks)
      if (v < 0) throw input_error("ih_ranks entries must be non-negative");
  }
  if (p.rho < 0) throw input_error("rho must be non-negative");
}

}  // namespace detail

inline StabilityReport analyze(const HypersurfaceProfile& p, const AnalyzeOptions& opts = {}) {
  detail::validate_profile(p);
  StabilityReport rep;
  rep.n = p.n;
  rep.d = p.d;
  rep.assume_trivial_monodromy = opts.assume_trivial_monodromy;
  rep.rho = opts.rho_override ? *opts.rho_override : p.rho;
  rep.rho_explicit = opts.rho_override.has_value() || p.rho_explicit;
  if (rep.rho < 0) throw input_error("rho must be non-negative");
  if (p.n == 2)
    rep.warnings.push_back(
        "n = 2: the middle-degree truncation acts on 3-dimensional links; the rank "
        "formulas are applied as in higher dimension, but interpret them with care");

  for (const auto& s : p.singularities) {
    ResolvedSingularity r = resolve_singularity(s, p.n, p.polynomial, opts);
    detail::trace_line(opts, "[resolve] " + r.label + ": mu = " + std::to_string(r.mu) +
                                 " via " + monodromy_source_name(r.mu_source) +
                                 ", rank(T-1) = " + std::to_string(r.rank_T_minus_1) +
                                 " via " + monodromy_source_name(r.rank_source) +
                                 (r.count > 1 ? " (x" + std::to_string(r.count) + ")" : ""));
    rep.mu_total += r.mu * r.count;
    rep.rank_T_minus_1_total += r.rank_T_minus_1 * r.count;
    rep.point_count += r.count;
    rep.singularities.push_back(std::move(r));
  }
  rep.monodromy_trivial = rep.rank_T_minus_1_total == 0;

  rep.smooth = smooth_hypersurface_betti(p.n, p.d);
  detail::trace_line(opts, "[formula] smooth deformation: chi-pinned middle rank b_" +
                               std::to_string(p.n) + " = " + std::to_string(rep.smooth[p.n]));

  LinkProfile lp;
  lp.n = p.n;
  for (const auto& r : rep.singularities) {
    LinkProfile::Entry e;
    e.count = r.count;
    if (p.n >= 2) {
      e.components = 1;
      e.middle = r.mu - r.rank_T_minus_1;
    } else {
      e.components = *r.branches;
      e.middle = *r.branches;
    }
    lp.entries.push_back(e);
  }
  rep.link_components = lp.total_components();
  rep.link_middle = lp.total_middle();
  rep.truncated_link_euler = truncated_link_euler(lp);

  const long long mu = rep.mu_total;
  const long long rk = rep.rank_T_minus_1_total;
  if (rep.singularities.empty()) {
    rep.hi = rep.smooth;  // nothing to cone off: the space is its own deformation
    detail::trace_line(opts, "[formula] no singularities: b(IV) = b(V_s)");
  } else if (p.n >= 2) {
    const int n = p.n;
    rep.hi = rep.smooth;
    rep.hi[2 * n] = 0;
    rep.hi[1] = rep.smooth[1] + rep.link_components - 1;
    rep.hi[2 * n - 1] = rep.hi[1];
    const long long middle_a = rep.smooth[n] - rk;
    const long long middle_b = rep.smooth[n] + rep.link_middle - mu;
    if (middle_a != middle_b)
      throw compute_error("internal inconsistency between the two middle-rank expressions");
    if (middle_a < 0)
      throw compute_error("total rank(T-1) exceeds the middle Betti number of the "
                          "smooth deformation");
    rep.hi[n] = middle_a;
    detail::trace_line(opts, "[formula] b_1(IV) = b_1(V_s) + b_0(L) - 1 = " +
                                 std::to_string(rep.hi[1]) + " = b_" +
                                 std::to_string(2 * n - 1) + "(IV)");
    detail::trace_line(opts, "[formula] b_" + std::to_string(n) + "(IV) = b_" +
                                 std::to_string(n) + "(V_s) - rk(T-1) = " +
                                 std::to_string(rep.smooth[n]) + " - " + std::to_string(rk) +
                                 " = " + std::to_string(middle_a));
  } else {
    const long long middle_a =
        rep.smooth[1] + rep.link_middle - mu + rep.point_count - 2;
    const long long middle_b = rep.smooth[1] - rk + 2 * (rep.point_count - 1);
    if (middle_a != middle_b)
      throw compute_error("internal inconsistency between the two curve expressions");
    if (middle_a < 0)
      throw compute_error("profile is inconsistent: negative curve middle rank");
    rep.hi = BettiVector{1, middle_a, 0};
    detail::trace_line(opts, "[formula] b_1(IV) = b_1(V_s) - rk(T-1) + 2(r-1) = " +
                                 std::to_string(rep.smooth[1]) + " - " + std::to_string(rk) +
                                 " + " + std::to_string(2 * (rep.point_count - 1)) + " = " +
                                 std::to_string(middle_a));
  }

  if (p.n >= 2) {
    rep.singular =
        singular_fiber_betti(rep.smooth, mu, rk, rep.rho, p.n);
    detail::trace_line(opts, "[formula] b_" + std::to_string(p.n) + "(V) = b_" +
                                 std::to_string(p.n) + "(V_s) - rho - rk(T-1) = " +
                                 std::to_string((*rep.singular)[p.n]));
  }

  rep.verdict.per_degree.resize(rep.smooth.size());
  for (std::size_t i = 0; i < rep.smooth.size(); ++i)
    rep.verdict.per_degree[i] = rep.hi[i] == rep.smooth[i];
  rep.verdict.middle = rep.verdict.per_degree[p.n];
  if (rep.singularities.empty())
    rep.verdict.global = true;
  else if (p.n >= 2)
    rep.verdict.global = rk == 0;
  else
    rep.verdict.global = rk == 2 * (rep.point_count - 1);

  if (p.n == 1 && rep.point_count > 1) {
    rep.bounds_skipped_reason =
        "middle bounds are only sharp for curves with a single singular point";
  } else {
    MiddleBounds mb;
    mb.upper = rep.smooth[p.n];
    if (p.ih_ranks)
      mb.components["intersection_homology"] = (*p.ih_ranks)[p.n];
    else
      mb.skipped.push_back("intersection_homology (ih_ranks not supplied)");
    const bool rho_known = rep.rho_explicit || rep.singularities.empty();
    if (p.n >= 2 && rho_known) {
      const long long bnv = (*rep.singular)[p.n];
      mb.components["exterior"] = bnv;                // rank H_n(M)
      mb.components["exterior_rel_boundary"] = bnv;   // rank H_n(M, dM), dual to it
    } else if (p.n >= 2) {
      mb.skipped.push_back("exterior (needs explicit rho)");
      mb.skipped.push_back("exterior_rel_boundary (needs explicit rho)");
    }
    mb.lower = 0;
    for (const auto& [name, v] : mb.components) mb.lower = std::max(mb.lower, v);
    if (mb.lower > rep.hi[p.n] || rep.hi[p.n] > mb.upper)
      throw compute_error("middle-rank bounds are violated; the supplied profile data "
                          "are inconsistent");
    mb.lower_attained = mb.lower == rep.hi[p.n];
    mb.upper_attained = mb.upper == rep.hi[p.n];
    rep.bounds = std::move(mb);
  }

  if (!p.ih_ranks) {
    rep.euler_skipped_reason = "ih_ranks not supplied";
  } else if (rep.singularities.empty()) {
    rep.euler_skipped_reason = "no singularities to cone off";
  } else {
    EulerIdentity e;
    e.lhs = (euler_characteristic(rep.hi) - 1) - euler_characteristic(*p.ih_ranks);
    e.rhs = -2 * rep.truncated_link_euler;
    e.holds = e.lhs == e.rhs;
    rep.euler = e;
    detail::trace_line(opts, "[formula] euler identity: lhs = " + std::to_string(e.lhs) +
                                 ", rhs = -2 * " +
                                 std::to_string(rep.truncated_link_euler) + " = " +
                                 std::to_string(e.rhs));
  }
  return rep;
}

inline BettiVector hi_betti(const HypersurfaceProfile& p, const AnalyzeOptions& o = {}) {
  return analyze(p, o).hi;
}

inline StabilityVerdict stability_verdict(const HypersurfaceProfile& p,
                                          const AnalyzeOptions& o = {}) {
  return analyze(p, o).verdict;
}

inline MiddleBounds middle_bounds(const HypersurfaceProfile& p, const AnalyzeOptions& o = {}) {
  const StabilityReport r = analyze(p, o);
  if (!r.bounds) throw compute_error(*r.bounds_skipped_reason);
  return *r.bounds;
}

inline EulerIdentity euler_identity(const HypersurfaceProfile& p,
                                    const AnalyzeOptions& o = {}) {
  const StabilityReport r = analyze(p, o);
  if (!r.euler) throw input_error("euler identity needs ih_ranks and at least one singularity");
  return *r.euler;
}

}  // namespace hicalc

#endif
