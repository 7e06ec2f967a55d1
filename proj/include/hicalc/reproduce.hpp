#ifndef HICALC_REPRODUCE_HPP
#define HICALC_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hicalc/json_io.hpp"

namespace hicalc {

/*
 * Bundled worked examples with frozen expected values.  Each case carries its
 * input profile verbatim (the same text ships under data/profiles/) and the
 * cells a run must reproduce: Betti vectors, totals, verdicts, and the Euler
 * identity.  The reproduce command recomputes everything from the profile and
 * diffs cell by cell.
 */

struct ReproduceCase {
  std::string id;
  std::string description;
  std::string profile_json;
  long long mu_total = 0;
  long long rank_T_minus_1_total = 0;
  BettiVector hi;
  BettiVector smooth;
  std::optional<BettiVector> singular;
  bool middle_stable = false;
  bool deformation_stable = false;
  std::optional<long long> euler_lhs;
  std::optional<long long> euler_rhs;
};

inline const std::vector<ReproduceCase>& reproduce_cases() {
  static const std::vector<ReproduceCase> cases = [] {
    std::vector<ReproduceCase> v;

    {
      ReproduceCase c;
      c.id = "nodal-cubic";
      c.description = "plane cubic with one node; deformation-stable curve";
      c.profile_json = R"({
  "n": 1,
  "d": 3,
  "polynomial": "x^3 - y^2*z + x^2*z",
  "ih_ranks": [1, 0, 1],
  "singularities": [
    {"label": "node", "point": ["0", "0", "1"]}
  ]
})";
      c.mu_total = 1;
      c.rank_T_minus_1_total = 0;
      c.hi = {1, 2, 0};
      c.smooth = {1, 2, 1};
      c.middle_stable = true;
      c.deformation_stable = true;
      c.euler_lhs = -4;
      c.euler_rhs = -4;
      v.push_back(std::move(c));
    }

    {
      ReproduceCase c;
      c.id = "split-conic";
      c.description = "conic degenerated into two lines through a node";
      c.profile_json = R"({
  "n": 1,
  "d": 2,
  "polynomial": "0*x + y*z",
  "ih_ranks": [2, 0, 2],
  "singularities": [
    {"label": "crossing", "point": ["1", "0", "0"]}
  ]
})";
      c.mu_total = 1;
      c.rank_T_minus_1_total = 0;
      c.hi = {1, 0, 0};
      c.smooth = {1, 0, 1};
      c.middle_stable = true;
      c.deformation_stable = true;
      c.euler_lhs = -4;
      c.euler_rhs = -4;
      v.push_back(std::move(c));
    }

    {
      ReproduceCase c;
      c.id = "kummer-quartic";
      c.description = "quartic surface with sixteen nodes";
      c.profile_json = R"({
  "n": 2,
  "d": 4,
  "rho": 0,
  "ih_ranks": [1, 0, 6, 0, 1],
  "singularities": [
    {"label": "node", "germ": "x^2 + y^2 + z^2", "count": 16}
  ]
})";
      c.mu_total = 16;
      c.rank_T_minus_1_total = 16;
      c.hi = {1, 15, 6, 15, 0};
      c.smooth = {1, 0, 22, 0, 1};
      c.singular = BettiVector{1, 0, 6, 0, 1};
      c.middle_stable = false;
      c.deformation_stable = false;
      c.euler_lhs = -32;
      c.euler_rhs = -32;
      v.push_back(std::move(c));
    }

    {
      ReproduceCase c;
      c.id = "schoen-quintic";
      c.description = "quintic threefold with 125 nodes, one resolved from the equation";
      c.profile_json = R"({
  "n": 3,
  "d": 5,
  "polynomial": "x0^5 + x1^5 + x2^5 + x3^5 + x4^5 - 5*x0*x1*x2*x3*x4",
  "rho": 101,
  "ih_ranks": [1, 0, 25, 2, 25, 0, 1],
  "singularities": [
    {"label": "diagonal node", "point": ["1", "1", "1", "1", "1"]},
    {"label": "orbit nodes", "germ": "a^2 + b^2 + c^2 + d^2", "count": 124}
  ]
})";
      c.mu_total = 125;
      c.rank_T_minus_1_total = 0;
      c.hi = {1, 124, 1, 204, 1, 124, 0};
      c.smooth = {1, 0, 1, 204, 1, 0, 1};
      c.singular = BettiVector{1, 0, 1, 103, 25, 0, 1};
      c.middle_stable = true;
      c.deformation_stable = true;
      c.euler_lhs = -500;
      c.euler_rhs = -500;
      v.push_back(std::move(c));
    }

    {
      ReproduceCase c;
      c.id = "nodal-quintic-16";
      c.description = "quintic threefold with sixteen nodes and defect one";
      c.profile_json = R"({
  "n": 3,
  "d": 5,
  "rho": 15,
  "ih_ranks": [1, 0, 2, 174, 2, 0, 1],
  "singularities": [
    {"label": "node", "germ": "x^2 + y^2 + z^2 + w^2", "count": 16}
  ]
})";
      c.mu_total = 16;
      c.rank_T_minus_1_total = 0;
      c.hi = {1, 15, 1, 204, 1, 15, 0};
      c.smooth = {1, 0, 1, 204, 1, 0, 1};
      c.singular = BettiVector{1, 0, 1, 189, 2, 0, 1};
      c.middle_stable = true;
      c.deformation_stable = true;
      c.euler_lhs = -64;
      c.euler_rhs = -64;
      v.push_back(std::move(c));
    }

    return v;
  }();
  return cases;
}

inline const ReproduceCase* find_reproduce_case(const std::string& id) {
  for (const auto& c : reproduce_cases())
    if (c.id == id) return &c;
  return nullptr;
}

struct CellDiff {
  std::string cell;
  std::string expected;
  std::string actual;
};

namespace detail {

inline std::string cell_bool(bool b) { return b ? "true" : "false"; }

template <typename T>
inline void diff_cell(std::vector<CellDiff>& out, const std::string& cell, const T& expected,
                      const T& actual, std::string (*render)(const T&)) {
  if (!(expected == actual)) out.push_back({cell, render(expected), render(actual)});
}

}  // namespace detail

// Recompute a bundled case from its profile and list every cell that fails
// to match the frozen expectations.  Empty result means full reproduction.
inline std::vector<CellDiff> reproduce_diff(const ReproduceCase& c) {
  std::vector<CellDiff> out;
  const StabilityReport r = analyze(parse_profile_text(c.profile_json));

  auto render_ll = +[](const long long& v) { return std::to_string(v); };
  auto render_bv = +[](const BettiVector& v) { return detail::betti_text(v); };
  auto render_b = +[](const bool& v) { return detail::cell_bool(v); };

  detail::diff_cell(out, "mu_total", c.mu_total, r.mu_total, render_ll);
  detail::diff_cell(out, "rank_T_minus_1_total", c.rank_T_minus_1_total,
                    r.rank_T_minus_1_total, render_ll);
  detail::diff_cell(out, "betti.intersection_space", c.hi, r.hi, render_bv);
  detail::diff_cell(out, "betti.smooth_deformation", c.smooth, r.smooth, render_bv);
  if (c.singular) {
    if (!r.singular)
      out.push_back({"betti.singular_fiber", detail::betti_text(*c.singular), "absent"});
    else
      detail::diff_cell(out, "betti.singular_fiber", *c.singular, *r.singular, render_bv);
  }
  detail::diff_cell(out, "stability.middle", c.middle_stable, r.verdict.middle, render_b);
  detail::diff_cell(out, "stability.deformation_stable", c.deformation_stable,
                    r.verdict.global, render_b);
  if (c.euler_lhs) {
    if (!r.euler) {
      out.push_back({"euler_identity", "present", "absent"});
    } else {
      detail::diff_cell(out, "euler_identity.lhs", *c.euler_lhs, r.euler->lhs, render_ll);
      detail::diff_cell(out, "euler_identity.rhs", *c.euler_rhs, r.euler->rhs, render_ll);
      detail::diff_cell(out, "euler_identity.holds", true, r.euler->holds, render_b);
    }
  }
  return out;
}

}  // namespace hicalc

#endif
