#ifndef HICALC_JSON_IO_HPP
#define HICALC_JSON_IO_HPP

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hicalc/chain.hpp"
#include "hicalc/parser.hpp"
#include "hicalc/stability.hpp"

namespace hicalc {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;  // keeps report keys in emission order

namespace detail {

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("invalid JSON in " + what + ": " + e.what());
  }
}

inline void require_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw input_error(what + " must be a JSON object");
}

inline void reject_unknown_keys(const json& j, const std::string& what,
                                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) throw input_error("unknown key '" + it.key() + "' in " + what);
  }
}

inline long long get_integer(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error(what + " must be a JSON integer");
  return j.get<long long>();
}

inline std::string get_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw input_error(what + " must be a JSON string");
  return j.get<std::string>();
}

inline const json& get_member(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(what + " is missing required key '" + key + "'");
  return *it;
}

inline std::vector<long long> get_integer_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be a JSON array");
  std::vector<long long> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_integer(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<Rational> get_rational_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be a JSON array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(
        rational_from_string(get_string(j[i], what + "[" + std::to_string(i) + "]")));
  return out;
}

// Matrices travel as rows of rational strings; the expected shape comes from
// the declared degree ranks, so empty matrices stay unambiguous.
inline QMatrix get_matrix(const json& j, int rows, int cols, const std::string& what) {
  if (!j.is_array()) throw input_error(what + " must be a JSON array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw input_error(what + " must have " + std::to_string(rows) + " rows, got " +
                      std::to_string(j.size()));
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw input_error(what + " row " + std::to_string(r) + " must have " +
                        std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rational_from_string(
          get_string(row[c], what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  return m;
}

}  // namespace detail

inline SingularityData parse_singularity(const json& j, std::size_t index) {
  const std::string what = "singularities[" + std::to_string(index) + "]";
  detail::require_object(j, what);
  detail::reject_unknown_keys(j, what,
                              {"label", "germ", "point", "weights", "weighted_degree", "mu",
                               "rank_T_minus_1", "branches", "count"});
  SingularityData s;
  s.label = j.contains("label") ? detail::get_string(j["label"], what + ".label")
                                : "singularity " + std::to_string(index);
  if (j.contains("germ"))
    s.germ = parse_polynomial(detail::get_string(j["germ"], what + ".germ"));
  if (j.contains("point"))
    s.point = ProjectivePoint(detail::get_rational_array(j["point"], what + ".point"));
  if (j.contains("weights"))
    s.weights = detail::get_integer_array(j["weights"], what + ".weights");
  if (j.contains("weighted_degree"))
    s.weighted_degree = detail::get_integer(j["weighted_degree"], what + ".weighted_degree");
  if (j.contains("mu")) s.mu = detail::get_integer(j["mu"], what + ".mu");
  if (j.contains("rank_T_minus_1"))
    s.rank_T_minus_1 = detail::get_integer(j["rank_T_minus_1"], what + ".rank_T_minus_1");
  if (j.contains("branches"))
    s.branches = detail::get_integer(j["branches"], what + ".branches");
  if (j.contains("count")) s.count = detail::get_integer(j["count"], what + ".count");
  return s;
}

inline HypersurfaceProfile parse_profile(const json& j) {
  detail::require_object(j, "profile");
  detail::reject_unknown_keys(j, "profile",
                              {"n", "d", "polynomial", "rho", "ih_ranks", "singularities"});
  HypersurfaceProfile p;
  const long long n = detail::get_integer(detail::get_member(j, "n", "profile"), "n");
  if (n < 1 || n > 64) throw input_error("n must lie between 1 and 64");
  p.n = static_cast<int>(n);
  p.d = detail::get_integer(detail::get_member(j, "d", "profile"), "d");
  if (j.contains("polynomial"))
    p.polynomial = parse_polynomial(detail::get_string(j["polynomial"], "polynomial"));
  if (j.contains("rho")) {
    p.rho = detail::get_integer(j["rho"], "rho");
    p.rho_explicit = true;
  }
  if (j.contains("ih_ranks"))
    p.ih_ranks = detail::get_integer_array(j["ih_ranks"], "ih_ranks");
  if (j.contains("singularities")) {
    const json& arr = j["singularities"];
    if (!arr.is_array()) throw input_error("singularities must be a JSON array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      p.singularities.push_back(parse_singularity(arr[i], i));
  }
  return p;
}

inline HypersurfaceProfile parse_profile_text(const std::string& text) {
  return parse_profile(detail::parse_json_text(text, "profile"));
}

// One degreewise-filtered pair straight from disk; the cutoff is optional in
// the file and may be overridden on the command line.
struct ChainPairFile {
  FiniteChainComplex link;
  FiniteChainComplex exterior;
  std::vector<QMatrix> inclusion;
  int manifold_dim = 1;
  std::optional<int> cutoff;
};

namespace detail {

inline FiniteChainComplex parse_complex(const json& j, const std::string& what) {
  require_object(j, what);
  reject_unknown_keys(j, what, {"dims", "boundaries"});
  const std::vector<long long> raw =
      get_integer_array(get_member(j, "dims", what), what + ".dims");
  std::vector<int> dims;
  for (long long v : raw) {
    if (v < 0 || v > 4096) throw input_error(what + ".dims entries must lie in [0, 4096]");
    dims.push_back(static_cast<int>(v));
  }
  const json& bnd = get_member(j, "boundaries", what);
  if (!bnd.is_array()) throw input_error(what + ".boundaries must be a JSON array");
  const std::size_t expected = dims.empty() ? 0 : dims.size() - 1;
  if (bnd.size() != expected)
    throw input_error(what + ".boundaries must have one matrix per positive degree (" +
                      std::to_string(expected) + ")");
  std::vector<QMatrix> mats;
  for (std::size_t k = 0; k < bnd.size(); ++k)
    mats.push_back(get_matrix(bnd[k], dims[k], dims[k + 1],
                              what + ".boundaries[" + std::to_string(k) + "]"));
  return FiniteChainComplex(std::move(dims), std::move(mats));
}

}  // namespace detail

inline ChainPairFile parse_chain_pair(const json& j) {
  detail::require_object(j, "chain pair");
  detail::reject_unknown_keys(j, "chain pair",
                              {"dim", "cutoff", "link", "exterior", "inclusion"});
  ChainPairFile f;
  const long long dim = detail::get_integer(detail::get_member(j, "dim", "chain pair"), "dim");
  if (dim < 1 || dim > 64) throw input_error("dim must lie between 1 and 64");
  f.manifold_dim = static_cast<int>(dim);
  if (j.contains("cutoff")) {
    const long long k = detail::get_integer(j["cutoff"], "cutoff");
    if (k < 0 || k > dim) throw input_error("cutoff must lie between 0 and dim");
    f.cutoff = static_cast<int>(k);
  }
  f.link = detail::parse_complex(detail::get_member(j, "link", "chain pair"), "link");
  f.exterior =
      detail::parse_complex(detail::get_member(j, "exterior", "chain pair"), "exterior");
  const json& inc = detail::get_member(j, "inclusion", "chain pair");
  if (!inc.is_array()) throw input_error("inclusion must be a JSON array of matrices");
  if (inc.size() != f.link.dims().size())
    throw input_error("inclusion must have one matrix per link degree");
  for (std::size_t k = 0; k < inc.size(); ++k)
    f.inclusion.push_back(detail::get_matrix(inc[k], f.exterior.dim(static_cast<int>(k)),
                                             f.link.dim(static_cast<int>(k)),
                                             "inclusion[" + std::to_string(k) + "]"));
  return f;
}

inline ChainPairFile parse_chain_pair_text(const std::string& text) {
  return parse_chain_pair(detail::parse_json_text(text, "chain pair"));
}

inline PairComplex make_pair_complex(const ChainPairFile& f,
                                     std::optional<int> cutoff_override = std::nullopt) {
  int k;
  if (cutoff_override)
    k = *cutoff_override;
  else if (f.cutoff)
    k = *f.cutoff;
  else
    k = f.manifold_dim / 2;  // middle perversity on an even-dimensional pair
  return PairComplex(f.link, f.exterior, f.inclusion, f.manifold_dim, k);
}

namespace detail {

inline ojson betti_json(const BettiVector& v) {
  ojson a = ojson::array();
  for (long long x : v) a.push_back(x);
  return a;
}

inline ojson bool_vector_json(const std::vector<bool>& v) {
  ojson a = ojson::array();
  for (bool x : v) a.push_back(x);
  return a;
}

}  // namespace detail

inline ojson report_to_json(const StabilityReport& r) {
  ojson j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["mu_total"] = r.mu_total;
  j["rank_T_minus_1_total"] = r.rank_T_minus_1_total;
  j["monodromy_trivial"] = r.monodromy_trivial;
  j["singular_point_count"] = r.point_count;

  ojson betti;
  betti["smooth_deformation"] = detail::betti_json(r.smooth);
  betti["intersection_space"] = detail::betti_json(r.hi);
  betti["singular_fiber"] = r.singular ? detail::betti_json(*r.singular) : ojson(nullptr);
  j["betti"] = std::move(betti);

  ojson link;
  link["components"] = r.link_components;
  link["middle"] = r.link_middle;
  link["truncated_euler"] = r.truncated_link_euler;
  j["link"] = std::move(link);

  ojson st;
  st["per_degree"] = detail::bool_vector_json(r.verdict.per_degree);
  st["middle"] = r.verdict.middle;
  st["deformation_stable"] = r.verdict.global;
  j["stability"] = std::move(st);

  if (r.bounds) {
    ojson b;
    b["lower"] = r.bounds->lower;
    b["upper"] = r.bounds->upper;
    ojson comp;
    for (const auto& [name, v] : r.bounds->components) comp[name] = v;
    b["components"] = std::move(comp);
    ojson sk = ojson::array();
    for (const auto& s : r.bounds->skipped) sk.push_back(s);
    b["skipped"] = std::move(sk);
    b["lower_attained"] = r.bounds->lower_attained;
    b["upper_attained"] = r.bounds->upper_attained;
    j["middle_bounds"] = std::move(b);
  } else {
    j["middle_bounds"] = nullptr;
    j["middle_bounds_skipped_reason"] = *r.bounds_skipped_reason;
  }

  if (r.euler) {
    ojson e;
    e["lhs"] = r.euler->lhs;
    e["rhs"] = r.euler->rhs;
    e["holds"] = r.euler->holds;
    j["euler_identity"] = std::move(e);
  } else {
    j["euler_identity"] = nullptr;
    j["euler_identity_skipped_reason"] = *r.euler_skipped_reason;
  }

  ojson rho;
  rho["value"] = r.rho;
  rho["explicit"] = r.rho_explicit;
  j["rho"] = std::move(rho);

  ojson sings = ojson::array();
  for (const auto& s : r.singularities) {
    ojson e;
    e["label"] = s.label;
    e["count"] = s.count;
    e["mu"] = s.mu;
    e["mu_source"] = monodromy_source_name(s.mu_source);
    e["rank_T_minus_1"] = s.rank_T_minus_1;
    e["rank_source"] = monodromy_source_name(s.rank_source);
    if (s.branches) e["branches"] = *s.branches;
    e["link_betti"] = detail::betti_json(s.link);
    sings.push_back(std::move(e));
  }
  j["singularities"] = std::move(sings);

  ojson warn = ojson::array();
  for (const auto& w : r.warnings) warn.push_back(w);
  j["warnings"] = std::move(warn);
  ojson assume = ojson::array();
  if (r.assume_trivial_monodromy) assume.push_back("trivial monodromy assumed for all singularities");
  j["assumptions"] = std::move(assume);
  return j;
}

namespace detail {

inline std::string betti_text(const BettiVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace detail

inline std::string report_to_text(const StabilityReport& r) {
  std::ostringstream os;
  os << "hypersurface: n = " << r.n << ", d = " << r.d << ", " << r.point_count
     << " singular point" << (r.point_count == 1 ? "" : "s") << "\n";
  for (const auto& s : r.singularities) {
    os << "  " << s.label << ": mu = " << s.mu << " [" << monodromy_source_name(s.mu_source)
       << "], rank(T-1) = " << s.rank_T_minus_1 << " ["
       << monodromy_source_name(s.rank_source) << "]";
    if (s.branches) os << ", branches = " << *s.branches;
    if (s.count > 1) os << ", count = " << s.count;
    os << "\n";
  }
  os << "totals: mu = " << r.mu_total << ", rank(T-1) = " << r.rank_T_minus_1_total
     << ", monodromy " << (r.monodromy_trivial ? "trivial" : "nontrivial") << "\n";
  os << "betti smooth deformation: " << detail::betti_text(r.smooth) << "\n";
  os << "betti intersection space: " << detail::betti_text(r.hi) << "\n";
  if (r.singular)
    os << "betti singular fiber:     " << detail::betti_text(*r.singular) << " (rho = "
       << r.rho << (r.rho_explicit ? "" : ", defaulted") << ")\n";
  os << "stability: middle degree " << (r.verdict.middle ? "stable" : "unstable")
     << ", deformation " << (r.verdict.global ? "stable" : "unstable") << "\n";
  if (r.bounds) {
    os << "middle bounds: " << r.bounds->lower << " <= " << r.hi[r.n]
       << " <= " << r.bounds->upper;
    if (r.bounds->lower_attained) os << ", lower attained";
    if (r.bounds->upper_attained) os << ", upper attained";
    os << "\n";
    if (!r.bounds->skipped.empty()) {
      os << "  unavailable lower bounds:";
      for (const auto& s : r.bounds->skipped) os << " " << s << ";";
      os << "\n";
    }
  } else {
    os << "middle bounds skipped: " << *r.bounds_skipped_reason << "\n";
  }
  if (r.euler)
    os << "euler identity: lhs = " << r.euler->lhs << ", rhs = " << r.euler->rhs << ", "
       << (r.euler->holds ? "holds" : "FAILS") << "\n";
  else
    os << "euler identity skipped: " << *r.euler_skipped_reason << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

struct ChainReport {
  int manifold_dim = 1;
  int cutoff = 0;
  BettiVector link_homology;
  BettiVector exterior_homology;
  BettiVector relative_homology;
  BettiVector hi;           // closed formulas, degree 0 re-augmented
  BettiVector hi_cone;      // truncate-then-cone route, degree 0 re-augmented
  bool routes_agree = false;
  std::optional<DualityCheck> duality;
};

inline ChainReport run_chain(const PairComplex& p, bool check_duality) {
  ChainReport r;
  r.manifold_dim = p.manifold_dim;
  r.cutoff = p.cutoff;
  r.link_homology = homology_ranks(p.link);
  r.exterior_homology = homology_ranks(p.exterior);
  r.relative_homology = relative_homology_ranks(p);
  r.hi = hi_from_pair(p);
  r.hi_cone = hi_via_cone(p);
  r.routes_agree = r.hi == r.hi_cone;
  if (!r.routes_agree)
    throw compute_error("formula route and cone route disagree on the same pair");
  if (check_duality) r.duality = duality_rank_check(p);
  return r;
}

inline ojson chain_report_to_json(const ChainReport& r) {
  ojson j;
  j["manifold_dim"] = r.manifold_dim;
  j["cutoff"] = r.cutoff;
  ojson h;
  h["link"] = detail::betti_json(r.link_homology);
  h["exterior"] = detail::betti_json(r.exterior_homology);
  h["relative"] = detail::betti_json(r.relative_homology);
  j["homology"] = std::move(h);
  ojson hi;
  hi["ranks"] = detail::betti_json(r.hi);
  hi["cone_route"] = detail::betti_json(r.hi_cone);
  hi["routes_agree"] = r.routes_agree;
  j["intersection_space"] = std::move(hi);
  if (r.duality) {
    ojson d;
    d["cutoff"] = r.duality->cutoff;
    d["complementary_cutoff"] = r.duality->complementary_cutoff;
    d["reduced"] = detail::betti_json(r.duality->reduced);
    d["reduced_complementary"] = detail::betti_json(r.duality->reduced_complementary);
    d["holds"] = r.duality->holds;
    j["duality"] = std::move(d);
  } else {
    j["duality"] = nullptr;
  }
  return j;
}

inline std::string chain_report_to_text(const ChainReport& r) {
  std::ostringstream os;
  os << "pair: manifold dim = " << r.manifold_dim << ", cutoff = " << r.cutoff << "\n";
  os << "homology link:     " << detail::betti_text(r.link_homology) << "\n";
  os << "homology exterior: " << detail::betti_text(r.exterior_homology) << "\n";
  os << "homology relative: " << detail::betti_text(r.relative_homology) << "\n";
  os << "intersection space: " << detail::betti_text(r.hi) << " (cone route "
     << (r.routes_agree ? "agrees" : "DISAGREES") << ")\n";
  if (r.duality) {
    os << "duality at cutoffs " << r.duality->cutoff << "/" << r.duality->complementary_cutoff
       << ": reduced " << detail::betti_text(r.duality->reduced) << " vs "
       << detail::betti_text(r.duality->reduced_complementary) << ", "
       << (r.duality->holds ? "holds" : "FAILS") << "\n";
  }
  return os.str();
}

// Machine-readable error envelope printed on stderr by the command line tool.
inline ojson error_json(const std::string& kind, const std::string& message) {
  ojson j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace hicalc

#endif
