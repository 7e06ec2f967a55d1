#ifndef HICALC_MONODROMY_HPP
#define HICALC_MONODROMY_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hicalc/rational.hpp"

namespace hicalc {

/*
 * Monodromy eigenvalue bookkeeping for weighted-homogeneous germs.
 *
 * A divisor is an integer combination of symbols L_m, where L_m stands for
 * the full set of m-th roots of unity (each once).  Products follow
 * L_a * L_b = gcd(a,b) * L_lcm(a,b).  The characteristic divisor of the
 * middle-homology monodromy of a germ with weights w_i and degree d is
 *
 *     prod_i ( (1/v_i) L_{u_i}  -  L_1 ),    d/w_i = u_i/v_i  in lowest terms,
 *
 * expanded in that ring.  Rational coefficients appear transiently; the final
 * divisor is integral with non-negative multiplicity on every primitive
 * class, and its total eigenvalue count equals mu = prod_i (d/w_i - 1).
 */

struct MonodromyDivisor {
  std::map<long long, long long> entries;  // m -> coefficient of L_m

  // Eigenvalues counted with multiplicity: each L_m contributes m of them.
  long long total_eigenvalues() const {
    long long t = 0;
    for (const auto& [m, c] : entries) t += c * m;
    return t;
  }

  // Multiplicity of any primitive j-th root of unity: sum of coefficients of
  // the L_m with j | m.  (Galois-invariant, so one number per class.)
  long long primitive_class_multiplicity(long long j) const {
    long long t = 0;
    for (const auto& [m, c] : entries)
      if (m % j == 0) t += c;
    return t;
  }
};

// Multiplicity of the eigenvalue 1, i.e. the coefficient sum.
inline long long eigenvalue_one_multiplicity(const MonodromyDivisor& d) {
  return d.primitive_class_multiplicity(1);
}

namespace detail {

using RationalDivisor = std::map<long long, Rational>;

inline RationalDivisor divisor_product(const RationalDivisor& a, const RationalDivisor& b) {
  RationalDivisor out;
  for (const auto& [m, cm] : a)
    for (const auto& [k, ck] : b) {
      const long long g = std::gcd(m, k);
      const long long l = m / g * k;
      const Rational coeff = cm * ck * g;
      auto [it, inserted] = out.emplace(l, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

}  // namespace detail

// Characteristic divisor of the monodromy for a weighted-homogeneous germ
// with the given positive weights and weighted degree d (w_i <= d).  Checks
// that the expansion is integral, has non-negative multiplicity on every
// primitive class, and counts exactly mu = prod(d/w_i - 1) eigenvalues.
inline MonodromyDivisor milnor_orlik(const std::vector<long long>& weights, long long d) {
  if (weights.empty()) throw input_error("weight list is empty");
  if (d <= 0) throw input_error("weighted degree must be positive");
  Rational mu_expected = 1;
  for (long long w : weights) {
    if (w <= 0) throw input_error("weights must be positive");
    if (w > d) throw input_error("weight exceeds the weighted degree");
    mu_expected *= Rational(d - w, w);
  }
  if (rational_den(mu_expected) != 1)
    throw compute_error("weights do not present an isolated weighted-homogeneous germ: "
                        "mu product is not an integer");

  detail::RationalDivisor div{{1, Rational(1)}};
  for (long long w : weights) {
    const long long g = std::gcd(d, w);
    const long long u = d / g, v = w / g;
    detail::RationalDivisor factor;
    factor[u] += Rational(1, v);
    factor[1] -= 1;
    if (factor[1] == 0) factor.erase(1);
    if (auto it = factor.find(u); it != factor.end() && it->second == 0) factor.erase(u);
    div = detail::divisor_product(div, factor);
  }

  MonodromyDivisor out;
  for (const auto& [m, c] : div) {
    if (rational_den(c) != 1)
      throw compute_error("monodromy divisor expansion is not integral");
    out.entries[m] = to_int64(rational_num(c), "divisor coefficient");
  }
  for (const auto& [m, c] : out.entries)
    for (long long j = 1; j <= m; ++j)
      if (m % j == 0 && out.primitive_class_multiplicity(j) < 0)
        throw compute_error("monodromy divisor has a negative eigenvalue multiplicity");
  const long long mu = to_int64(rational_num(mu_expected), "mu");
  if (out.total_eigenvalues() != mu)
    throw compute_error("monodromy divisor eigenvalue count disagrees with the mu product");
  return out;
}

// rank(T - 1) on the middle homology of the local fiber, valid because the
// monodromy of a weighted-homogeneous germ has finite order and is therefore
// semisimple: the rank is mu minus the multiplicity of eigenvalue 1.
inline long long rank_T_minus_1(long long mu, const MonodromyDivisor& divisor) {
  if (divisor.total_eigenvalues() != mu)
    throw compute_error("divisor eigenvalue count does not match mu");
  const long long ones = eigenvalue_one_multiplicity(divisor);
  return mu - ones;
}

enum class MonodromySource { Groebner, MilnorOrlik, NodeRule, User };

inline const char* monodromy_source_name(MonodromySource s) {
  switch (s) {
    case MonodromySource::Groebner: return "groebner";
    case MonodromySource::MilnorOrlik: return "milnor-orlik";
    case MonodromySource::NodeRule: return "node-rule";
    case MonodromySource::User: return "user";
  }
  return "?";
}

struct MonodromyReport {
  long long mu = 0;
  long long rank_T_minus_1 = 0;
  bool trivial = false;
  MonodromySource source = MonodromySource::User;
};

// A nondegenerate quadratic germ in k complex variables has mu = 1 and
// monodromy eigenvalue (-1)^k, so T is trivial exactly for even k.
inline MonodromyReport node_rule(int k) {
  if (k < 2) throw input_error("node rule needs at least 2 variables");
  MonodromyReport r;
  r.mu = 1;
  r.rank_T_minus_1 = k % 2 == 0 ? 0 : 1;
  r.trivial = k % 2 == 0;
  r.source = MonodromySource::NodeRule;
  return r;
}

}  // namespace hicalc

#endif
