#ifndef HICALC_STANDARD_BASIS_HPP
#define HICALC_STANDARD_BASIS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hicalc/polynomial.hpp"

namespace hicalc {

/*
 * Groebner / standard basis engine used for Milnor numbers.
 *
 * Two monomial orders are supported:
 *   DegRevLex     - global (1 is smallest), for honest Groebner bases;
 *   NegDegRevLex  - local (1 is largest), for standard bases of germs at the
 *                   origin, where leading monomials pick out lowest degree.
 *
 * Both share the revlex tie-break: among equal total degrees, the monomial
 * whose last differing exponent is larger is the smaller one.
 *
 * The local normal form is Mora's tangent-cone algorithm with ecart
 * selection; it may insert intermediate results into the reducer set, which
 * is what makes the loop terminate over a local order.
 */

enum class MonomialOrder { DegRevLex, NegDegRevLex };

// true when a < b
inline bool monomial_less(const Exponents& a, const Exponents& b, MonomialOrder ord) {
  const long long da = exponent_sum(a), db = exponent_sum(b);
  if (da != db) {
    if (ord == MonomialOrder::DegRevLex) return da < db;
    return da > db;  // local: lower degree is larger
  }
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

struct LeadingTerm {
  Exponents mono;
  Rational coeff;
};

inline LeadingTerm leading_term(const Polynomial& p, MonomialOrder ord) {
  if (p.is_zero()) throw compute_error("leading term of zero polynomial");
  const std::pair<const Exponents, Rational>* best = nullptr;
  for (const auto& t : p.terms())
    if (!best || monomial_less(best->first, t.first, ord)) best = &t;
  return LeadingTerm{best->first, best->second};
}

namespace detail {

struct Reducer {
  Polynomial p;
  Exponents lm;
  Rational lc;
  long long ecart;  // total degree minus leading-monomial degree, >= 0 locally
};

inline Reducer make_reducer(const Polynomial& p, MonomialOrder ord) {
  LeadingTerm lt = leading_term(p, ord);
  const long long e = p.total_degree() - exponent_sum(lt.mono);
  return Reducer{p, std::move(lt.mono), std::move(lt.coeff), e};
}

// h - (lc_h / r.lc) x^(lm_h - r.lm) * r.p, cancelling the leading term of h.
inline Polynomial reduce_once(const Polynomial& h, const LeadingTerm& lt, const Reducer& r) {
  return h - r.p.times_monomial(monomial_quotient(lt.mono, r.lm), lt.coeff / r.lc);
}

}  // namespace detail

// Full normal form for a global order: leading and tail terms both reduced.
// Reducer choice is the first basis element (in basis order) whose leading
// monomial divides the term under attack.
inline Polynomial normal_form_global(Polynomial h, const std::vector<Polynomial>& basis) {
  const MonomialOrder ord = MonomialOrder::DegRevLex;
  std::vector<detail::Reducer> reds;
  for (const auto& g : basis)
    if (!g.is_zero()) reds.push_back(detail::make_reducer(g, ord));
  Polynomial remainder(h.variables());
  while (!h.is_zero()) {
    const LeadingTerm lt = leading_term(h, ord);
    const detail::Reducer* hit = nullptr;
    for (const auto& r : reds)
      if (monomial_divides(r.lm, lt.mono)) {
        hit = &r;
        break;
      }
    if (hit) {
      h = detail::reduce_once(h, lt, *hit);
    } else {
      remainder.add_term(lt.mono, lt.coeff);
      h.add_term(lt.mono, -lt.coeff);
    }
  }
  return remainder;
}

// Mora weak normal form for the local order.  Only the leading term is
// attacked; when every available reducer has larger ecart than h, h itself
// joins the reducer set (that self-insertion is what terminates the loop).
// The result r satisfies u*f = sum a_i g_i + r for a unit u, with LM(r) not
// divisible by any basis leading monomial.  `cap` bounds the number of
// reduction steps (each step creates one intermediate polynomial).
inline Polynomial mora_normal_form(Polynomial h, const std::vector<Polynomial>& basis,
                                   MonomialOrder ord = MonomialOrder::NegDegRevLex,
                                   long long cap = 10000) {
  std::vector<detail::Reducer> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(detail::make_reducer(g, ord));
  long long steps = 0;
  while (!h.is_zero()) {
    const LeadingTerm lt = leading_term(h, ord);
    const long long ecart_h = h.total_degree() - exponent_sum(lt.mono);
    int best = -1;
    for (int i = 0; i < static_cast<int>(reducers.size()); ++i) {
      if (!monomial_divides(reducers[i].lm, lt.mono)) continue;
      if (best < 0 || reducers[i].ecart < reducers[best].ecart) best = i;
    }
    if (best < 0) break;
    if (++steps > cap)
      throw compute_error("local reduction exceeded the intermediate-polynomial cap (" +
                          std::to_string(cap) + ")");
    if (reducers[best].ecart > ecart_h)
      reducers.push_back(detail::Reducer{h, lt.mono, lt.coeff, ecart_h});
    h = detail::reduce_once(h, lt, reducers[best]);
  }
  return h;
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
  const LeadingTerm lf = leading_term(f, ord);
  const LeadingTerm lg = leading_term(g, ord);
  const Exponents l = monomial_lcm(lf.mono, lg.mono);
  return f.times_monomial(monomial_quotient(l, lf.mono), Rational(1) / lf.coeff) -
         g.times_monomial(monomial_quotient(l, lg.mono), Rational(1) / lg.coeff);
}

struct StandardBasis {
  std::vector<Polynomial> generators;  // monic, minimal leading monomials
  MonomialOrder order = MonomialOrder::DegRevLex;

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> lms;
    lms.reserve(generators.size());
    for (const auto& g : generators) lms.push_back(leading_term(g, order).mono);
    return lms;
  }
};

namespace detail {

struct SPair {
  int i, j;
  long long lcm_degree;
  long long index;  // creation order, tie-break of the normal strategy
  bool coprime;     // product criterion: lcm == product
};

inline void push_pairs(std::vector<SPair>& pairs, const std::vector<Reducer>& g, int j,
                       long long& counter) {
  for (int i = 0; i < j; ++i) {
    const Exponents l = monomial_lcm(g[i].lm, g[j].lm);
    const bool coprime = exponent_sum(l) == exponent_sum(g[i].lm) + exponent_sum(g[j].lm);
    pairs.push_back(SPair{i, j, exponent_sum(l), counter++, coprime});
  }
}

// Shared Buchberger loop; the normal form decides global vs local behavior.
inline StandardBasis basis_engine(const std::vector<Polynomial>& gens, MonomialOrder ord,
                                  long long cap) {
  std::vector<Reducer> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Reducer r = make_reducer(f, ord);
    r.p = r.p * (Rational(1) / r.lc);
    r.lc = 1;
    g.push_back(std::move(r));
  }
  std::vector<SPair> pairs;
  long long counter = 0;
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs(pairs, g, j, counter);

  while (!pairs.empty()) {
    // normal strategy: lowest lcm degree, then oldest pair
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].lcm_degree < pairs[best].lcm_degree ||
          (pairs[k].lcm_degree == pairs[best].lcm_degree &&
           pairs[k].index < pairs[best].index))
        best = k;
    const SPair pair = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (pair.coprime) continue;

    std::vector<Polynomial> current;
    current.reserve(g.size());
    for (const auto& r : g) current.push_back(r.p);
    const Polynomial s = spoly(g[pair.i].p, g[pair.j].p, ord);
    Polynomial h = ord == MonomialOrder::DegRevLex
                       ? normal_form_global(s, current)
                       : mora_normal_form(s, current, ord, cap);
    if (h.is_zero()) continue;
    Reducer r = make_reducer(h, ord);
    r.p = r.p * (Rational(1) / r.lc);
    r.lc = 1;
    g.push_back(std::move(r));
    push_pairs(pairs, g, static_cast<int>(g.size()) - 1, counter);
  }

  // minimalize: drop generators whose leading monomial another one divides.
  // Sorting by (degree, exponents) puts potential divisors first.
  std::sort(g.begin(), g.end(), [](const Reducer& a, const Reducer& b) {
    const long long da = exponent_sum(a.lm), db = exponent_sum(b.lm);
    if (da != db) return da < db;
    return a.lm < b.lm;
  });
  std::vector<Reducer> kept;
  for (auto& r : g) {
    bool redundant = false;
    for (const auto& k : kept)
      if (monomial_divides(k.lm, r.lm)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(r));
  }

  StandardBasis out;
  out.order = ord;
  if (ord == MonomialOrder::DegRevLex) {
    // reduced basis: tails rewritten against the other generators
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j].p);
      Polynomial red = normal_form_global(kept[i].p, others);
      const LeadingTerm lt = leading_term(red, ord);
      out.generators.push_back(red * (Rational(1) / lt.coeff));
    }
  } else {
    // local tails may not terminate under full reduction; keep them
    for (auto& r : kept) out.generators.push_back(std::move(r.p));
  }
  return out;
}

}  // namespace detail

// Reduced Groebner basis under the global degrevlex order.
inline StandardBasis buchberger(const std::vector<Polynomial>& gens, long long cap = 10000) {
  return detail::basis_engine(gens, MonomialOrder::DegRevLex, cap);
}

// Standard basis at the origin under the local order, computed with Mora
// normal forms.  Generators are monic with pairwise non-dividing leading
// monomials; tails are left unreduced.
inline StandardBasis local_standard_basis(const std::vector<Polynomial>& gens,
                                          long long cap = 10000) {
  return detail::basis_engine(gens, MonomialOrder::NegDegRevLex, cap);
}

// Number of monomials outside the leading-term ideal, or nullopt when that
// count is infinite (some variable has no pure power among the leading
// monomials).  This is the vector-space dimension of the quotient.
inline std::optional<long long> staircase_dimension(const StandardBasis& basis) {
  if (basis.generators.empty()) return std::nullopt;  // zero ideal: everything survives
  const int n = basis.generators.front().variable_count();
  std::vector<Exponents> lms = basis.leading_monomials();
  if (n == 0) return 0;  // a generator in the trivial ring is a nonzero constant

  for (const auto& lm : lms)
    if (exponent_sum(lm) == 0) return 0;  // unit in the ideal

  std::vector<int> bound(n, -1);
  for (const auto& lm : lms) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n && pure; ++i)
      if (lm[i] > 0) {
        if (support >= 0)
          pure = false;
        else
          support = i;
      }
    if (pure && support >= 0)
      bound[support] = bound[support] < 0 ? lm[support] : std::min(bound[support], lm[support]);
  }
  long long box = 1;
  for (int i = 0; i < n; ++i) {
    if (bound[i] < 0) return std::nullopt;
    box *= bound[i];
    if (box > 50'000'000)
      throw compute_error("staircase enumeration box too large");
  }

  long long count = 0;
  Exponents e(n, 0);
  while (true) {
    bool outside = true;
    for (const auto& lm : lms)
      if (monomial_divides(lm, e)) {
        outside = false;
        break;
      }
    if (outside) ++count;
    int i = 0;
    while (i < n && e[i] + 1 >= bound[i]) {
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
    e[i] += 1;
  }
  return count;
}

namespace detail {

inline void check_germ_singular(const Polynomial& germ) {
  if (germ.is_zero()) throw compute_error("non-isolated singularity: zero germ");
  if (germ.constant_term() != 0)
    throw input_error("germ does not vanish at the origin");
  const int n = germ.variable_count();
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    if (germ.coefficient(e) != 0) throw compute_error("smooth germ");
  }
}

}  // namespace detail

// Milnor number of an isolated hypersurface singularity germ: the dimension
// of the Jacobian-ideal quotient, read off the local standard basis
// staircase.  Errors: "smooth germ" when the linear part is nonzero,
// "non-isolated singularity" when the quotient is infinite-dimensional.
inline long long milnor_number(const Polynomial& germ, long long cap = 10000) {
  detail::check_germ_singular(germ);
  std::vector<Polynomial> jac;
  for (auto& d : partials(germ))
    if (!d.is_zero()) jac.push_back(std::move(d));
  const StandardBasis sb = local_standard_basis(jac, cap);
  const std::optional<long long> dim = staircase_dimension(sb);
  if (!dim) throw compute_error("non-isolated singularity");
  return *dim;
}

// Nondegenerate quadratic singularity test: full-rank Hessian at the origin.
inline bool is_node(const Polynomial& germ) {
  detail::check_germ_singular(germ);
  return hessian_rank_at_origin(germ) == germ.variable_count();
}

}  // namespace hicalc

#endif
