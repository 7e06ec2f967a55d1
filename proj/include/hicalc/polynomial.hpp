#ifndef HICALC_POLYNOMIAL_HPP
#define HICALC_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hicalc/matrix.hpp"
#include "hicalc/rational.hpp"

namespace hicalc {

using Exponents = std::vector<int>;

inline long long exponent_sum(const Exponents& e) {
  long long d = 0;
  for (int x : e) d += x;
  return d;
}

inline Rational rat_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/**
 * Multivariate polynomial over Q with a fixed, ordered variable list.
 *
 * The variable list is part of the value: it fixes the ambient ring, so a
 * polynomial may carry variables that no surviving term uses (needed for
 * partial derivatives and for projective inputs like "0*x + y*z").  Terms are
 * kept sparse with nonzero coefficients only.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static Polynomial variable(std::vector<std::string> vars, int index) {
    Polynomial p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  int variable_count() const { return static_cast<int>(vars_.size()); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Polynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != variable_count())
      throw input_error("term exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(vars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  Polynomial operator*(const Rational& s) const {
    Polynomial r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  // Term-by-term product with the monomial s*x^e.
  Polynomial times_monomial(const Exponents& e, const Rational& s) const {
    Polynomial r(vars_);
    if (s == 0) return r;
    for (const auto& [te, tc] : terms_) {
      Exponents ne = te;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
      r.terms_.emplace(ne, tc * s);
    }
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw input_error("negative exponent");
    Polynomial r = constant(vars_, 1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  long long total_degree() const {  // -1 for the zero polynomial
    long long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_sum(e));
    return d;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != variable_count())
      throw input_error("evaluation point arity mismatch");
    Rational v = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t *= rat_pow(point[i], e[i]);
      v += t;
    }
    return v;
  }

  // Substitute x_index -> x_index + shift, other variables fixed.
  Polynomial shift_variable(int index, const Rational& shift) const {
    if (shift == 0) return *this;
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      // (x + shift)^k expanded with exact binomials
      Rational binom = 1;
      for (int t = e[index]; t >= 0; --t) {
        Exponents ne = e;
        ne[index] = t;
        r.add_term(ne, c * binom * rat_pow(shift, e[index] - t));
        if (t > 0) binom = binom * t / (e[index] - t + 1);
      }
    }
    return r;
  }

  // Set x_index = 1 and remove the variable from the ring.
  Polynomial dehomogenize(int index) const {
    std::vector<std::string> nv;
    for (int i = 0; i < variable_count(); ++i)
      if (i != index) nv.push_back(vars_[i]);
    Polynomial r(nv);
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      ne.reserve(e.size() - 1);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != index) ne.push_back(e[i]);
      r.add_term(ne, c);
    }
    return r;
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (vars_ != o.vars_) throw input_error("polynomial ring mismatch");
  }

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

// One formal partial derivative per ambient variable, in variable order.
inline std::vector<Polynomial> partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.variable_count());
  for (int i = 0; i < f.variable_count(); ++i) {
    Polynomial d(f.variables());
    for (const auto& [e, c] : f.terms()) {
      if (e[i] == 0) continue;
      Exponents ne = e;
      ne[i] -= 1;
      d.add_term(ne, c * e[i]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Degree if every term has the same total degree, nullopt otherwise.
inline std::optional<long long> homogeneous_degree(const Polynomial& f) {
  if (f.is_zero()) throw input_error("zero polynomial has no homogeneous degree");
  std::optional<long long> d;
  for (const auto& [e, c] : f.terms()) {
    const long long td = exponent_sum(e);
    if (!d)
      d = td;
    else if (*d != td)
      return std::nullopt;
  }
  return d;
}

// Degree if every term has the same weighted degree sum(w_i * e_i).
inline std::optional<long long> weighted_degree(const Polynomial& f,
                                                const std::vector<long long>& weights) {
  if (f.is_zero()) throw input_error("zero polynomial has no weighted degree");
  if (static_cast<int>(weights.size()) != f.variable_count())
    throw input_error("weight count does not match variable count");
  std::optional<long long> d;
  for (const auto& [e, c] : f.terms()) {
    long long td = 0;
    for (std::size_t i = 0; i < e.size(); ++i) td += weights[i] * e[i];
    if (!d)
      d = td;
    else if (*d != td)
      return std::nullopt;
  }
  return d;
}

// Point in projective space with exact rational coordinates; at least one
// coordinate must be nonzero.
struct ProjectivePoint {
  explicit ProjectivePoint(std::vector<Rational> c) : coords(std::move(c)) {
    bool nonzero = false;
    for (const auto& v : coords) nonzero = nonzero || v != 0;
    if (!nonzero) throw input_error("projective point must have a nonzero coordinate");
  }
  std::vector<Rational> coords;
};

// f(p) = 0 together with all partials vanishing at p.  Requires homogeneous f
// so the answer does not depend on the chosen representative.
inline bool is_singular_point(const Polynomial& f, const ProjectivePoint& p) {
  if (!homogeneous_degree(f)) throw input_error("polynomial is not homogeneous");
  if (static_cast<int>(p.coords.size()) != f.variable_count())
    throw input_error("point arity does not match variable count");
  if (f.evaluate(p.coords) != 0) return false;
  for (const auto& d : partials(f))
    if (d.evaluate(p.coords) != 0) return false;
  return true;
}

// Affine germ of a homogeneous f at p: dehomogenize in the first chart where
// p has a nonzero coordinate (scaled to 1), then translate p to the origin.
// The result has zero constant term exactly when f(p) = 0.
inline Polynomial localize_at(const Polynomial& f, const ProjectivePoint& p) {
  if (!homogeneous_degree(f)) throw input_error("polynomial is not homogeneous");
  if (static_cast<int>(p.coords.size()) != f.variable_count())
    throw input_error("point arity does not match variable count");
  int chart = 0;
  while (p.coords[chart] == 0) ++chart;
  const Rational scale = p.coords[chart];
  Polynomial g = f.dehomogenize(chart);
  int out = 0;
  for (int i = 0; i < f.variable_count(); ++i) {
    if (i == chart) continue;
    g = g.shift_variable(out, p.coords[i] / scale);
    ++out;
  }
  return g;
}

// Rank over Q of the Hessian of a germ at the origin.  The germ must be
// singular there (zero constant and linear parts).
inline int hessian_rank_at_origin(const Polynomial& g) {
  const int n = g.variable_count();
  if (g.constant_term() != 0) throw compute_error("not a singular germ: nonzero constant term");
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    if (g.coefficient(e) != 0)
      throw compute_error("not a singular germ: nonzero linear part");
  }
  QMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exponents e(n, 0);
      e[i] += 1;
      e[j] += 1;
      Rational c = g.coefficient(e);
      if (i == j) c *= 2;
      h.at(i, j) = c;
      h.at(j, i) = c;
    }
  return rank(h);
}

}  // namespace hicalc

#endif
