#ifndef HICALC_CHAIN_HPP
#define HICALC_CHAIN_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "hicalc/matrix.hpp"
#include "hicalc/topology.hpp"

namespace hicalc {

/*
 * Chain-level engine for intersection-space homology of a pair
 * (exterior M, link L): homology and relative homology over Q, spatial
 * truncation of the link below a cutoff degree, and the reduced homology of
 * the mapping cone of  t_{<k}(L) -> L -> M, which is the homology of the
 * intersection space built from that pair.
 */

// Bounded chain complex of Q-vector spaces.  dims[k] is the rank in degree k;
// boundaries[k] is d_{k+1} : C_{k+1} -> C_k as a dims[k] x dims[k+1] matrix.
class FiniteChainComplex {
 public:
  FiniteChainComplex() = default;

  FiniteChainComplex(std::vector<int> dims, std::vector<QMatrix> boundaries)
      : dims_(std::move(dims)), d_(std::move(boundaries)) {
    for (int v : dims_)
      if (v < 0) throw input_error("negative chain rank");
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (d_.size() != expected)
      throw input_error("boundary list length must be one less than the degree count");
    for (std::size_t k = 0; k < d_.size(); ++k)
      if (d_[k].rows() != dims_[k] || d_[k].cols() != dims_[k + 1])
        throw input_error("boundary matrix shape mismatch in degree " +
                          std::to_string(k + 1));
    for (std::size_t k = 0; k + 1 < d_.size(); ++k)
      if (!(d_[k] * d_[k + 1]).is_zero())
        throw input_error("boundary squared is nonzero in degree " + std::to_string(k + 2));
  }

  int top() const { return static_cast<int>(dims_.size()) - 1; }

  int dim(int k) const {
    if (k < 0 || k > top()) return 0;
    return dims_[k];
  }

  const std::vector<int>& dims() const { return dims_; }

  // d_k : C_k -> C_{k-1}; a zero-shaped matrix outside the stored range.
  QMatrix boundary(int k) const {
    if (k >= 1 && k <= top()) return d_[k - 1];
    return QMatrix(dim(k - 1), dim(k));
  }

 private:
  std::vector<int> dims_;
  std::vector<QMatrix> d_;
};

// Degreewise linear maps commuting with the boundaries.  maps[k] is
// target-degree-k x source-degree-k; degrees beyond the stored list are zero.
class ChainMap {
 public:
  ChainMap() = default;

  ChainMap(FiniteChainComplex source, FiniteChainComplex target, std::vector<QMatrix> maps)
      : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    const std::size_t expected = source_.dims().size();
    if (maps_.size() != expected)
      throw input_error("chain map needs one matrix per source degree");
    for (std::size_t k = 0; k < maps_.size(); ++k)
      if (maps_[k].rows() != target_.dim(static_cast<int>(k)) ||
          maps_[k].cols() != source_.dim(static_cast<int>(k)))
        throw input_error("chain map matrix shape mismatch in degree " + std::to_string(k));
    for (int k = 1; k <= source_.top(); ++k) {
      const QMatrix lhs = target_.boundary(k) * map_at(k);
      const QMatrix rhs = map_at(k - 1) * source_.boundary(k);
      if (!(lhs - rhs).is_zero())
        throw input_error("chain map does not commute with boundaries in degree " +
                          std::to_string(k));
    }
  }

  const FiniteChainComplex& source() const { return source_; }
  const FiniteChainComplex& target() const { return target_; }

  QMatrix map_at(int k) const {
    if (k >= 0 && k < static_cast<int>(maps_.size())) return maps_[k];
    return QMatrix(target_.dim(k), source_.dim(k));
  }

 private:
  FiniteChainComplex source_;
  FiniteChainComplex target_;
  std::vector<QMatrix> maps_;
};

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (g.source().dims() != f.target().dims())
    throw input_error("chain map composition shape mismatch");
  std::vector<QMatrix> maps;
  for (int k = 0; k <= f.source().top(); ++k) maps.push_back(g.map_at(k) * f.map_at(k));
  return ChainMap(f.source(), g.target(), std::move(maps));
}

inline BettiVector homology_ranks(const FiniteChainComplex& c) {
  BettiVector b;
  for (int k = 0; k <= c.top(); ++k) {
    const long long z = c.dim(k) - rank(c.boundary(k));
    b.push_back(z - rank(c.boundary(k + 1)));
  }
  return b;
}

// Algebraic mapping cone of f : A -> B, Cone_k = A_{k-1} + B_k with
// d(a, b) = (-d a, d b - f a).  Its homology is the relative homology of the
// pair when f is an inclusion, and the reduced homology of the topological
// mapping cone in general.
inline FiniteChainComplex mapping_cone(const ChainMap& f) {
  const FiniteChainComplex& a = f.source();
  const FiniteChainComplex& b = f.target();
  const int top = std::max(a.top() + 1, b.top());
  std::vector<int> dims;
  for (int k = 0; k <= top; ++k) dims.push_back(a.dim(k - 1) + b.dim(k));
  std::vector<QMatrix> bnd;
  for (int k = 1; k <= top; ++k) {
    QMatrix m(dims[k - 1], dims[k]);
    const QMatrix da = a.boundary(k - 1);
    const QMatrix db = b.boundary(k);
    const QMatrix fm = f.map_at(k - 1);
    const int arows = a.dim(k - 2), acols = a.dim(k - 1);
    for (int r = 0; r < arows; ++r)
      for (int c = 0; c < acols; ++c) m.at(r, c) = -da.at(r, c);
    for (int r = 0; r < b.dim(k - 1); ++r)
      for (int c = 0; c < acols; ++c) m.at(arows + r, c) = -fm.at(r, c);
    for (int r = 0; r < b.dim(k - 1); ++r)
      for (int c = 0; c < b.dim(k); ++c) m.at(arows + r, acols + c) = db.at(r, c);
    bnd.push_back(std::move(m));
  }
  return FiniteChainComplex(std::move(dims), std::move(bnd));
}

// Rank of the map induced by f on degree-j homology: image of f(cycles)
// inside H_j(target), computed as rank([f K | d_{j+1}]) - rank(d_{j+1}).
inline int induced_homology_rank(const ChainMap& f, int j) {
  if (f.source().dim(j) == 0 || f.target().dim(j) == 0) return 0;
  const QMatrix cycles = kernel_basis(f.source().boundary(j));
  const QMatrix mapped = f.map_at(j) * cycles;
  const QMatrix db = f.target().boundary(j + 1);
  return rank(mapped.hstack(db)) - rank(db);
}

// The pair (exterior of the singular set, its link) together with the
// ambient manifold dimension and the truncation cutoff, 0 <= cutoff <= dim.
struct PairComplex {
  PairComplex(FiniteChainComplex link_in, FiniteChainComplex exterior_in,
              std::vector<QMatrix> inclusion_in, int manifold_dim_in, int cutoff_in)
      : link(std::move(link_in)),
        exterior(std::move(exterior_in)),
        inclusion(link, exterior, std::move(inclusion_in)),
        manifold_dim(manifold_dim_in),
        cutoff(cutoff_in) {
    if (manifold_dim < 1) throw input_error("manifold dimension must be at least 1");
    if (cutoff < 0 || cutoff > manifold_dim)
      throw input_error("cutoff must lie between 0 and the manifold dimension");
  }

  PairComplex with_cutoff(int k) const {
    PairComplex p = *this;
    if (k < 0 || k > manifold_dim)
      throw input_error("cutoff must lie between 0 and the manifold dimension");
    p.cutoff = k;
    return p;
  }

  FiniteChainComplex link;
  FiniteChainComplex exterior;
  ChainMap inclusion;
  int manifold_dim;
  int cutoff;
};

inline BettiVector relative_homology_ranks(const PairComplex& p) {
  return homology_ranks(mapping_cone(p.inclusion));
}

struct Truncation {
  FiniteChainComplex complex;
  ChainMap inclusion;
};

// Spatial truncation t_{<k}: degrees above k are removed, degree k is
// replaced by a complement Y of ker d_k (so no cycles survive there), lower
// degrees are untouched.  The inclusion induces isomorphisms on H_r for
// r < k, and the truncated complex has no homology in degrees >= k.
inline Truncation chain_truncation(const FiniteChainComplex& c, int k) {
  if (k < 0) throw input_error("truncation cutoff must be non-negative");
  const int keff = std::min(k, c.top() + 1);
  const QMatrix y = image_complement_basis(c.boundary(keff));

  std::vector<int> dims;
  std::vector<QMatrix> bnd;
  for (int r = 0; r < keff; ++r) dims.push_back(c.dim(r));
  dims.push_back(y.cols());
  for (int r = 1; r < keff; ++r) bnd.push_back(c.boundary(r));
  if (keff >= 1) bnd.push_back(c.boundary(keff) * y);

  std::vector<QMatrix> incl;
  for (int r = 0; r < keff; ++r) incl.push_back(QMatrix::identity(c.dim(r)));
  incl.push_back(y);

  FiniteChainComplex t(std::move(dims), std::move(bnd));
  ChainMap j(t, c, std::move(incl));
  return Truncation{std::move(t), std::move(j)};
}

namespace detail {

inline int hi_report_top(const PairComplex& p) {
  return std::max({p.manifold_dim, p.exterior.top(), p.link.top() + 1});
}

inline BettiVector pad_to(BettiVector v, int top) {
  v.resize(static_cast<std::size_t>(top) + 1, 0);
  return v;
}

// Reduced intersection-space homology via the closed formulas: relative
// ranks below the cutoff, exterior ranks above it, and at the cutoff itself
// rank H_k(M, L) plus the rank of H_k(L) -> H_k(M).
inline BettiVector reduced_hi_from_pair(const PairComplex& p) {
  const int top = hi_report_top(p);
  const BettiVector rel = pad_to(relative_homology_ranks(p), top);
  const BettiVector ext = pad_to(homology_ranks(p.exterior), top);
  BettiVector out(static_cast<std::size_t>(top) + 1, 0);
  for (int i = 0; i <= top; ++i) {
    if (i < p.cutoff)
      out[i] = rel[i];
    else if (i > p.cutoff)
      out[i] = ext[i];
    else
      out[i] = rel[i] + induced_homology_rank(p.inclusion, i);
  }
  return out;
}

// Reduced intersection-space homology as the homology of the mapping cone of
// the composite  t_{<k}(L) -> L -> M.
inline BettiVector reduced_hi_via_cone(const PairComplex& p) {
  const Truncation t = chain_truncation(p.link, p.cutoff);
  const ChainMap g = compose(p.inclusion, t.inclusion);
  return pad_to(homology_ranks(mapping_cone(g)), hi_report_top(p));
}

}  // namespace detail

// Reported homology of the intersection space built from the pair: reduced
// ranks re-augmented with +1 in degree 0.
inline BettiVector hi_from_pair(const PairComplex& p) {
  BettiVector b = detail::reduced_hi_from_pair(p);
  b[0] += 1;
  return b;
}

inline BettiVector hi_via_cone(const PairComplex& p) {
  BettiVector b = detail::reduced_hi_via_cone(p);
  b[0] += 1;
  return b;
}

struct DualityCheck {
  int cutoff = 0;
  int complementary_cutoff = 0;
  BettiVector reduced;                // cutoff k
  BettiVector reduced_complementary;  // cutoff m - k
  bool holds = false;
};

// Generalized Poincare duality probe: reduced HI ranks at complementary
// cutoffs k and m-k must be mirror images around the middle, rank at degree
// i matching rank at degree m-i.  True for honest manifold pairs; may fail
// for arbitrary chain data.
inline DualityCheck duality_rank_check(const PairComplex& p) {
  DualityCheck out;
  out.cutoff = p.cutoff;
  out.complementary_cutoff = p.manifold_dim - p.cutoff;
  out.reduced = detail::reduced_hi_from_pair(p);
  out.reduced_complementary =
      detail::reduced_hi_from_pair(p.with_cutoff(out.complementary_cutoff));
  const int m = p.manifold_dim;
  auto at = [](const BettiVector& v, int i) -> long long {
    if (i < 0 || i >= static_cast<int>(v.size())) return 0;
    return v[i];
  };
  out.holds = true;
  const int top = static_cast<int>(out.reduced.size()) - 1;
  for (int i = 0; i <= top && out.holds; ++i) {
    if (at(out.reduced, i) != at(out.reduced_complementary, m - i)) out.holds = false;
    if (at(out.reduced_complementary, i) != at(out.reduced, m - i)) out.holds = false;
  }
  return out;
}

}  // namespace hicalc

#endif
