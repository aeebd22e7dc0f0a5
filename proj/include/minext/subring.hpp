#pragma once

// Unital subrings (F_q-subalgebras in the field kind) of the truncated rings,
// their exponent sets and ideals, and the lifting of subrings along the
// one-step quotient maps.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "minext/linalg.hpp"
#include "minext/partial_monoid.hpp"
#include "minext/truncated_ring.hpp"

namespace minext {

/// A unital, multiplicatively closed submodule held by its canonical basis.
template <class C>
class Subring {
 public:
  using ring_type = RingCtx<C>;

  /// Wraps an already canonical, closed basis. Use closure() to build one
  /// from generators.
  Subring(RingCtx<C> ctx, Basis<C> canonical) : ctx_(std::move(ctx)), basis_(std::move(canonical)) {}

  const RingCtx<C>& ctx() const { return ctx_; }
  const Basis<C>& basis() const { return basis_; }

  /// log_q dim (field) or log_p of the cardinality (Z kind).
  int length() const { return span_length(ctx_, basis_); }

  bool contains(const RingElem<C>& x) const { return in_span(ctx_, basis_, x); }

  friend bool operator==(const Subring& a, const Subring& b) { return a.ctx_ == b.ctx_ && a.basis_ == b.basis_; }
  /// (dimension, canonical basis) order.
  friend bool operator<(const Subring& a, const Subring& b) {
    const int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.basis_ < b.basis_;
  }

 private:
  RingCtx<C> ctx_;
  Basis<C> basis_;
};

/// True iff the span of a canonical basis is closed under multiplication.
template <class C>
bool is_multiplicatively_closed(const RingCtx<C>& ring, const Basis<C>& canonical) {
  for (std::size_t i = 0; i < canonical.size(); ++i)
    for (std::size_t j = i; j < canonical.size(); ++j)
      if (!in_span(ring, canonical, ring.mul(canonical[i], canonical[j]))) return false;
  return true;
}

/// Canonical basis of the span of all pairwise products of basis rows.
template <class C>
Basis<C> product_span(const RingCtx<C>& ring, const Basis<C>& a, const Basis<C>& b) {
  std::vector<RingElem<C>> rows;
  for (const auto& x : a)
    for (const auto& y : b) rows.push_back(ring.mul(x, y));
  return canonicalize(ring, std::move(rows));
}

/// Smallest unital subring containing gens.
template <class C>
Subring<C> closure(const RingCtx<C>& ring, const std::vector<RingElem<C>>& gens) {
  std::vector<RingElem<C>> rows{ring.one()};
  for (const auto& g : gens) {
    if (static_cast<int>(g.coeffs.size()) != ring.n()) throw CtxMismatch("generator does not belong to " + ring.name());
    rows.push_back(g);
  }
  Basis<C> basis = canonicalize(ring, std::move(rows));
  int len = span_length(ring, basis);
  for (;;) {
    std::vector<RingElem<C>> prods = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) prods.push_back(ring.mul(basis[i], basis[j]));
    Basis<C> next = canonicalize(ring, std::move(prods));
    const int next_len = span_length(ring, next);
    basis = std::move(next);
    if (next_len == len) break;
    len = next_len;
  }
  return Subring<C>(ring, std::move(basis));
}

/// The prime subring: F_q * 1, resp. Z/p^N * 1.
template <class C>
Subring<C> prime_subring(const RingCtx<C>& ring) {
  return closure(ring, {});
}

template <class C>
Subring<C> whole_ring(const RingCtx<C>& ring) {
  std::vector<RingElem<C>> rows;
  for (int i = 0; i < ring.n(); ++i) rows.push_back(ring.x_pow(i));
  return Subring<C>(ring, canonicalize(ring, std::move(rows)));
}

/// E(R) resp. D(R): the valuations of nonzero members, read off the canonical
/// basis. A pivot p^v in column c yields (c, v), (c, v+1), ..., (c, col_exp-1).
template <class C>
Shape exponent_set(const Subring<C>& R) {
  const auto& ring = R.ctx();
  std::vector<Valuation> pts;
  for (const auto& row : R.basis()) {
    const Valuation v = ring.nu(row);
    for (int j = v.pval; j < ring.col_exp(v.deg); ++j) pts.push_back({v.deg, j});
  }
  std::sort(pts.begin(), pts.end());
  return Shape{ExpDomain::of(ring), std::move(pts)};
}

/// The same set by scanning every member (desk scale oracle).
template <class C>
Shape exponent_set_by_scan(const Subring<C>& R) {
  const auto& ring = R.ctx();
  std::vector<Valuation> pts;
  for (const auto& x : span_members(ring, R.basis()))
    if (!ring.is_zero(x)) pts.push_back(ring.nu(x));
  return Shape{ExpDomain::of(ring), detail::sorted_unique(std::move(pts))};
}

template <class C>
struct IdealData {
  Basis<C> m;        // maximal ideal (non-units of R)
  Basis<C> m_sq;     // m^2
  Basis<C> m_sq_pR;  // m^2 + pR (equal to m_sq in the field kind)
};

template <class C>
IdealData<C> ideal_data(const Subring<C>& R) {
  const auto& ring = R.ctx();
  const auto& K = ring.coeffs();
  const auto& b = R.basis();
  // b[0] is the only row with a nonzero constant term and that term is 1.
  std::vector<RingElem<C>> m_rows;
  m_rows.push_back(ring.scale(K.pow_p(1), b.front()));
  m_rows.insert(m_rows.end(), b.begin() + 1, b.end());
  IdealData<C> out;
  out.m = canonicalize(ring, std::move(m_rows));
  out.m_sq = product_span(ring, out.m, out.m);
  std::vector<RingElem<C>> p_rows;
  for (const auto& row : b) p_rows.push_back(ring.scale(K.pow_p(1), row));
  out.m_sq_pR = span_union(ring, out.m_sq, p_rows);
  return out;
}

/// dim m/m^2 over F_q, resp. dim m/(m^2 + pR) over F_p.
template <class C>
int cotangent_dim(const Subring<C>& R) {
  const auto id = ideal_data(R);
  return span_length(R.ctx(), id.m) - span_length(R.ctx(), id.m_sq_pR);
}

/// Image of R under its ring's one-step quotient map.
template <class C>
Subring<C> project_subring(const Subring<C>& R) {
  const auto& ring = R.ctx();
  auto dst = ring.quotient();
  if (!dst) throw NotAQuotient("the base ring has no proper one-step quotient");
  std::vector<RingElem<C>> rows;
  for (const auto& row : R.basis()) rows.push_back(ring.project(row));
  return Subring<C>(*dst, canonicalize(*dst, std::move(rows)));
}

/// A quotient map src -> dst = src / span(kernel_gen) restricted to a subring.
template <class C>
struct MinimalExtension {
  Subring<C> src;
  Subring<C> dst;
  RingElem<C> kernel_gen;
  bool is_minimal = false;
  bool kernel_in_small = false;  // z in m^2 (field) resp. m^2 + pR (Z kind)
};

namespace detail {

template <class C>
MinimalExtension<C> describe_extension(Subring<C> src) {
  const auto& ring = src.ctx();
  const RingElem<C> z = ring.kernel_generator();
  Subring<C> dst = project_subring(src);
  const bool has_kernel = src.contains(z);
  bool minimal = has_kernel;
  const auto id = ideal_data(src);
  if (minimal) {
    // Kernel = span(z) has length one; it must be killed by m.
    for (const auto& row : id.m)
      if (!ring.is_zero(ring.mul(z, row))) minimal = false;
  }
  const bool small = in_span(ring, id.m_sq_pR, z);
  return MinimalExtension<C>{std::move(src), std::move(dst), z, minimal, small};
}

}  // namespace detail

/// The restriction phi^{-1}(B) -> B of the one-step extension of B's ring.
template <class C>
MinimalExtension<C> restricted_extension(const Subring<C>& B) {
  const RingCtx<C> src = B.ctx().extension();
  std::vector<RingElem<C>> rows;
  for (const auto& row : B.basis()) rows.push_back(src.lift(row));
  rows.push_back(src.kernel_generator());
  return detail::describe_extension(Subring<C>(src, canonicalize(src, std::move(rows))));
}

/// Describes R -> R / (R cap ker) for an arbitrary subring R; minimal iff R
/// contains the kernel generator.
template <class C>
MinimalExtension<C> extension_of(const Subring<C>& R) {
  return detail::describe_extension(R);
}

template <class C>
struct LiftFamily {
  MinimalExtension<C> base;
  bool exists = false;
  int dim = 0;  // d(dst)
  std::vector<Subring<C>> lifts;
};

/// All subrings of ext.src's ring mapping isomorphically onto ext.dst.
///
/// With W = m/(m^2 + pR) and a basis {z, w_1..w_d} of W, the lifts are
///   A_lambda = (coeffs) 1 + span{w_i - lambda_i z} + m^2 + pR
/// for lambda ranging over (residue field)^d.
template <class C>
LiftFamily<C> lift_isomorphic(const MinimalExtension<C>& ext, std::size_t limit = 1u << 20) {
  if (!ext.is_minimal) throw NotMinimal("the kernel is not a minimal ideal of the source subring");
  const auto& ring = ext.src.ctx();
  const auto& K = ring.coeffs();
  LiftFamily<C> fam{ext, false, cotangent_dim(ext.dst), {}};
  if (ext.kernel_in_small) return fam;
  fam.exists = true;

  const auto id = ideal_data(ext.src);
  Basis<C> acc = span_union(ring, id.m_sq_pR, {ext.kernel_gen});
  std::vector<RingElem<C>> ws;
  for (const auto& row : id.m) {
    if (in_span(ring, acc, row)) continue;
    ws.push_back(row);
    acc = span_union(ring, acc, {row});
  }
  const auto reps = K.residue_reps();
  std::size_t count = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    count *= reps.size();
    if (count > limit) throw TooLarge("lift family too large");
  }

  std::vector<RingElem<C>> base_rows = id.m_sq_pR;
  base_rows.push_back(ring.one());
  std::vector<std::size_t> digit(ws.size(), 0);
  for (std::size_t it = 0; it < count; ++it) {
    std::vector<RingElem<C>> rows = base_rows;
    for (std::size_t i = 0; i < ws.size(); ++i)
      rows.push_back(ring.sub(ws[i], ring.scale(reps[digit[i]], ext.kernel_gen)));
    fam.lifts.emplace_back(ring, canonicalize(ring, std::move(rows)));
    for (std::size_t i = ws.size(); i-- > 0;) {
      if (++digit[i] < reps.size()) break;
      digit[i] = 0;
    }
  }
  return fam;
}

}  // namespace minext
