#pragma once

// Canonical bases of submodules of a truncated ring.
//
// Both coefficient systems are chain rings (a field has chain length 1), so a
// single Howell-form routine serves both kinds: over F_q it produces the
// reduced row-echelon form, over Z/p^N the Howell normal form. Columns are
// ordered by degree, so the pivot of a row is its valuation.

#include <algorithm>
#include <vector>

#include "minext/truncated_ring.hpp"

namespace minext {

template <class C>
using Basis = std::vector<RingElem<C>>;

/// Pivot column and pivot exponent of a canonical row.
template <class C>
Valuation pivot_of(const RingCtx<C>& ring, const RingElem<C>& row) {
  return ring.nu(row);
}

/// Howell normal form (RREF over a field) of the span of rows. Zero rows are
/// dropped; pivots are p^v; entries above a pivot p^v lie in [0, p^v).
template <class C>
Basis<C> canonicalize(const RingCtx<C>& ring, std::vector<RingElem<C>> rows) {
  const auto& K = ring.coeffs();
  std::erase_if(rows, [&](const RingElem<C>& r) { return ring.is_zero(r); });
  Basis<C> out;
  for (int c = 0; c < ring.n() && !rows.empty(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t best = rows.size();
    int best_v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto t = rows[i].coeffs[col];
      if (K.is_zero(t)) continue;
      const int v = K.nu1(t);
      if (best == rows.size() || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == rows.size()) continue;
    RingElem<C> piv = ring.scale(K.unit_part_inverse(rows[best].coeffs[col]), rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& r : rows) {
      const auto t = r.coeffs[col];
      if (!K.is_zero(t)) r = ring.sub(r, ring.scale(K.quotient_by_pow_p(t, best_v), piv));
    }
    // The part of span(piv) vanishing in column c.
    RingElem<C> ann = ring.scale(K.pow_p(ring.col_exp(c) - best_v), piv);
    if (!ring.is_zero(ann)) rows.push_back(std::move(ann));
    std::erase_if(rows, [&](const RingElem<C>& r) { return ring.is_zero(r); });
    out.push_back(std::move(piv));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Valuation pv = ring.nu(out[i]);
    const auto col = static_cast<std::size_t>(pv.deg);
    for (std::size_t r = 0; r < i; ++r) {
      const auto t = out[r].coeffs[col];
      if (K.is_zero(t)) continue;
      const auto s = K.quotient_by_pow_p(t, pv.pval);
      if (!K.is_zero(s)) out[r] = ring.sub(out[r], ring.scale(s, out[i]));
    }
  }
  return out;
}

/// log of the submodule's size, in units of q (field) or p (Z/p^N).
template <class C>
int span_length(const RingCtx<C>& ring, const Basis<C>& canonical) {
  int len = 0;
  for (const auto& row : canonical) {
    const Valuation v = ring.nu(row);
    len += ring.col_exp(v.deg) - v.pval;
  }
  return len;
}

/// Membership test against a canonical basis by greedy reduction.
template <class C>
bool in_span(const RingCtx<C>& ring, const Basis<C>& canonical, RingElem<C> x) {
  const auto& K = ring.coeffs();
  for (const auto& row : canonical) {
    const Valuation v = ring.nu(row);
    const auto t = x.coeffs[static_cast<std::size_t>(v.deg)];
    if (K.is_zero(t)) continue;
    if (K.nu1(t) < v.pval) return false;
    x = ring.sub(x, ring.scale(K.quotient_by_pow_p(t, v.pval), row));
  }
  return ring.is_zero(x);
}

/// Canonical basis of span(canonical) + span(extra).
template <class C>
Basis<C> span_union(const RingCtx<C>& ring, const Basis<C>& canonical, const std::vector<RingElem<C>>& extra) {
  std::vector<RingElem<C>> rows = canonical;
  rows.insert(rows.end(), extra.begin(), extra.end());
  return canonicalize(ring, std::move(rows));
}

/// Every element of the span of a canonical basis, each exactly once.
template <class C>
std::vector<RingElem<C>> span_members(const RingCtx<C>& ring, const Basis<C>& canonical, std::size_t limit = 1u << 20) {
  const auto& K = ring.coeffs();
  // Row i contributes multiples s * row_i with s < p^{col_exp - v} (over a
  // field: all of F_q).
  std::vector<std::vector<typename C::elem_type>> scalars;
  std::size_t total = 1;
  for (const auto& row : canonical) {
    const Valuation v = ring.nu(row);
    std::vector<typename C::elem_type> ss;
    if constexpr (RingCtx<C>::field_kind) {
      ss = K.residue_reps();
    } else {
      const auto count = detail::ipow(K.p(), static_cast<unsigned>(ring.col_exp(v.deg) - v.pval));
      for (std::uint64_t s = 0; s < count; ++s) ss.push_back(K.from_int(static_cast<std::int64_t>(s)));
    }
    total *= ss.size();
    if (total > limit) throw TooLarge("submodule too large to list");
    scalars.push_back(std::move(ss));
  }
  std::vector<RingElem<C>> out{ring.zero()};
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    std::vector<RingElem<C>> next;
    next.reserve(out.size() * scalars[i].size());
    for (const auto& base : out)
      for (auto s : scalars[i]) next.push_back(ring.add(base, ring.scale(s, canonical[i])));
    out = std::move(next);
  }
  return out;
}

}  // namespace minext
