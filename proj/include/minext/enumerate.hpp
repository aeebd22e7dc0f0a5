#pragma once

// Complete lists of subrings of an ambient ring by three independent routes:
//
//   subspace_scan  every subspace F_q + V with V inside m, kept when closed
//                  under multiplication (field kind only)
//   closure_bfs    adjoin one ambient element at a time and close
//   minimal_ext    climb the quotient chain; at each step take phi^{-1}(B)
//                  and every lift of B
//
// All three return the same canonical list, sorted by (dimension, basis).

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "minext/subring.hpp"

namespace minext {

enum class EnumMethod { subspace_scan, closure_bfs, minimal_ext };

inline std::string to_string(EnumMethod m) {
  switch (m) {
    case EnumMethod::subspace_scan: return "subspace_scan";
    case EnumMethod::closure_bfs: return "closure_bfs";
    case EnumMethod::minimal_ext: return "minimal_ext";
  }
  return "?";
}

struct EnumLimits {
  std::uint64_t max_ambient = 1u << 14;   // elements scanned by closure_bfs
  std::uint64_t max_subspaces = 1u << 22;  // subspaces visited by subspace_scan
  std::uint64_t max_subrings = 1u << 20;
};

namespace detail {

template <class C>
std::uint64_t ambient_size(const RingCtx<C>& ring) {
  long double s = 1;
  for (int c = 0; c < ring.n(); ++c) {
    if constexpr (RingCtx<C>::field_kind) {
      s *= ring.coeffs().order();
    } else {
      s *= static_cast<long double>(ipow(ring.coeffs().p(), static_cast<unsigned>(ring.col_exp(c))));
    }
  }
  return s > 1e18L ? ~0ull : static_cast<std::uint64_t>(s);
}

// Odometer step; false once every digit has wrapped.
inline bool advance_digits(std::vector<int>& digit, int base) {
  for (std::size_t s = digit.size(); s-- > 0;) {
    if (++digit[s] < base) return true;
    digit[s] = 0;
  }
  return false;
}

template <class C>
void sort_subrings(std::vector<Subring<C>>& v) {
  std::sort(v.begin(), v.end());
}

inline std::vector<Subring<FieldCtx>> subspace_scan(const FieldRing& ring, const EnumLimits& lim) {
  const auto& K = ring.coeffs();
  const int n = ring.n();
  const int q = static_cast<int>(K.order());
  const int cols = n - 1;  // columns 1..n-1 of m
  std::vector<Subring<FieldCtx>> out;
  std::uint64_t visited = 0;
  // Subspaces of m in RREF: a pivot set plus free entries to the right of
  // each pivot in non-pivot columns.
  for (std::uint32_t pivmask = 0; pivmask < (1u << cols); ++pivmask) {
    std::vector<int> pivots;
    for (int c = 0; c < cols; ++c)
      if ((pivmask >> c) & 1) pivots.push_back(c + 1);
    std::vector<std::pair<std::size_t, int>> free_slots;  // (row, column)
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!((pivmask >> (c - 1)) & 1)) free_slots.emplace_back(r, c);
    std::vector<int> digit(free_slots.size(), 0);
    for (;;) {
      if (++visited > lim.max_subspaces) throw TooLarge("subspace_scan exceeds its subspace budget");
      Basis<FieldCtx> rows;
      rows.push_back(ring.one());
      for (int pc : pivots) rows.push_back(ring.x_pow(pc));
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        rows[free_slots[s].first + 1].coeffs[static_cast<std::size_t>(free_slots[s].second)] =
            FieldElem{static_cast<std::uint32_t>(digit[s])};
      // rows is already in RREF with 1 first.
      if (is_multiplicatively_closed(ring, rows)) {
        out.emplace_back(ring, std::move(rows));
        if (out.size() > lim.max_subrings) throw TooLarge("too many subrings");
      }
      if (!detail::advance_digits(digit, q)) break;
    }
  }
  return out;
}

template <class C>
std::vector<Subring<C>> closure_bfs(const RingCtx<C>& ring, const EnumLimits& lim) {
  if (ambient_size(ring) > lim.max_ambient) throw TooLarge(ring.name() + " is too large for closure_bfs");
  // Adjoining r or r - (constant term) generates the same subring, so only
  // elements with zero constant term are adjoined.
  std::vector<RingElem<C>> candidates;
  for (auto& e : all_elements(ring))
    if (ring.coeffs().is_zero(e.coeffs.front()) && !ring.is_zero(e)) candidates.push_back(std::move(e));

  std::set<Basis<C>> seen;
  std::vector<Subring<C>> out;
  std::deque<Subring<C>> queue;
  auto start = prime_subring(ring);
  seen.insert(start.basis());
  queue.push_back(start);
  while (!queue.empty()) {
    Subring<C> R = std::move(queue.front());
    queue.pop_front();
    for (const auto& r : candidates) {
      if (R.contains(r)) continue;
      std::vector<RingElem<C>> gens = R.basis();
      gens.push_back(r);
      auto S = closure(ring, gens);
      if (seen.insert(S.basis()).second) {
        if (seen.size() > lim.max_subrings) throw TooLarge("too many subrings");
        queue.push_back(std::move(S));
      }
    }
    out.push_back(std::move(R));
  }
  return out;
}

template <class C>
std::vector<Subring<C>> minimal_ext(const RingCtx<C>& ring, const EnumLimits& lim) {
  std::vector<RingCtx<C>> chain{ring};
  while (auto q = chain.back().quotient()) chain.push_back(*q);
  std::vector<Subring<C>> cur{prime_subring(chain.back())};
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    std::vector<Subring<C>> next;
    for (const auto& B : cur) {
      auto ext = restricted_extension(B);
      next.push_back(ext.src);
      auto fam = lift_isomorphic(ext);
      for (auto& A : fam.lifts) next.push_back(std::move(A));
      if (next.size() > lim.max_subrings) throw TooLarge("too many subrings");
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Every subring of ring, duplicate-free and sorted by (dimension, basis).
template <class C>
std::vector<Subring<C>> enumerate_subrings(const RingCtx<C>& ring, EnumMethod method = EnumMethod::minimal_ext,
                                           const EnumLimits& lim = {}) {
  std::vector<Subring<C>> out;
  switch (method) {
    case EnumMethod::subspace_scan:
      if constexpr (RingCtx<C>::field_kind) {
        out = detail::subspace_scan(ring, lim);
      } else {
        throw InvalidArgument("subspace_scan applies to the field kind only");
      }
      break;
    case EnumMethod::closure_bfs: out = detail::closure_bfs(ring, lim); break;
    case EnumMethod::minimal_ext: out = detail::minimal_ext(ring, lim); break;
  }
  detail::sort_subrings(out);
  return out;
}

}  // namespace minext
