#pragma once

// Finite ordered partial monoids of exponents and their sub-partial-monoids
// ("shapes").
//
// Both exponent domains are modelled as grids of points (deg, pval):
//   Interval(n)   = [0, n-1]            -> Grid(n, 1, 1)
//   Grid(n, N, k) = [0, n-1] x [0, N-1] minus {(n-1, j) : j >= k}
// A sum is defined iff the componentwise sum is again a point of the domain.
// Grid(n, N, k) is the value set of the valuation on R_{n,N,k}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minext/errors.hpp"
#include "minext/truncated_ring.hpp"

namespace minext {

class ExpDomain {
 public:
  enum class Kind { interval, grid };

  static ExpDomain interval(int n) { return ExpDomain(Kind::interval, n, 1, 1); }

  /// Grid(n, N, k); k = 0 is normalized to Grid(n-1, N, N).
  static ExpDomain grid(int n, int N, int k) {
    if (k == 0) {
      --n;
      k = N;
    }
    return ExpDomain(Kind::grid, n, N, k);
  }
  static ExpDomain grid(int n, int N) { return grid(n, N, N); }

  /// The value set of the valuation on ctx.
  template <class C>
  static ExpDomain of(const RingCtx<C>& ctx) {
    if constexpr (RingCtx<C>::field_kind) {
      return interval(ctx.n());
    } else {
      return grid(ctx.n(), ctx.N(), ctx.k());
    }
  }

  Kind kind() const { return kind_; }
  bool is_grid() const { return kind_ == Kind::grid; }
  int n() const { return n_; }
  int N() const { return N_; }
  int k() const { return k_; }

  bool contains(Valuation v) const {
    if (v.deg < 0 || v.pval < 0 || v.deg >= n_ || v.pval >= N_) return false;
    return v.deg < n_ - 1 || v.pval < k_;
  }

  /// Partial addition.
  std::optional<Valuation> sum(Valuation a, Valuation b) const {
    const Valuation s{a.deg + b.deg, a.pval + b.pval};
    if (!contains(s)) return std::nullopt;
    return s;
  }

  /// All points in increasing (lexicographic) order.
  std::vector<Valuation> points() const {
    std::vector<Valuation> out;
    for (int d = 0; d < n_; ++d)
      for (int j = 0; j < N_; ++j)
        if (contains({d, j})) out.push_back({d, j});
    return out;
  }

  std::size_t size() const { return static_cast<std::size_t>((n_ - 1) * N_ + k_); }

  /// Bit position of a point in a packed subset; positions preserve the order.
  int index(Valuation v) const { return v.deg * N_ + v.pval; }
  Valuation point_at(int idx) const { return {idx / N_, idx % N_}; }

  std::string name() const {
    if (kind_ == Kind::interval) return "Interval(" + std::to_string(n_) + ")";
    return "Grid(" + std::to_string(n_) + "," + std::to_string(N_) + "," + std::to_string(k_) + ")";
  }

  friend bool operator==(const ExpDomain&, const ExpDomain&) = default;

 private:
  ExpDomain(Kind kind, int n, int N, int k) : kind_(kind), n_(n), N_(N), k_(k) {
    if (n_ < 1 || N_ < 1 || k_ < 1 || k_ > N_) throw InvalidArgument("invalid exponent domain");
    if (n_ == 1 && k_ != N_) throw InvalidArgument("Grid(1,N,k) needs k = N");
  }

  Kind kind_;
  int n_, N_, k_;
};

/// A sub-partial-monoid of a domain, stored as its sorted points.
struct Shape {
  ExpDomain domain;
  std::vector<Valuation> elems;

  bool contains(Valuation v) const { return std::binary_search(elems.begin(), elems.end(), v); }
  std::size_t size() const { return elems.size(); }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend bool operator<(const Shape& a, const Shape& b) { return a.elems < b.elems; }
};

/// "[0,2,3]" for Interval shapes, "[[0,0],[0,1]]" for Grid shapes.
inline std::string to_string(const ExpDomain& domain, const std::vector<Valuation>& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    if (domain.is_grid()) {
      out += "[" + std::to_string(pts[i].deg) + "," + std::to_string(pts[i].pval) + "]";
    } else {
      out += std::to_string(pts[i].deg);
    }
  }
  return out + "]";
}

inline std::string to_string(const Shape& s) { return to_string(s.domain, s.elems); }

namespace detail {

inline std::vector<Valuation> sorted_unique(std::vector<Valuation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// True iff s contains 0, lies in the domain and is closed under defined sums.
inline bool is_shape(const ExpDomain& domain, const std::vector<Valuation>& s) {
  const std::set<Valuation> set(s.begin(), s.end());
  if (!set.contains(Valuation{0, 0})) return false;
  for (auto a : set) {
    if (!domain.contains(a)) return false;
    for (auto b : set) {
      if (auto c = domain.sum(a, b); c && !set.contains(*c)) return false;
    }
  }
  return true;
}

/// Validated construction of a shape.
inline Shape make_shape(const ExpDomain& domain, std::vector<Valuation> elems) {
  elems = detail::sorted_unique(std::move(elems));
  if (!is_shape(domain, elems)) throw InvalidArgument("not a sub-partial-monoid of " + domain.name());
  return Shape{domain, std::move(elems)};
}

inline Shape make_interval_shape(int n, const std::vector<int>& exps) {
  std::vector<Valuation> v;
  for (int e : exps) v.push_back({e, 0});
  return make_shape(ExpDomain::interval(n), std::move(v));
}

/// Contains nu(p^i) = (0, i) for every 0 <= i <= N-1. Grid domains only.
inline bool is_realizable_zshape(const ExpDomain& domain, const Shape& s) {
  if (!domain.is_grid()) throw InvalidArgument("realizability is defined for Grid domains");
  for (int i = 0; i < domain.N(); ++i) {
    const Valuation v{0, i};
    if (domain.contains(v) && !s.contains(v)) return false;
  }
  return true;
}

/// Every shape of an Interval domain is the exponent set of its monomial algebra.
inline bool is_realizable(const Shape& s) {
  return s.domain.is_grid() ? is_realizable_zshape(s.domain, s) : true;
}

/// Nonzero elements that are not a defined sum of two nonzero elements.
inline std::vector<Valuation> minimal_generators(const Shape& s) {
  std::vector<Valuation> gens;
  for (auto g : s.elems) {
    if (g == Valuation{0, 0}) continue;
    bool decomposable = false;
    for (auto a : s.elems) {
      if (a == Valuation{0, 0}) continue;
      if (a > g) break;
      const Valuation b{g.deg - a.deg, g.pval - a.pval};
      if (b.deg < 0 || b.pval < 0 || b == Valuation{0, 0}) continue;
      if (s.contains(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(g);
  }
  return gens;
}

/// d(s): size of the minimal generating set.
inline int generator_count(const Shape& s) { return static_cast<int>(minimal_generators(s).size()); }

/// Smallest sub-partial-monoid containing gens: fixpoint of defined sums.
inline std::vector<Valuation> generated_set(const ExpDomain& domain, const std::vector<Valuation>& gens) {
  std::set<Valuation> set{Valuation{0, 0}};
  for (auto g : gens)
    if (domain.contains(g)) set.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Valuation> cur(set.begin(), set.end());
    for (auto a : cur)
      for (auto b : cur)
        if (auto c = domain.sum(a, b); c && set.insert(*c).second) grew = true;
  }
  return {set.begin(), set.end()};
}

/// e_n(E): 0 at n = 1; strip n-1 when present; otherwise add d(E).
inline int e_bound(int n, const Shape& s) {
  if (s.domain.is_grid() || s.domain.n() != n) throw InvalidArgument("e_bound needs a shape of Interval(n)");
  std::vector<Valuation> cur = s.elems;
  int total = 0;
  for (int m = n; m > 1; --m) {
    auto it = std::find(cur.begin(), cur.end(), Valuation{m - 1, 0});
    if (it != cur.end()) {
      cur.erase(it);
    } else {
      total += generator_count(Shape{ExpDomain::interval(m), cur});
    }
  }
  return total;
}

/// The generator nu(p) = (0,1) never contributes to m/(m^2 + pR); it exists
/// only when N >= 2.
inline int z_generator_offset(int N) { return N >= 2 ? 1 : 0; }

/// eps_{n,N,k}(D): 0 at n = 1; strip (n-1, k-1) when present, otherwise add
/// d(D) - 1; k = 0 continues at (n-1, N, N).
inline int eps_bound(int n, int N, int k, const Shape& s) {
  if (!s.domain.is_grid() || !(s.domain == ExpDomain::grid(n, N, k)))
    throw InvalidArgument("eps_bound needs a shape of Grid(n,N,k)");
  if (!is_realizable_zshape(s.domain, s)) throw InvalidArgument("eps_bound needs a realizable shape");
  if (k == 0) {
    --n;
    k = N;
  }
  std::vector<Valuation> cur = s.elems;
  int total = 0;
  while (n > 1) {
    auto it = std::find(cur.begin(), cur.end(), Valuation{n - 1, k - 1});
    if (it != cur.end()) {
      cur.erase(it);
    } else {
      total += generator_count(Shape{ExpDomain::grid(n, N, k), cur}) - z_generator_offset(N);
    }
    if (--k == 0) {
      --n;
      k = N;
    }
  }
  return total;
}

/// Recursion bound of the right flavour for the shape's domain.
inline int shape_bound_exp(const Shape& s) {
  const auto& d = s.domain;
  return d.is_grid() ? eps_bound(d.n(), d.N(), d.k(), s) : e_bound(d.n(), s);
}

/// All shapes of a domain (at most 24 points), sorted lexicographically.
inline std::vector<Shape> enumerate_shapes(const ExpDomain& domain, bool realizable_only = false) {
  const auto pts = domain.points();
  if (pts.size() > 24) throw TooLarge(domain.name() + " has more than 24 points");
  const int N = domain.N();
  const int width = domain.n() * N;
  const std::uint64_t dom_mask = [&] {
    std::uint64_t m = 0;
    for (auto v : pts) m |= 1ull << domain.index(v);
    return m;
  }();
  // low[j]: positions whose pval stays below N - j.
  std::vector<std::uint64_t> low(static_cast<std::size_t>(N), 0);
  for (int j = 0; j < N; ++j)
    for (int idx = 0; idx < width; ++idx)
      if (idx % N < N - j) low[static_cast<std::size_t>(j)] |= 1ull << idx;

  std::uint64_t required = 1;  // the origin
  if (realizable_only && domain.is_grid())
    for (int i = 0; i < N; ++i)
      if (domain.contains({0, i})) required |= 1ull << domain.index({0, i});

  std::vector<int> free_pos;
  for (auto v : pts) {
    const int idx = domain.index(v);
    if (!((required >> idx) & 1)) free_pos.push_back(idx);
  }

  std::vector<Shape> out;
  const std::uint64_t combos = 1ull << free_pos.size();
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t set = required;
    for (std::size_t b = 0; b < free_pos.size(); ++b)
      if ((c >> b) & 1) set |= 1ull << free_pos[b];
    bool closed = true;
    for (std::uint64_t rest = set & ~1ull; rest && closed; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const std::uint64_t shifted = ((set & low[static_cast<std::size_t>(i % N)]) << i) & dom_mask;
      if (shifted & ~set) closed = false;
    }
    if (!closed) continue;
    Shape s{domain, {}};
    for (std::uint64_t rest = set; rest; rest &= rest - 1) s.elems.push_back(domain.point_at(std::countr_zero(rest)));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minext
