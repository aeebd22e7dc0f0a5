#pragma once

// The ambient rings F_q[x]/x^n and R_{n,N,k} = Z[x]/(p^N, x^n, p^k x^{n-1}),
// their partial valuation and the one-step quotient maps between them.
//
// Elements are dense coefficient vectors (index i = coefficient of x^i). In
// the Z/p^N kind the top coefficient is stored reduced mod p^k, so equality
// is coefficient-wise.

#include <compare>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "minext/coefficients.hpp"
#include "minext/errors.hpp"

namespace minext {

/// A value of the partial valuation: (lowest degree, nu1 of its coefficient).
/// Over a field the second component is always 0, so the order is the order
/// on degrees; over Z/p^N it is the lexicographic order of M_{n,N}.
struct Valuation {
  int deg = 0;
  int pval = 0;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

template <class C>
struct RingElem {
  std::vector<typename C::elem_type> coeffs;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

template <class C>
inline constexpr bool is_field_kind_v = std::is_same_v<C, FieldCtx>;

template <class C>
class RingCtx {
 public:
  using coeff_ctx = C;
  using coeff = typename C::elem_type;
  using elem = RingElem<C>;

  /// Field kind: F_q[x]/x^n.
  RingCtx(C coeffs, int n)
    requires is_field_kind_v<C>
      : coeffs_(std::move(coeffs)), n_(n), k_(1) {
    if (n < 1) throw InvalidArgument("truncation degree n must be >= 1");
  }

  /// Z kind: R_{n,N,k}. k = 0 is normalized to R_{n-1,N,N}.
  RingCtx(C coeffs, int n, int k)
    requires(!is_field_kind_v<C>)
      : coeffs_(std::move(coeffs)), n_(n), k_(k) {
    const int N = coeffs_.N();
    if (k_ < 0 || k_ > N) throw InvalidArgument("tail exponent k must lie in [0, N]");
    if (k_ == 0) {
      --n_;
      k_ = N;
    }
    if (n_ < 1) throw InvalidArgument("truncation degree n must be >= 1");
    if (n_ == 1 && k_ != N) throw InvalidArgument("R_{1,N,k} is only defined for k = N");
  }

  static constexpr bool field_kind = is_field_kind_v<C>;

  const C& coeffs() const { return coeffs_; }
  int n() const { return n_; }
  /// Tail exponent (always 1 in the field kind).
  int k() const { return k_; }
  int N() const { return coeffs_.chain_length(); }

  /// Chain length of column c: the coefficient of x^c lives in C / p^{col_exp(c)}.
  int col_exp(int c) const { return c == n_ - 1 ? k_ : coeffs_.chain_length(); }

  coeff reduce(int c, coeff a) const {
    if constexpr (field_kind) {
      return a;
    } else {
      return c == n_ - 1 ? coeffs_.reduce_pow_p(a, k_) : a;
    }
  }

  elem zero() const { return elem{std::vector<coeff>(static_cast<std::size_t>(n_), coeffs_.zero())}; }
  elem one() const { return monomial(0, coeffs_.one()); }
  elem monomial(int i, coeff c) const {
    elem r = zero();
    if (i < 0 || i >= n_) throw InvalidArgument("exponent out of range");
    r.coeffs[static_cast<std::size_t>(i)] = reduce(i, c);
    return r;
  }
  elem x_pow(int i) const { return monomial(i, coeffs_.one()); }

  bool contains(const elem& a) const {
    if (static_cast<int>(a.coeffs.size()) != n_) return false;
    for (int c = 0; c < n_; ++c)
      if (reduce(c, a.coeffs[static_cast<std::size_t>(c)]) != a.coeffs[static_cast<std::size_t>(c)]) return false;
    return true;
  }

  elem add(const elem& a, const elem& b) const {
    check(a, b);
    elem r = a;
    for (int c = 0; c < n_; ++c) {
      auto& x = r.coeffs[static_cast<std::size_t>(c)];
      x = reduce(c, coeffs_.add(x, b.coeffs[static_cast<std::size_t>(c)]));
    }
    return r;
  }
  elem neg(const elem& a) const {
    elem r = a;
    for (int c = 0; c < n_; ++c) {
      auto& x = r.coeffs[static_cast<std::size_t>(c)];
      x = reduce(c, coeffs_.neg(x));
    }
    return r;
  }
  elem sub(const elem& a, const elem& b) const { return add(a, neg(b)); }
  elem scale(coeff s, const elem& a) const {
    elem r = a;
    for (int c = 0; c < n_; ++c) {
      auto& x = r.coeffs[static_cast<std::size_t>(c)];
      x = reduce(c, coeffs_.mul(s, x));
    }
    return r;
  }
  elem mul(const elem& a, const elem& b) const {
    check(a, b);
    elem r = zero();
    for (int i = 0; i < n_; ++i) {
      const coeff ai = a.coeffs[static_cast<std::size_t>(i)];
      if (coeffs_.is_zero(ai)) continue;
      for (int j = 0; i + j < n_; ++j) {
        const coeff bj = b.coeffs[static_cast<std::size_t>(j)];
        if (coeffs_.is_zero(bj)) continue;
        auto& x = r.coeffs[static_cast<std::size_t>(i + j)];
        x = coeffs_.add(x, coeffs_.mul(ai, bj));
      }
    }
    auto& top = r.coeffs.back();
    top = reduce(n_ - 1, top);
    return r;
  }

  bool is_zero(const elem& a) const {
    for (const auto& c : a.coeffs)
      if (!coeffs_.is_zero(c)) return false;
    return true;
  }

  /// Lowest nonzero degree and nu1 of its coefficient. Throws on zero.
  Valuation nu(const elem& a) const {
    for (int c = 0; c < static_cast<int>(a.coeffs.size()); ++c) {
      const coeff x = a.coeffs[static_cast<std::size_t>(c)];
      if (!coeffs_.is_zero(x)) return {c, coeffs_.nu1(x)};
    }
    throw UndefinedValuation("valuation of zero");
  }

  bool is_unit(const elem& a) const { return !a.coeffs.empty() && coeffs_.is_unit(a.coeffs.front()); }

  /// The quotient of this ring by its unique minimal ideal, or nullopt for
  /// the base ring (n = 1). Field: x^{n-1} = 0; Z kind: p^{k-1} x^{n-1} = 0.
  std::optional<RingCtx> quotient() const {
    if (n_ == 1) return std::nullopt;
    if constexpr (field_kind) {
      return RingCtx(coeffs_, n_ - 1);
    } else {
      return RingCtx(coeffs_, n_, k_ - 1);
    }
  }

  /// The ring whose quotient() is this one.
  RingCtx extension() const {
    if constexpr (field_kind) {
      return RingCtx(coeffs_, n_ + 1);
    } else {
      if (k_ < N() && n_ > 1) return RingCtx(coeffs_, n_, k_ + 1);
      return RingCtx(coeffs_, n_ + 1, 1);
    }
  }

  /// Generator of the kernel of this -> quotient(): x^{n-1} resp. p^{k-1} x^{n-1}.
  elem kernel_generator() const {
    if constexpr (field_kind) {
      return x_pow(n_ - 1);
    } else {
      return monomial(n_ - 1, coeffs_.pow_p(k_ - 1));
    }
  }

  /// Image of a under this -> quotient().
  elem project(const elem& a) const {
    auto dst = quotient();
    if (!dst) throw NotAQuotient("the base ring has no proper one-step quotient");
    check(a, a);
    elem r = a;
    if (dst->n() < n_) {
      r.coeffs.pop_back();
    } else {
      r.coeffs.back() = dst->reduce(n_ - 1, r.coeffs.back());
    }
    return r;
  }

  /// Preimage representative of b (an element of quotient()) in this ring.
  elem lift(const elem& b) const {
    auto dst = quotient();
    if (!dst) throw NotAQuotient("the base ring has no proper one-step quotient");
    if (static_cast<int>(b.coeffs.size()) != dst->n()) throw CtxMismatch("element does not belong to the quotient ring");
    elem r = b;
    r.coeffs.resize(static_cast<std::size_t>(n_), coeffs_.zero());
    return r;
  }

  /// Length as a module: log_q of the size for fields, log_p for the Z kind.
  int length() const {
    int s = 0;
    for (int c = 0; c < n_; ++c) s += col_exp(c);
    return s;
  }

  std::string name() const {
    if constexpr (field_kind) {
      return "F_" + std::to_string(coeffs_.order()) + "[x]/x^" + std::to_string(n_);
    } else {
      return "R_{" + std::to_string(n_) + "," + std::to_string(N()) + "," + std::to_string(k_) + "} (p=" +
             std::to_string(coeffs_.p()) + ")";
    }
  }

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.coeffs_ == b.coeffs_ && a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  void check(const elem& a, const elem& b) const {
    if (static_cast<int>(a.coeffs.size()) != n_ || static_cast<int>(b.coeffs.size()) != n_)
      throw CtxMismatch("element length does not match " + name());
  }

  C coeffs_;
  int n_;
  int k_;
};

using FieldRing = RingCtx<FieldCtx>;
using ZRing = RingCtx<ZpNCtx>;

enum class RingOp { add, sub, mul };

template <class C>
RingElem<C> ring_op(const RingCtx<C>& ctx, RingOp op, const RingElem<C>& a, const RingElem<C>& b) {
  switch (op) {
    case RingOp::add: return ctx.add(a, b);
    case RingOp::sub: return ctx.sub(a, b);
    case RingOp::mul: return ctx.mul(a, b);
  }
  return ctx.zero();
}

template <class C>
Valuation nu(const RingCtx<C>& ctx, const RingElem<C>& a) {
  return ctx.nu(a);
}

template <class C>
bool is_unit(const RingCtx<C>& ctx, const RingElem<C>& a) {
  return ctx.is_unit(a);
}

/// The quotient map src -> dst; dst must be src's one-step quotient.
template <class C>
RingElem<C> project(const RingCtx<C>& src, const RingCtx<C>& dst, const RingElem<C>& a) {
  auto q = src.quotient();
  if (!q || !(*q == dst)) throw NotAQuotient(dst.name() + " is not the one-step quotient of " + src.name());
  return src.project(a);
}

/// Every element of a ring, in lexicographic coefficient order. Desk scale only.
template <class C>
std::vector<RingElem<C>> all_elements(const RingCtx<C>& ctx, std::size_t limit = 1u << 20) {
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 1;
  for (int c = 0; c < ctx.n(); ++c) {
    std::uint64_t s;
    if constexpr (RingCtx<C>::field_kind) {
      s = ctx.coeffs().order();
    } else {
      s = detail::ipow(ctx.coeffs().p(), static_cast<unsigned>(ctx.col_exp(c)));
    }
    sizes.push_back(s);
    total *= s;
    if (total > limit) throw TooLarge("ring " + ctx.name() + " has too many elements to list");
  }
  std::vector<RingElem<C>> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    RingElem<C> e = ctx.zero();
    std::uint64_t v = idx;
    for (int c = ctx.n() - 1; c >= 0; --c) {
      e.coeffs[static_cast<std::size_t>(c)] = {static_cast<std::uint32_t>(v % sizes[static_cast<std::size_t>(c)])};
      v /= sizes[static_cast<std::size_t>(c)];
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace minext
