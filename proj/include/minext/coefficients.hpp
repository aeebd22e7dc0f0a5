#pragma once

// Coefficient systems for the truncated rings: the finite field F_q and the
// chain ring Z/p^N. Both expose the same small interface so the linear
// algebra and subring code can be written once:
//
//   elem_type, zero(), one(), from_int(), add/sub/neg/mul, is_unit(),
//   nu1(), pow_p(j), unit_part_inverse(), quotient_by_pow_p(),
//   residue_reps(), chain_length()
//
// A field is treated as a chain ring of length 1 (maximal ideal zero), so
// p^0 = 1 and p^j = 0 for j >= 1.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minext/errors.hpp"

namespace minext {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return 0;
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// Dense polynomials over F_p, coefficient i = coefficient of t^i.
using PolyFp = std::vector<std::uint32_t>;

inline void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
inline PolyFp poly_mod(PolyFp a, const PolyFp& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of index.
inline PolyFp monic_from_index(std::uint64_t index, std::size_t d, std::uint32_t p) {
  PolyFp f(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[d] = 1;
  return f;
}

// Trial division by every monic polynomial of degree 1 .. deg/2.
inline bool is_irreducible(const PolyFp& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Element of F_q, stored as the base-p integer of its coordinate vector in
/// the basis 1, t, ..., t^{e-1}.
struct FieldElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// The finite field F_{p^e} = F_p[t]/(modulus). Immutable after construction.
class FieldCtx {
 public:
  using elem_type = FieldElem;

  /// F_p for prime p.
  static FieldCtx prime(std::uint32_t p) { return FieldCtx(p, {0, 1}); }

  /// F_{p^e} from an explicit monic irreducible modulus (low-to-high coefficients).
  static FieldCtx extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    return FieldCtx(p, std::move(modulus));
  }

  /// F_q with the least irreducible modulus (ordering monic polynomials by the
  /// base-p integer of their coefficients). For q = 4, 8, 9 these are
  /// t^2+t+1, t^3+t+1 and t^2+1.
  static FieldCtx of_order(std::uint64_t q) {
    std::uint32_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = static_cast<std::uint32_t>(d);
        break;
      }
    }
    if (p == 0) throw InvalidArgument("field order must be a prime power >= 2");
    std::size_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
    if (e == 1) return prime(p);
    return extension(p, default_modulus(p, e));
  }

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::size_t e) {
    const std::uint64_t count = detail::ipow(p, static_cast<unsigned>(e));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto f = detail::monic_from_index(idx, e, p);
      if (f[0] != 0 && detail::is_irreducible(f, p)) return f;
    }
    throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
  }

  std::uint32_t p() const { return p_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::vector<std::uint32_t> coords(FieldElem a) const {
    std::vector<std::uint32_t> c(degree());
    std::uint32_t v = a.code;
    for (auto& x : c) {
      x = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElem from_coords(std::span<const std::uint32_t> c) const {
    if (c.size() > degree()) throw InvalidArgument("too many field coordinates");
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
    return {code};
  }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (tables_) return {tables_->add[a.code * q_ + b.code]};
    return add_direct(a, b);
  }
  FieldElem neg(FieldElem a) const {
    std::uint32_t code = 0, scale = 1, v = a.code;
    for (std::size_t i = 0; i < degree(); ++i) {
      code += ((p_ - v % p_) % p_) * scale;
      v /= p_;
      scale *= p_;
    }
    return {code};
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (tables_) return {tables_->mul[a.code * q_ + b.code]};
    return mul_direct(a, b);
  }
  FieldElem inv(FieldElem a) const {
    if (a.code == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    if (degree() == 1) return {static_cast<std::uint32_t>(detail::inverse_mod(a.code, p_))};
    // a^(q-2)
    FieldElem result = one(), base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  bool is_zero(FieldElem a) const { return a.code == 0; }
  bool is_unit(FieldElem a) const { return a.code != 0; }
  int nu1(FieldElem a) const {
    if (a.code == 0) throw UndefinedValuation("valuation of zero");
    return 0;
  }
  /// Length of the chain of ideals: 1 for a field.
  int chain_length() const { return 1; }
  FieldElem pow_p(int j) const { return j == 0 ? one() : zero(); }
  FieldElem unit_part_inverse(FieldElem a) const { return inv(a); }
  /// s with t - s * p^j reduced; for a field (j = 0) that is t itself.
  FieldElem quotient_by_pow_p(FieldElem t, int j) const { return j == 0 ? t : zero(); }
  /// Reduction of a into the ideal quotient mod p^j; identity in a field for j >= 1.
  FieldElem reduce_pow_p(FieldElem a, int j) const { return j == 0 ? zero() : a; }
  /// Representatives of the residue field.
  std::vector<FieldElem> residue_reps() const {
    std::vector<FieldElem> r(q_);
    for (std::uint32_t i = 0; i < q_; ++i) r[i] = {i};
    return r;
  }
  std::uint32_t residue_size() const { return q_; }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> add, mul;
  };

  FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_)) throw InvalidArgument(std::to_string(p_) + " is not prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
      throw InvalidArgument("modulus must be monic of degree >= 1");
    for (auto c : modulus_)
      if (c >= p_) throw InvalidArgument("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus_, p_)) throw InvalidArgument("modulus is reducible over F_p");
    const std::uint64_t q = detail::ipow(p_, static_cast<unsigned>(degree()));
    if (q >= (1ull << 31)) throw TooLarge("field order exceeds 2^31");
    q_ = static_cast<std::uint32_t>(q);
    if (q_ <= 256) {
      auto t = std::make_shared<Tables>();
      t->add.resize(static_cast<std::size_t>(q_) * q_);
      t->mul.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
          t->add[a * q_ + b] = add_direct({a}, {b}).code;
          t->mul[a * q_ + b] = mul_direct({a}, {b}).code;
        }
      tables_ = std::move(t);
    }
  }

  FieldElem add_direct(FieldElem a, FieldElem b) const {
    std::uint32_t code = 0, scale = 1, x = a.code, y = b.code;
    for (std::size_t i = 0; i < degree(); ++i) {
      code += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return {code};
  }

  FieldElem mul_direct(FieldElem a, FieldElem b) const {
    if (degree() == 1)
      return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
    const auto x = coords(a), y = coords(b);
    detail::PolyFp prod(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    const auto r = detail::poly_mod(std::move(prod), modulus_, p_);
    return from_coords(r);
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t q_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Residue in [0, p^N).
struct ZpNElem {
  std::uint32_t value = 0;
  friend auto operator<=>(const ZpNElem&, const ZpNElem&) = default;
};

/// The ring Z/p^N with its valuation nu1(u p^m) = m.
class ZpNCtx {
 public:
  using elem_type = ZpNElem;

  ZpNCtx(std::uint32_t p, int N) : p_(p), N_(N) {
    if (!detail::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (N < 1) throw InvalidArgument("N must be >= 1");
    const std::uint64_t m = detail::ipow(p, static_cast<unsigned>(N));
    if (m >= (1ull << 32)) throw TooLarge("p^N must fit below 2^32");
    modulus_ = static_cast<std::uint32_t>(m);
  }

  std::uint32_t p() const { return p_; }
  int N() const { return N_; }
  std::uint32_t modulus() const { return modulus_; }

  ZpNElem zero() const { return {0}; }
  ZpNElem one() const { return {modulus_ == 1 ? 0u : 1u}; }
  ZpNElem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += modulus_;
    return {static_cast<std::uint32_t>(r)};
  }

  ZpNElem add(ZpNElem a, ZpNElem b) const {
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + b.value) % modulus_)};
  }
  ZpNElem neg(ZpNElem a) const { return {a.value == 0 ? 0 : modulus_ - a.value}; }
  ZpNElem sub(ZpNElem a, ZpNElem b) const { return add(a, neg(b)); }
  ZpNElem mul(ZpNElem a, ZpNElem b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % modulus_)};
  }
  ZpNElem inv(ZpNElem a) const {
    if (a.value % p_ == 0)
      throw NotAUnit(std::to_string(a.value) + " is not a unit mod " + std::to_string(modulus_));
    return {static_cast<std::uint32_t>(detail::inverse_mod(a.value, modulus_))};
  }

  bool is_zero(ZpNElem a) const { return a.value == 0; }
  bool is_unit(ZpNElem a) const { return a.value % p_ != 0; }
  int nu1(ZpNElem a) const {
    if (a.value == 0) throw UndefinedValuation("nu1 of zero");
    int m = 0;
    for (std::uint32_t v = a.value; v % p_ == 0; v /= p_) ++m;
    return m;
  }
  int chain_length() const { return N_; }
  ZpNElem pow_p(int j) const {
    if (j >= N_) return zero();
    return {static_cast<std::uint32_t>(detail::ipow(p_, static_cast<unsigned>(j)))};
  }
  ZpNElem unit_part_inverse(ZpNElem a) const {
    std::uint32_t u = a.value;
    while (u % p_ == 0) u /= p_;
    return inv({u});
  }
  ZpNElem quotient_by_pow_p(ZpNElem t, int j) const {
    return {t.value / static_cast<std::uint32_t>(detail::ipow(p_, static_cast<unsigned>(j)))};
  }
  /// a mod p^j as a representative in [0, p^j).
  ZpNElem reduce_pow_p(ZpNElem a, int j) const {
    if (j >= N_) return a;
    return {a.value % static_cast<std::uint32_t>(detail::ipow(p_, static_cast<unsigned>(j)))};
  }
  std::vector<ZpNElem> residue_reps() const {
    std::vector<ZpNElem> r(p_);
    for (std::uint32_t i = 0; i < p_; ++i) r[i] = {i};
    return r;
  }
  std::uint32_t residue_size() const { return p_; }

  friend bool operator==(const ZpNCtx& a, const ZpNCtx& b) { return a.p_ == b.p_ && a.N_ == b.N_; }

 private:
  std::uint32_t p_;
  int N_;
  std::uint32_t modulus_ = 1;
};

enum class ArithOp { add, sub, mul, inv };

/// One-shot field arithmetic; b is ignored for inv.
inline FieldElem field_op(const FieldCtx& ctx, ArithOp op, FieldElem a, FieldElem b = {}) {
  switch (op) {
    case ArithOp::add: return ctx.add(a, b);
    case ArithOp::sub: return ctx.sub(a, b);
    case ArithOp::mul: return ctx.mul(a, b);
    case ArithOp::inv: return ctx.inv(a);
  }
  return {};
}

inline ZpNElem zpn_op(const ZpNCtx& ctx, ArithOp op, ZpNElem a, ZpNElem b = {}) {
  switch (op) {
    case ArithOp::add: return ctx.add(a, b);
    case ArithOp::sub: return ctx.sub(a, b);
    case ArithOp::mul: return ctx.mul(a, b);
    case ArithOp::inv: return ctx.inv(a);
  }
  return {};
}

inline int nu1(const ZpNCtx& ctx, ZpNElem a) { return ctx.nu1(a); }

}  // namespace minext
