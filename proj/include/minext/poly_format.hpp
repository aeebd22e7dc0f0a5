#pragma once

// Text form of ring elements:
//
//   poly  := term ('+' term)* | '0'
//   term  := coeff | coeff '*'? 'x' ('^' uint)? | 'x' ('^' uint)?
//   coeff := uint | '[' uint (',' uint)* ']'
//
// Whitespace is ignored. Bracketed coefficients are coordinates in the basis
// 1, t, ..., t^{e-1} of an extension field.

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "minext/errors.hpp"
#include "minext/truncated_ring.hpp"

namespace minext {

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::uint64_t uint() {
    if (!at_digit()) fail("expected an unsigned integer");
    std::uint64_t v = 0;
    while (at_digit()) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (1ull << 40)) fail("integer too large");
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

// Parses a sum of terms into (exponent, coefficient) pairs with a caller
// supplied coefficient reader.
template <class ReadCoeff>
std::vector<std::pair<std::uint64_t, typename std::invoke_result_t<ReadCoeff, PolyLexer&>>> parse_terms(
    PolyLexer& lx, char var_a, char var_b, ReadCoeff&& read_coeff) {
  using Coeff = std::invoke_result_t<ReadCoeff, PolyLexer&>;
  std::vector<std::pair<std::uint64_t, Coeff>> terms;
  if (lx.done()) lx.fail("empty polynomial");
  do {
    std::optional<Coeff> c;
    if (lx.at_digit() || lx.peek() == '[') {
      c = read_coeff(lx);
      const bool star = lx.accept('*');
      if (lx.peek() != var_a && lx.peek() != var_b) {
        if (star) lx.fail("expected variable after '*'");
        terms.emplace_back(0, *c);
        continue;
      }
    }
    if (!lx.accept(var_a) && !lx.accept(var_b)) lx.fail("expected a term");
    std::uint64_t e = 1;
    if (lx.accept('^')) e = lx.uint();
    terms.emplace_back(e, c ? *c : read_coeff.one());
  } while (lx.accept('+'));
  if (!lx.done()) lx.fail("unexpected character");
  return terms;
}

template <class C>
struct CoeffReader {
  const C& ctx;
  typename C::elem_type one() const { return ctx.one(); }
  typename C::elem_type operator()(PolyLexer& lx) const {
    if (lx.accept('[')) {
      if constexpr (is_field_kind_v<C>) {
        std::vector<std::uint32_t> coords;
        do {
          const auto v = lx.uint();
          if (v >= ctx.p()) lx.fail("field coordinate out of range");
          coords.push_back(static_cast<std::uint32_t>(v));
        } while (lx.accept(','));
        lx.expect(']');
        if (coords.size() > ctx.degree()) lx.fail("too many field coordinates");
        return ctx.from_coords(coords);
      } else {
        lx.fail("bracketed coefficients need an extension field");
      }
    }
    return ctx.from_int(static_cast<std::int64_t>(lx.uint()));
  }
};

struct FpReader {
  std::uint32_t p;
  std::uint32_t one() const { return 1; }
  std::uint32_t operator()(PolyLexer& lx) const {
    if (lx.peek() == '[') lx.fail("bracketed coefficients are not allowed here");
    return static_cast<std::uint32_t>(lx.uint() % p);
  }
};

}  // namespace detail

/// Parses an element of ctx. Exponents must lie in [0, n-1].
template <class C>
RingElem<C> parse_poly(const RingCtx<C>& ctx, std::string_view text) {
  detail::PolyLexer lx(text);
  const auto terms = detail::parse_terms(lx, 'x', 'x', detail::CoeffReader<C>{ctx.coeffs()});
  RingElem<C> r = ctx.zero();
  for (const auto& [e, c] : terms) {
    if (e >= static_cast<std::uint64_t>(ctx.n()))
      throw ParseError("exponent " + std::to_string(e) + " out of range for " + ctx.name());
    r = ctx.add(r, ctx.monomial(static_cast<int>(e), c));
  }
  return r;
}

/// Parses a polynomial over F_p in t (or x); returns low-to-high coefficients.
inline std::vector<std::uint32_t> parse_fp_poly(std::string_view text, std::uint32_t p) {
  detail::PolyLexer lx(text);
  const auto terms = detail::parse_terms(lx, 't', 'x', detail::FpReader{p});
  std::vector<std::uint32_t> out;
  for (const auto& [e, c] : terms) {
    if (e > 64) throw ParseError("modulus degree too large");
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] = (out[e] + c) % p;
  }
  detail::trim(out);
  return out;
}

/// Splits "g1;g2;..." and parses each generator. Empty pieces are skipped.
template <class C>
std::vector<RingElem<C>> parse_poly_list(const RingCtx<C>& ctx, std::string_view text) {
  std::vector<RingElem<C>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    bool blank = true;
    for (char ch : piece)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back(parse_poly(ctx, piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <class C>
std::string format_coeff(const C& ctx, typename C::elem_type c) {
  if constexpr (is_field_kind_v<C>) {
    if (ctx.degree() > 1) {
      std::string s = "[";
      const auto coords = ctx.coords(c);
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
      }
      return s + "]";
    }
    return std::to_string(c.code);
  } else {
    return std::to_string(c.value);
  }
}

/// Inverse of parse_poly: ascending terms, unit coefficients omitted before x.
template <class C>
std::string format_poly(const RingCtx<C>& ctx, const RingElem<C>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const auto c = a.coeffs[i];
    if (ctx.coeffs().is_zero(c)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += format_coeff(ctx.coeffs(), c);
      continue;
    }
    if (c != ctx.coeffs().one()) out += format_coeff(ctx.coeffs(), c) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace minext
