#pragma once

// Invariant suites over one ambient ring. Each check records how many cases
// it examined and up to a handful of counterexample witnesses.
//
//   valuation  strictness, non-Archimedean law and monomial-likeness of nu,
//              plus the coefficient-level facts they rest on
//   bounds     census bounds, shape closure, generator sets, realizability
//   lifts      lift families against an independently enumerated extension
//   props      oracle agreement and the structural laws over every subring

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minext/census.hpp"
#include "minext/poly_format.hpp"

namespace minext {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> witnesses;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  bool passed() const { return failures == 0; }

  void record(bool ok, const std::string& witness = {}) {
    ++cases;
    if (ok) return;
    ++failures;
    if (witnesses.size() < 5) witnesses.push_back(witness);
  }
};

enum class Suite { valuation, bounds, lifts, props, all };

inline std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "valuation") return Suite::valuation;
  if (s == "bounds") return Suite::bounds;
  if (s == "lifts") return Suite::lifts;
  if (s == "props") return Suite::props;
  if (s == "all") return Suite::all;
  return std::nullopt;
}

template <class C>
std::string format_subring(const Subring<C>& R) {
  std::string out = "{";
  for (std::size_t i = 0; i < R.basis().size(); ++i) {
    if (i) out += ", ";
    out += format_poly(R.ctx(), R.basis()[i]);
  }
  return out + "} in " + R.ctx().name();
}

inline std::string format_valuation(Valuation v, bool grid) {
  if (!grid) return std::to_string(v.deg);
  return "(" + std::to_string(v.deg) + "," + std::to_string(v.pval) + ")";
}

/// Runs the suites on one ring; enumerations are computed once and shared.
template <class C>
class Verifier {
 public:
  using Ring = RingCtx<C>;
  static constexpr bool field_kind = Ring::field_kind;

  explicit Verifier(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }

  /// Subrings via the lifting recursion.
  const std::vector<Subring<C>>& subrings() {
    if (!subrings_) subrings_ = enumerate_subrings(ring_, EnumMethod::minimal_ext);
    return *subrings_;
  }
  /// Subrings of the one-step extension via an independent oracle.
  const std::vector<Subring<C>>& extension_oracle() {
    if (!ext_oracle_) ext_oracle_ = enumerate_subrings(ring_.extension(), oracle_method());
    return *ext_oracle_;
  }
  const std::vector<CensusRow<C>>& census_rows() {
    if (!census_) census_ = census_of(subrings());
    return *census_;
  }

  static EnumMethod oracle_method() { return field_kind ? EnumMethod::subspace_scan : EnumMethod::closure_bfs; }

  std::vector<CheckResult> run(Suite s) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (s == Suite::valuation || s == Suite::all) append(valuation());
    if (s == Suite::bounds || s == Suite::all) append(bounds());
    if (s == Suite::lifts || s == Suite::all) append(lifts());
    if (s == Suite::props || s == Suite::all) append(props());
    return out;
  }

  // ---------------------------------------------------------------- valuation

  std::vector<CheckResult> valuation() {
    std::vector<CheckResult> out;
    const auto& K = ring_.coeffs();
    const auto dom = ExpDomain::of(ring_);
    const bool grid = dom.is_grid();
    const auto elems = all_elements(ring_, 1u << 13);
    std::vector<typename C::elem_type> units;
    for (auto u : all_coeffs())
      if (K.is_unit(u)) units.push_back(u);

    CheckResult strict{"nu_strict"}, nonarch{"nu_non_archimedean"}, monomial{"nu_monomial_like"};
    auto show = [&](const RingElem<C>& a) { return format_poly(ring_, a); };
    for (const auto& a : elems) {
      if (ring_.is_zero(a)) continue;
      const Valuation va = ring_.nu(a);
      for (const auto& b : elems) {
        if (ring_.is_zero(b)) continue;
        const Valuation vb = ring_.nu(b);
        if (auto s = dom.sum(va, vb)) {
          const auto ab = ring_.mul(a, b);
          strict.record(!ring_.is_zero(ab) && ring_.nu(ab) == *s, "a=" + show(a) + " b=" + show(b));
        }
        const auto sum = ring_.add(a, b);
        if (!ring_.is_zero(sum)) {
          const Valuation vs = ring_.nu(sum);
          const Valuation lo = std::min(va, vb);
          nonarch.record(vs >= lo && (va == vb || vs == lo), "a=" + show(a) + " b=" + show(b));
        }
        if (va == vb) {
          bool found = false;
          for (auto u : units) {
            const auto diff = ring_.sub(a, ring_.scale(u, b));
            if (ring_.is_zero(diff) || ring_.nu(diff) > va) {
              found = true;
              break;
            }
          }
          monomial.record(found, "a=" + show(a) + " b=" + show(b) + " nu=" + format_valuation(va, grid));
        }
      }
    }
    out.push_back(strict);
    out.push_back(nonarch);
    out.push_back(monomial);
    append_coefficient_checks(out);
    return out;
  }

  // ------------------------------------------------------------------- bounds

  std::vector<CheckResult> bounds() {
    std::vector<CheckResult> out;
    CheckResult bound{"census_bound"}, is_shape_c{"exponent_set_is_shape"}, gens{"minimal_generators_generate"},
        minimal{"minimal_generators_minimal"}, realizable{"realizable_shapes_match"},
        nonneg{"bound_exp_nonnegative"};
    const auto dom = ExpDomain::of(ring_);
    std::set<std::vector<Valuation>> realized;
    for (const auto& row : census_rows()) {
      const auto sh = to_string(row.shape);
      bound.record(row.count <= row.bound, "shape " + sh + ": count " + std::to_string(row.count) + " > bound " +
                                               std::to_string(row.bound));
      nonneg.record(row.bound_exp >= 0, "shape " + sh);
      is_shape_c.record(is_shape(dom, row.shape.elems), "shape " + sh);
      const auto g = minimal_generators(row.shape);
      gens.record(generated_set(dom, g) == row.shape.elems, "shape " + sh);
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto fewer = g;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        minimal.record(generated_set(dom, fewer) != row.shape.elems,
                       "shape " + sh + " still generated without " + format_valuation(g[i], dom.is_grid()));
      }
      realized.insert(row.shape.elems);
    }
    if (dom.size() <= 24) {
      std::set<std::vector<Valuation>> predicted;
      for (const auto& s : enumerate_shapes(dom, /*realizable_only=*/true)) predicted.insert(s.elems);
      for (const auto& s : predicted)
        realizable.record(realized.contains(s), "predicted but not realized: " + to_string(dom, s));
      for (const auto& s : realized)
        realizable.record(predicted.contains(s), "realized but not predicted: " + to_string(dom, s));
    }
    for (auto* c : {&bound, &nonneg, &is_shape_c, &gens, &minimal, &realizable}) out.push_back(*c);
    return out;
  }

  // -------------------------------------------------------------------- lifts

  std::vector<CheckResult> lifts() {
    std::vector<CheckResult> out;
    CheckResult minimal{"extension_is_minimal"}, count{"lift_count"}, same{"lift_set_matches_oracle"},
        onto{"lift_maps_isomorphically"}, contain{"lift_contains_m_sq"}, lift_criterion{"lift_exists_iff_kernel_outside_m_sq"},
        dimc{"lift_dim_is_cotangent"};
    // Oracle subrings of the extension grouped by their image.
    std::map<Basis<C>, std::vector<Basis<C>>> iso_images;
    for (const auto& A : extension_oracle()) {
      if (A.contains(A.ctx().kernel_generator())) continue;
      iso_images[project_subring(A).basis()].push_back(A.basis());
    }
    const std::uint64_t base = ring_.coeffs().residue_size();
    for (const auto& B : subrings()) {
      const auto ext = restricted_extension(B);
      const auto tag = format_subring(B);
      minimal.record(ext.is_minimal, tag);
      const auto fam = lift_isomorphic(ext);
      const auto it = iso_images.find(B.basis());
      const std::size_t oracle = it == iso_images.end() ? 0 : it->second.size();
      const std::uint64_t expected = fam.exists ? detail::checked_pow(base, cotangent_dim(B)) : 0;
      count.record(oracle == expected && fam.lifts.size() == expected,
                   tag + ": oracle " + std::to_string(oracle) + ", family " + std::to_string(fam.lifts.size()) +
                       ", predicted " + std::to_string(expected));
      std::set<Basis<C>> mine;
      for (const auto& A : fam.lifts) mine.insert(A.basis());
      std::set<Basis<C>> theirs;
      if (it != iso_images.end()) theirs.insert(it->second.begin(), it->second.end());
      same.record(mine == theirs && mine.size() == fam.lifts.size(), tag);
      dimc.record(fam.dim == cotangent_dim(B), tag);
      const auto id = ideal_data(ext.src);
      for (const auto& A : fam.lifts) {
        const bool ok = project_subring(A) == B && !A.contains(ext.kernel_gen) &&
                        is_multiplicatively_closed(A.ctx(), A.basis()) && A.length() == B.length();
        onto.record(ok, format_subring(A) + " over " + tag);
        bool inside = true;
        for (const auto& row : id.m_sq_pR) inside = inside && A.contains(row);
        contain.record(inside, format_subring(A));
      }
      const bool exists = oracle > 0;
      const bool not_small = !ext.kernel_in_small;
      const bool jump = cotangent_dim(ext.src) == cotangent_dim(B) + 1;
      lift_criterion.record(exists == not_small && not_small == jump,
                   tag + ": exists=" + std::to_string(exists) + " not_small=" + std::to_string(not_small) +
                       " d_jump=" + std::to_string(jump));
    }
    for (auto* c : {&minimal, &count, &same, &onto, &contain, &lift_criterion, &dimc}) out.push_back(*c);
    return out;
  }

  // -------------------------------------------------------------------- props

  std::vector<CheckResult> props() {
    std::vector<CheckResult> out;
    out.push_back(oracle_agreement());
    CheckResult size_law{"size_law"}, scan{"exponent_set_matches_scan"}, cot{"cotangent_bound"},
        tail{"tail_in_m_sq"}, prop_down{"propagation_down"}, prop_up{"propagation_up"};
    const std::uint64_t base = ring_.coeffs().residue_size();
    const int off = field_kind ? 0 : z_generator_offset(ring_.N());
    const auto z = ring_.kernel_generator();
    const Valuation top = ring_.nu(z);
    for (const auto& R : subrings()) {
      const auto tag = format_subring(R);
      const Shape E = exponent_set(R);
      const auto members = span_members(ring_, R.basis());
      size_law.record(members.size() == detail::checked_pow(base, static_cast<int>(E.size())) &&
                          static_cast<std::size_t>(R.length()) == E.size(),
                      tag + ": " + std::to_string(members.size()) + " members, shape " + to_string(E));
      scan.record(exponent_set_by_scan(R) == E, tag);
      const int dR = cotangent_dim(R);
      const int dE = generator_count(E);
      cot.record(dR <= dE - off, tag + ": d(R)=" + std::to_string(dR) + " d(E)=" + std::to_string(dE));
      if (ring_.n() > 1 && E.contains(top)) {
        const auto g = minimal_generators(E);
        if (std::find(g.begin(), g.end(), top) == g.end()) {
          const auto id = ideal_data(R);
          tail.record(in_span(ring_, id.m_sq, z), tag);
        }
      }
      // R plays the role of B for the next extension step.
      const auto ext = restricted_extension(R);
      const int dB = dR, dEB = dE;
      const int dSrc = cotangent_dim(ext.src);
      const int dESrc = generator_count(exponent_set(ext.src));
      if (dSrc == dESrc - off) prop_down.record(dB == dEB - off, tag);
      if (dSrc == dB + 1 && dB == dEB - off) prop_up.record(dSrc == dESrc - off, tag);
    }
    for (auto* c : {&size_law, &scan, &cot, &tail, &prop_down, &prop_up}) out.push_back(*c);
    if (ring_.n() > 1) {
      auto v = shape_steps();
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  /// Agreement of the enumerators.
  CheckResult oracle_agreement() {
    CheckResult c{"oracle_agreement"};
    const auto& fast = subrings();
    const auto bfs = enumerate_subrings(ring_, EnumMethod::closure_bfs);
    c.record(bfs == fast, "closure_bfs: " + std::to_string(bfs.size()) + " vs minimal_ext: " +
                              std::to_string(fast.size()));
    if constexpr (field_kind) {
      const auto scan = enumerate_subrings(ring_, EnumMethod::subspace_scan);
      c.record(scan == fast, "subspace_scan: " + std::to_string(scan.size()) + " vs minimal_ext: " +
                                 std::to_string(fast.size()));
    }
    return c;
  }

  /// Shape bookkeeping across the step quotient(ring) -> ring: projection of
  /// shapes, disjointness of images, bijection on shapes containing the top
  /// point, exact fibre sizes and the equality case of the census bound.
  std::vector<CheckResult> shape_steps() {
    CheckResult disjoint{"projection_disjoint"}, proj_shape{"projection_keeps_shape"},
        bij{"top_shape_bijection"}, fibre{"fibre_count_exact"}, equality{"census_equality_case"},
        equality_flat{"census_equality_flat_fibres"};
    const auto quot = *ring_.quotient();
    const auto qsubs = enumerate_subrings(quot, EnumMethod::minimal_ext);
    const std::uint64_t base = ring_.coeffs().residue_size();
    const int off = field_kind ? 0 : z_generator_offset(ring_.N());
    const auto z = ring_.kernel_generator();
    const Valuation top = ring_.nu(z);

    std::map<std::vector<Valuation>, std::uint64_t> count_here, count_below;
    std::map<Basis<C>, std::vector<Valuation>> image_shape;  // image basis -> shape of source
    std::set<Basis<C>> top_images;
    for (const auto& A : subrings()) {
      const Shape E = exponent_set(A);
      ++count_here[E.elems];
      const auto img = project_subring(A);
      const Shape EI = exponent_set(img);
      if (!E.contains(top)) {
        proj_shape.record(EI.elems == E.elems, format_subring(A));
        auto [it, fresh] = image_shape.try_emplace(img.basis(), E.elems);
        disjoint.record(fresh || it->second == E.elems, format_subring(img));
      } else {
        auto stripped = E.elems;
        std::erase(stripped, top);
        bij.record(EI.elems == stripped && top_images.insert(img.basis()).second, format_subring(A));
      }
    }
    // Every B below has exactly one preimage subring containing the kernel.
    bij.record(top_images.size() == qsubs.size(),
               std::to_string(top_images.size()) + " images vs " + std::to_string(qsubs.size()) + " subrings below");

    std::map<std::vector<Valuation>, std::vector<const Subring<C>*>> below_by_shape;
    for (const auto& B : qsubs) {
      const Shape E = exponent_set(B);
      ++count_below[E.elems];
      below_by_shape[E.elems].push_back(&B);
    }
    for (const auto& [shape, members] : below_by_shape) {
      std::uint64_t predicted = 0;
      bool hypothesis = true;
      std::vector<int> dBs;
      for (const auto* B : members) {
        const auto ext = restricted_extension(*B);
        const int dB = cotangent_dim(*B);
        const bool jump = cotangent_dim(ext.src) == dB + 1;
        hypothesis = hypothesis && jump;
        dBs.push_back(dB);
        if (jump) predicted += detail::checked_pow(base, dB);
      }
      const std::uint64_t here = count_here.contains(shape) ? count_here[shape] : 0;
      const auto dom = ExpDomain::of(quot);
      fibre.record(here == predicted, to_string(dom, shape) + ": " + std::to_string(here) + " vs sum of fibres " +
                                          std::to_string(predicted));
      const int dE = generator_count(Shape{dom, shape});
      // Every B has a jump and d(B) = d(E) - off, so all fibres have equal size.
      if (hypothesis && std::ranges::all_of(dBs, [&](int d) { return d == dE - off; })) {
        const std::uint64_t want = detail::checked_pow(base, dE - off) * count_below[shape];
        equality_flat.record(here == want, to_string(dom, shape) + ": #S=" + std::to_string(here) + " vs " +
                                               std::to_string(want));
      }
      if (hypothesis) {
        const std::uint64_t want = detail::checked_pow(base, dE - off) * count_below[shape];
        equality.record(here == want, to_string(dom, shape) + ": #S=" + std::to_string(here) + " vs " +
                                          std::to_string(base) + "^" + std::to_string(dE - off) + " * " +
                                          std::to_string(count_below[shape]));
      }
    }
    return {disjoint, proj_shape, bij, fibre, equality, equality_flat};
  }

 private:
  std::vector<typename C::elem_type> all_coeffs() const {
    const auto& K = ring_.coeffs();
    std::vector<typename C::elem_type> v;
    std::uint32_t size;
    if constexpr (field_kind) {
      size = K.order();
    } else {
      size = K.modulus();
    }
    for (std::uint32_t i = 0; i < size; ++i) v.push_back({i});
    return v;
  }

  void append_coefficient_checks(std::vector<CheckResult>& out) const {
    const auto& K = ring_.coeffs();
    const auto all = all_coeffs();
    if constexpr (field_kind) {
      CheckResult ax{"field_axioms"};
      if (all.size() <= 16) {
        for (auto a : all) {
          if (!K.is_zero(a)) ax.record(K.mul(a, K.inv(a)) == K.one(), "inverse");
          ax.record(K.add(a, K.neg(a)) == K.zero(), "negation");
          for (auto b : all)
            for (auto c : all) {
              ax.record(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)), "mul associativity");
              ax.record(K.add(K.add(a, b), c) == K.add(a, K.add(b, c)), "add associativity");
              ax.record(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)), "distributivity");
            }
        }
      }
      out.push_back(ax);
    } else {
      CheckResult strict{"nu1_strict"}, unit{"nu1_unit_multiple"};
      for (auto a : all) {
        if (K.is_zero(a)) continue;
        for (auto b : all) {
          if (K.is_zero(b)) continue;
          const int sa = K.nu1(a), sb = K.nu1(b);
          if (sa + sb < K.N()) {
            const auto ab = K.mul(a, b);
            strict.record(!K.is_zero(ab) && K.nu1(ab) == sa + sb,
                          std::to_string(a.value) + "*" + std::to_string(b.value));
          }
          if (sa == sb) {
            bool found = false;
            for (auto u : all)
              if (K.is_unit(u) && K.mul(u, b) == a) found = true;
            unit.record(found, std::to_string(a.value) + " vs " + std::to_string(b.value));
          }
        }
      }
      out.push_back(strict);
      out.push_back(unit);
    }
  }

  Ring ring_;
  std::optional<std::vector<Subring<C>>> subrings_;
  std::optional<std::vector<Subring<C>>> ext_oracle_;
  std::optional<std::vector<CensusRow<C>>> census_;
};

}  // namespace minext
