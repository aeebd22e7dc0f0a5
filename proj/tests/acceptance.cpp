// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Stated runtime limits are enforced as part of the check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minext/minext.hpp"

using namespace minext;

namespace {

struct FieldCase {
  std::uint64_t q;
  int n;
};
struct ZCase {
  std::uint32_t p;
  int N, n, k;
};

const std::vector<FieldCase> kFieldCases = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {3, 5}, {4, 3}};

std::vector<ZCase> z_cases() {
  std::vector<ZCase> out;
  for (auto [p, N, n] : {std::tuple{2u, 2, 2}, {2u, 2, 3}, {3u, 2, 2}, {2u, 3, 2}})
    for (int k = 0; k <= N; ++k) out.push_back({p, N, n, k});
  return out;
}

FieldRing field_ring(const FieldCase& c) { return FieldRing(FieldCtx::of_order(c.q), c.n); }
ZRing z_ring(const ZCase& c) { return ZRing(ZpNCtx(c.p, c.N), c.n, c.k); }

struct Outcome {
  bool ok = true;
  std::uint64_t cases = 0;
  std::string detail;

  void check(bool cond, const std::string& what) {
    ++cases;
    if (cond || !ok) return;
    ok = false;
    detail = what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no stated limit
  std::function<Outcome()> run;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& c : kFieldCases) {
    const auto ring = field_ring(c);
    const auto fast = enumerate_subrings(ring, EnumMethod::minimal_ext);
    const auto scan = enumerate_subrings(ring, EnumMethod::subspace_scan);
    const auto bfs = enumerate_subrings(ring, EnumMethod::closure_bfs);
    o.check(scan == fast, ring.name() + ": subspace_scan " + str(scan.size()) + " vs minimal_ext " + str(fast.size()));
    o.check(bfs == fast, ring.name() + ": closure_bfs " + str(bfs.size()) + " vs minimal_ext " + str(fast.size()));
  }
  return o;
}

Outcome field_bound() {
  Outcome o;
  for (const auto& c : kFieldCases) {
    const auto ring = field_ring(c);
    for (const auto& row : census(ring, EnumMethod::subspace_scan)) {
      const auto bound = detail::checked_pow(c.q, e_bound(c.n, row.shape));
      o.check(row.count <= bound, ring.name() + " shape " + to_string(row.shape) + ": " + str(row.count) + " > " +
                                      str(bound));
    }
  }
  return o;
}

// For each B in the census of each ring, the number of subalgebras of the
// extended ring that avoid the kernel and project onto B, counted on an
// independent enumeration of the extended ring.
template <class C>
std::map<Basis<C>, std::uint64_t> isomorphic_preimage_counts(const RingCtx<C>& ring, EnumMethod oracle) {
  const auto up = ring.extension();
  const auto z = up.kernel_generator();
  std::map<Basis<C>, std::uint64_t> out;
  for (const auto& A : enumerate_subrings(up, oracle)) {
    if (A.contains(z)) continue;
    ++out[project_subring(A).basis()];
  }
  return out;
}

Outcome lift_counts(bool kernel_in_small_case) {
  Outcome o;
  for (const auto& c : kFieldCases) {
    const auto ring = field_ring(c);
    const auto counts = isomorphic_preimage_counts(ring, EnumMethod::subspace_scan);
    for (const auto& B : enumerate_subrings(ring, EnumMethod::subspace_scan)) {
      const auto ext = restricted_extension(B);
      if (ext.kernel_in_small != kernel_in_small_case) continue;
      const auto it = counts.find(B.basis());
      const std::uint64_t got = it == counts.end() ? 0 : it->second;
      const std::uint64_t want = kernel_in_small_case ? 0 : detail::checked_pow(c.q, cotangent_dim(B));
      o.check(got == want, format_subring(B) + ": " + str(got) + " isomorphic preimages, expected " + str(want));
      // The constructed family agrees with the count.
      o.check(lift_isomorphic(ext).lifts.size() == want, format_subring(B) + ": constructed family size differs");
    }
  }
  return o;
}

Outcome four_generator_family() {
  Outcome o;
  for (std::uint64_t q : {2u, 3u})
    for (int a : {6, 7, 8}) {
      const auto rep = counterexample_family(a, FieldCtx::of_order(q));
      const std::vector<Valuation> gens{{a, 0}, {a + 1, 0}, {a + 2, 0}, {2 * a + 5, 0}};
      const std::string tag = "a=" + std::to_string(a) + " q=" + str(q);
      o.check(rep.d_ring == 3, tag + ": d(R)=" + std::to_string(rep.d_ring));
      o.check(rep.d_shape == 4, tag + ": d(E)=" + std::to_string(rep.d_shape));
      o.check(rep.generators == gens, tag + ": generators " + to_string(rep.shape.domain, rep.generators));
      const auto& R = rep.ring;
      const auto w = R.sub(R.mul(rep.gens[0], rep.gens[2]), R.mul(rep.gens[1], rep.gens[1]));
      o.check(w == R.x_pow(2 * a + 5), tag + ": g1*g3 - g2^2 = " + format_poly(R, w));
    }
  return o;
}

Outcome z_censuses() {
  Outcome o;
  for (const auto& c : z_cases()) {
    const auto ring = z_ring(c);
    const auto fast = enumerate_subrings(ring, EnumMethod::minimal_ext);
    const auto bfs = enumerate_subrings(ring, EnumMethod::closure_bfs);
    o.check(bfs == fast, ring.name() + ": closure_bfs " + str(bfs.size()) + " vs minimal_ext " + str(fast.size()));
    const auto dom = ExpDomain::of(ring);
    std::set<std::vector<Valuation>> realized;
    for (const auto& row : census_of(bfs)) {
      const int eps = eps_bound(dom.n(), dom.N(), dom.k(), row.shape);
      const auto bound = detail::checked_pow(c.p, eps);
      o.check(row.count <= bound,
              ring.name() + " shape " + to_string(row.shape) + ": " + str(row.count) + " > " + str(bound));
      realized.insert(row.shape.elems);
    }
    std::set<std::vector<Valuation>> predicted;
    for (const auto& s : enumerate_shapes(dom))
      if (is_realizable_zshape(dom, s)) predicted.insert(s.elems);
    o.check(predicted == realized, ring.name() + ": " + str(predicted.size()) + " realizable shapes, " +
                                       str(realized.size()) + " realized");
  }
  return o;
}

template <class C>
void require_checks(Outcome& o, const std::vector<CheckResult>& results, const std::set<std::string>& names,
                    const std::string& ring) {
  std::set<std::string> seen;
  for (const auto& r : results) {
    if (!names.contains(r.name)) continue;
    seen.insert(r.name);
    o.check(r.passed(), ring + " " + r.name + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
  }
  o.check(seen == names, ring + ": missing checks");
}

Outcome valuation_axioms() {
  Outcome o;
  const std::set<std::string> names{"nu_strict", "nu_non_archimedean", "nu_monomial_like"};
  for (const auto& ring : {FieldRing(FieldCtx::prime(2), 5), FieldRing(FieldCtx::prime(3), 4)}) {
    Verifier<FieldCtx> v(ring);
    require_checks<FieldCtx>(o, v.valuation(), names, ring.name());
  }
  const ZRing R(ZpNCtx(2, 2), 3, 2);
  Verifier<ZpNCtx> v(R);
  require_checks<ZpNCtx>(o, v.valuation(), names, R.name());
  return o;
}

Outcome structural_laws() {
  Outcome o;
  const std::set<std::string> names{"size_law",           "exponent_set_matches_scan", "cotangent_bound",
                                    "lift_exists_iff_kernel_outside_m_sq",  "tail_in_m_sq",              "lift_contains_m_sq",
                                    "extension_is_minimal"};
  auto run = [&](auto verifier) {
    auto results = verifier.props();
    const auto more = verifier.lifts();
    results.insert(results.end(), more.begin(), more.end());
    // tail_in_m_sq only appears when some subring meets its hypothesis.
    auto wanted = names;
    if (std::none_of(results.begin(), results.end(), [](const auto& r) { return r.name == "tail_in_m_sq"; }))
      wanted.erase("tail_in_m_sq");
    using C = typename decltype(verifier)::Ring::coeff_ctx;
    require_checks<C>(o, results, wanted, verifier.ring().name());
  };
  for (const auto& c : kFieldCases) run(Verifier<FieldCtx>(field_ring(c)));
  for (const auto& c : z_cases()) run(Verifier<ZpNCtx>(z_ring(c)));
  return o;
}

// #S_{n+1}(E) = base^{d(E) - offset} #S_n(E) whenever every B in S_n(E) has
// d(preimage) = d(B) + 1. Checked on the steps quotient -> ring and
// ring -> extension for every census ring.
Outcome counting_table() {
  Outcome o;
  std::uint64_t applicable = 0;
  auto run = [&](auto verifier) {
    for (const auto& r : verifier.shape_steps()) {
      if (r.name != "census_equality_case") continue;
      applicable += r.cases;
      o.check(r.passed(), verifier.ring().name() + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
    }
  };
  for (const auto& c : kFieldCases) {
    const auto ring = field_ring(c);
    run(Verifier<FieldCtx>(ring));
    run(Verifier<FieldCtx>(ring.extension()));
  }
  for (const auto& c : z_cases()) {
    const auto ring = z_ring(c);
    if (ring.n() > 1) run(Verifier<ZpNCtx>(ring));
    run(Verifier<ZpNCtx>(ring.extension()));
  }
  o.check(applicable > 0, "no step met the hypothesis");
  o.cases = applicable;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of the three enumerators on field censuses", 60, oracle_equivalence},
      {2, "census bound count <= q^e_n(E) on field censuses", 0, field_bound},
      {3, "isomorphic preimage count = q^d(B) when the kernel is not in m^2", 0, [] { return lift_counts(false); }},
      {4, "no isomorphic preimage when the kernel lies in m^2", 0, [] { return lift_counts(true); }},
      {5, "four-generator family a in {6,7,8} over F_2 and F_3", 5, four_generator_family},
      {6, "Z-family censuses: agreement, eps bound, realizable shapes", 120, z_censuses},
      {7, "valuation axioms exhaustive on F_2[x]/x^5, F_3[x]/x^4, R_{3,2,2}", 0, valuation_axioms},
      {8, "structural laws over every census subring", 0, structural_laws},
      {9, "counting table: #S_{n+1}(E) = q^d(E) #S_n(E) under the hypothesis", 0, counting_table},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(c.limit_s) + " s";
    }
    std::printf("[%s] criterion %d: %s (%llu cases, %.2f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                static_cast<unsigned long long>(o.cases), secs,
                c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
                o.ok ? "" : " -- ", o.detail.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
