// Command-line front end: censuses, lifts, shapes, the four-generator family
// and the invariant suites. Exit codes: 0 ok, 1 invariant violated, 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "minext/minext.hpp"

namespace {

using nlohmann::json;
using namespace minext;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RingFlags {
  std::optional<std::uint64_t> q;
  std::optional<std::string> modulus;
  std::optional<std::uint32_t> p;
  std::optional<int> N;
  std::optional<int> k;
  int n = 0;

  void add_field(CLI::App* app) {
    app->add_option("--q", q, "field order (prime power)");
    app->add_option("--modulus", modulus, "irreducible modulus over F_p in t, e.g. t^2+t+1");
  }
  void add_z(CLI::App* app) {
    app->add_option("--p", p, "prime of Z/p^N");
    app->add_option("--N", N, "coefficient exponent N");
    app->add_option("--k", k, "tail exponent k (defaults to N)");
  }
  void add_n(CLI::App* app) { app->add_option("--n", n, "truncation degree")->required(); }

  bool is_field() const { return q.has_value(); }

  void validate() const {
    if (q && p) throw InvalidArgument("give either --q or --p, not both");
    if (!q && !p) throw InvalidArgument("a ring needs --q or --p/--N");
    if (q && (N || k)) throw InvalidArgument("--N and --k apply to the Z family only");
    if (p && !N) throw InvalidArgument("--p needs --N");
    if (p && modulus) throw InvalidArgument("--modulus applies to extension fields only");
  }
};

FieldCtx make_field(std::uint64_t q, const std::optional<std::string>& modulus) {
  FieldCtx def = FieldCtx::of_order(q);
  if (!modulus) return def;
  auto m = parse_fp_poly(*modulus, def.p());
  if (m.size() != def.degree() + 1)
    throw InvalidArgument("modulus degree must be " + std::to_string(def.degree()) + " for q = " + std::to_string(q));
  return FieldCtx::extension(def.p(), std::move(m));
}

FieldRing make_field_ring(const RingFlags& f) { return FieldRing(make_field(*f.q, f.modulus), f.n); }

ZRing make_z_ring(const RingFlags& f) {
  const ZpNCtx K(*f.p, *f.N);
  return ZRing(K, f.n, f.k.value_or(*f.N));
}

struct Output {
  std::string format = "json";
  std::optional<std::string> path;

  void add(CLI::App* app, bool csv) {
    if (csv) app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", path, "write to this file instead of stdout");
  }

  void write(const std::string& text) const {
    if (!path) {
      std::cout << text;
      return;
    }
    std::ofstream os(*path);
    if (!os) throw InvalidArgument("cannot open " + *path + " for writing");
    os << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

template <class C>
int run_census(const RingCtx<C>& ring, const Output& out, bool emit_bases) {
  const auto rows = census(ring);
  if (out.format == "csv") {
    out.write(census_to_csv(rows));
  } else {
    out.write(census_to_json(rows, emit_bases));
  }
  for (const auto& row : rows) {
    if (row.count > row.bound) {
      std::cerr << "census bound violated at shape " << to_string(row.shape) << ": " << row.count << " > "
                << row.bound << "\n";
      return kViolation;
    }
  }
  return kOk;
}

template <class C>
int run_lifts(const RingCtx<C>& target, const std::string& gens, const Output& out) {
  const auto B = closure(target, parse_poly_list(target, gens));
  const auto ext = restricted_extension(B);
  const auto fam = lift_isomorphic(ext);
  json j;
  j["target"] = target.name();
  j["source"] = ext.src.ctx().name();
  j["subring"] = subring_to_json(B);
  j["preimage"] = subring_to_json(ext.src);
  j["kernel_generator"] = format_poly(ext.src.ctx(), ext.kernel_gen);
  j["kernel_in_small"] = ext.kernel_in_small;
  j["exists"] = fam.exists;
  j["dim"] = fam.dim;
  j["count"] = fam.lifts.size();
  auto lifts = json::array();
  for (const auto& A : fam.lifts) lifts.push_back(subring_to_json(A));
  j["lifts"] = std::move(lifts);
  out.write(j);
  return kOk;
}

template <class C>
int run_shape(const RingCtx<C>& ring, const std::string& gens, const Output& out) {
  const auto R = closure(ring, parse_poly_list(ring, gens));
  const auto E = exponent_set(R);
  json j;
  j["ring"] = ring.name();
  j["basis"] = subring_to_json(R);
  j["shape"] = shape_to_json(E);
  j["generators"] = points_to_json(E.domain, minimal_generators(E));
  j["d_shape"] = generator_count(E);
  j["d_ring"] = cotangent_dim(R);
  j["bound_exp"] = shape_bound_exp(E);
  out.write(j);
  return kOk;
}

template <class C>
int run_verify(const RingCtx<C>& ring, Suite suite, const Output& out) {
  Verifier<C> v(ring);
  const auto results = v.run(suite);
  json checks = json::array();
  bool ok = true;
  for (const auto& c : results) {
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"witnesses", c.witnesses}});
    if (!c.passed()) {
      ok = false;
      for (const auto& w : c.witnesses) std::cerr << c.name << ": " << w << "\n";
    }
  }
  out.write(json{{"ring", ring.name()}, {"passed", ok}, {"checks", std::move(checks)}});
  return ok ? kOk : kViolation;
}

int run_counterexample(int a, std::uint64_t q, const std::optional<std::string>& modulus, const Output& out) {
  const auto rep = counterexample_family(a, make_field(q, modulus));
  json gens = json::array();
  for (const auto& g : rep.gens) gens.push_back(format_poly(rep.ring, g));
  json j;
  j["a"] = rep.a;
  j["ring"] = rep.ring.name();
  j["gens"] = std::move(gens);
  j["basis"] = subring_to_json(rep.algebra);
  j["shape"] = shape_to_json(rep.shape);
  j["generators"] = points_to_json(rep.shape.domain, rep.generators);
  j["d_shape"] = rep.d_shape;
  j["d_ring"] = rep.d_ring;
  j["witness"] = format_poly(rep.ring, rep.witness);
  j["witness_is_top_monomial"] = rep.witness_is_top_monomial;
  j["witness_in_m_sq"] = rep.witness_in_m_sq;
  out.write(j);
  if (rep.d_ring != 3 || rep.d_shape != 4 || !rep.witness_is_top_monomial || !rep.witness_in_m_sq) {
    std::cerr << "family invariant violated: d(R)=" << rep.d_ring << " d(E)=" << rep.d_shape << "\n";
    return kViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subrings of truncated polynomial rings: censuses, lifts and invariant checks"};
  app.require_subcommand(1, 1);

  RingFlags census_f, censusz_f, lifts_f, shape_f, verify_f;
  Output census_o, censusz_o, lifts_o, shape_o, verify_o, cex_o;
  bool emit_bases = false, emit_bases_z = false;
  std::string lifts_gens, shape_gens, suite_name = "all";
  int cex_a = 0;
  std::uint64_t cex_q = 0;
  std::optional<std::string> cex_modulus;

  auto* census_cmd = app.add_subcommand("census", "census of F_q[x]/x^n by shape");
  census_cmd->add_option("--q", census_f.q, "field order (prime power)")->required();
  census_cmd->add_option("--modulus", census_f.modulus, "irreducible modulus over F_p in t");
  census_f.add_n(census_cmd);
  census_cmd->add_flag("--emit-bases", emit_bases, "include subring bases");
  census_o.add(census_cmd, true);

  auto* censusz_cmd = app.add_subcommand("census-z", "census of Z[x]/(p^N, x^n, p^k x^(n-1)) by shape");
  censusz_cmd->add_option("--p", censusz_f.p, "prime")->required();
  censusz_cmd->add_option("--N", censusz_f.N, "coefficient exponent")->required();
  censusz_cmd->add_option("--k", censusz_f.k, "tail exponent (defaults to N)");
  censusz_f.add_n(censusz_cmd);
  censusz_cmd->add_flag("--emit-bases", emit_bases_z, "include subring bases");
  censusz_o.add(censusz_cmd, true);

  auto* lifts_cmd = app.add_subcommand("lifts", "lifts of a subring of the target ring one step up");
  lifts_f.add_field(lifts_cmd);
  lifts_f.add_z(lifts_cmd);
  lifts_f.add_n(lifts_cmd);
  lifts_cmd->add_option("--subring", lifts_gens, "generators in the target ring, separated by ';'")->required();
  lifts_o.add(lifts_cmd, false);

  auto* shape_cmd = app.add_subcommand("shape", "exponent set and generator counts of a subring");
  shape_f.add_field(shape_cmd);
  shape_f.add_z(shape_cmd);
  shape_f.add_n(shape_cmd);
  shape_cmd->add_option("--subring", shape_gens, "generators, separated by ';'")->required();
  shape_o.add(shape_cmd, false);

  auto* cex_cmd = app.add_subcommand("counterexample", "subalgebra with d(R) = 3 < 4 = d(E)");
  cex_cmd->add_option("--a", cex_a, "family parameter, at least 6")->required();
  cex_cmd->add_option("--q", cex_q, "field order (prime power)")->required();
  cex_cmd->add_option("--modulus", cex_modulus, "irreducible modulus over F_p in t");
  cex_o.add(cex_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites on one ring");
  verify_cmd->add_option("--suite", suite_name, "valuation, bounds, lifts, props or all")
      ->check(CLI::IsMember({"valuation", "bounds", "lifts", "props", "all"}));
  verify_f.add_field(verify_cmd);
  verify_f.add_z(verify_cmd);
  verify_f.add_n(verify_cmd);
  verify_o.add(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  // Flag and input errors surface before any enumeration starts; all of them
  // are usage errors.
  try {
    if (census_cmd->parsed()) return run_census(make_field_ring(census_f), census_o, emit_bases);
    if (censusz_cmd->parsed()) return run_census(make_z_ring(censusz_f), censusz_o, emit_bases_z);
    if (cex_cmd->parsed()) return run_counterexample(cex_a, cex_q, cex_modulus, cex_o);
    if (lifts_cmd->parsed()) {
      lifts_f.validate();
      if (lifts_f.is_field()) return run_lifts(make_field_ring(lifts_f), lifts_gens, lifts_o);
      return run_lifts(make_z_ring(lifts_f), lifts_gens, lifts_o);
    }
    if (shape_cmd->parsed()) {
      shape_f.validate();
      if (shape_f.is_field()) return run_shape(make_field_ring(shape_f), shape_gens, shape_o);
      return run_shape(make_z_ring(shape_f), shape_gens, shape_o);
    }
    if (verify_cmd->parsed()) {
      verify_f.validate();
      const Suite suite = *parse_suite(suite_name);
      if (verify_f.is_field()) return run_verify(make_field_ring(verify_f), suite, verify_o);
      return run_verify(make_z_ring(verify_f), suite, verify_o);
    }
  } catch (const minext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
