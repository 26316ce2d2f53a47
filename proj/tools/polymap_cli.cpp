// polymap — decide, certify and falsify surjectivity / injectivity /
// invertibility of polynomial self-maps over Z, Z_(p), Z/p^k and Q[[t]].

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polymap/classify.hpp"
#include "polymap/rational_roots.hpp"
#include "polymap/report.hpp"
#include "polymap/resultant.hpp"

namespace {

using namespace polymap;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ =
      std::chrono::steady_clock::now();
};

std::string read_source(const std::string& inline_text,
                        const std::string& file_path) {
  if (!inline_text.empty() && !file_path.empty())
    throw PreconditionError("give either --map or --file, not both");
  if (!inline_text.empty()) return inline_text;
  if (file_path.empty())
    throw PreconditionError("no input: pass --map TEXT or --file PATH "
                            "(use --file - for stdin)");
  if (file_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file_path);
  if (!in) throw PreconditionError("cannot open input file: " + file_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<mpz_class> parse_int_list(const std::string& text,
                                      const char* what) {
  std::vector<mpz_class> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw PreconditionError(std::string(what) + ": empty entry in list");
    try {
      out.emplace_back(item.substr(first, last - first + 1));
    } catch (const std::invalid_argument&) {
      throw PreconditionError(std::string(what) + ": not an integer: " +
                              item);
    }
  }
  if (out.empty())
    throw PreconditionError(std::string(what) + ": empty list");
  return out;
}

mpq_class parse_rational_arg(const std::string& text, const char* what) {
  try {
    mpq_class q(text);
    q.canonicalize();
    if (q.get_den() == 0)
      throw PreconditionError(std::string(what) + ": zero denominator");
    return q;
  } catch (const std::invalid_argument&) {
    throw PreconditionError(std::string(what) + ": not a rational: " + text);
  }
}

int emit(Json report, const std::string& format, int code) {
  if (format == "text")
    std::cout << render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return code;
}

std::vector<Scalar> point_scalars(const ParsedMap& mi,
                                  const std::string& text) {
  std::vector<Scalar> pt;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    mpq_class q = parse_rational_arg(item, "--point");
    switch (mi.map.ring().kind) {
      case Scalar::Kind::Integer:
        if (q.get_den() != 1)
          throw PreconditionError("--point: integer map needs integer "
                                  "coordinates, got " +
                                  q.get_str());
        pt.push_back(Scalar::integer(q.get_num()));
        break;
      case Scalar::Kind::Rational:
        pt.push_back(Scalar::rational(q));
        break;
      case Scalar::Kind::Residue:
        pt.push_back(Scalar::rational(q).reduce_mod(*mi.modulus));
        break;
      case Scalar::Kind::Complex:
        throw PreconditionError("--point: complex maps are not parseable");
    }
  }
  if (pt.size() != mi.map.dim())
    throw DimensionError("--point: expected " + std::to_string(mi.map.dim()) +
                         " coordinates");
  return pt;
}

const MultiPoly& univariate_component(const ParsedMap& mi, const char* who) {
  if (mi.map.dim() != 1)
    throw PreconditionError(std::string(who) + ": map must be univariate");
  return mi.map.component(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polymap: surjectivity, injectivity and invertibility of polynomial "
      "self-maps over Z and its local companions"};
  app.require_subcommand(1);

  std::string map_text, file_path, format = "json";
  std::string series_text, case_name = "all", target_text, seed_text;
  std::string point_text, with_text, base_text, value_text, var_name;
  std::uint64_t prime = 2, budget = kDefaultBudget, prime_bound = 100;
  unsigned power = 1, order = 10;
  unsigned long power_exponent = 1;

  auto add_common = [&](CLI::App* sub, bool needs_map = true) {
    if (needs_map) {
      sub->add_option("--map", map_text, "inline map text");
      sub->add_option("--file", file_path, "map file path ('-' for stdin)");
    }
    sub->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", budget, "enumeration budget (default 1e7)");
    return sub;
  };

  auto* cmd_classify = add_common(app.add_subcommand(
      "classify", "decide surjectivity/invertibility over Z"));
  cmd_classify->add_option("--prime-bound", prime_bound,
                           "scan primes up to this bound (default 100)");

  auto* cmd_invert = add_common(app.add_subcommand(
      "invert", "decide polynomial invertibility with certificate"));

  auto* cmd_surj = add_common(app.add_subcommand(
      "surjective-zp", "one-prime surjectivity criterion over Z_p"));
  cmd_surj->add_option("--prime", prime, "prime p")->required();

  auto* cmd_hensel = add_common(
      app.add_subcommand("hensel", "Newton-lift a nonsingular root mod p^k"));
  cmd_hensel->add_option("--prime", prime, "prime p")->required();
  cmd_hensel->add_option("--power", power, "target exponent k")->required();
  cmd_hensel->add_option("--seed", seed_text, "seed root mod p (a1,a2,...)")
      ->required();

  auto* cmd_solve = add_common(app.add_subcommand(
      "solve-mod", "all solutions of f(x) = target mod p^k"));
  cmd_solve->add_option("--prime", prime, "prime p")->required();
  cmd_solve->add_option("--power", power, "exponent k")->required();
  cmd_solve->add_option("--target", target_text,
                        "target vector (c1,c2,...), default zero");

  auto* cmd_probe = add_common(app.add_subcommand(
      "inject-probe", "one-sided injectivity probe on (Z/p^k)^n"));
  cmd_probe->add_option("--prime", prime, "prime p")->required();
  cmd_probe->add_option("--power", power, "exponent k")->required();

  auto* cmd_injz = add_common(app.add_subcommand(
      "inject-z", "complete injectivity decision over Z (univariate)"));

  auto* cmd_zloc = add_common(app.add_subcommand(
      "witness-zloc", "rational noninjectivity witness inside Z_(p)"));
  cmd_zloc->add_option("--prime", prime, "prime p")->required();

  auto* cmd_res = add_common(app.add_subcommand(
      "resultant", "Sylvester resultant of two univariate polynomials"));

  auto* cmd_jac = add_common(app.add_subcommand(
      "jacobian", "Jacobian matrix and determinant"));

  auto* cmd_series = add_common(app.add_subcommand(
      "series-lift", "solve f(y) = s(t) in power series to order K"));
  cmd_series->add_option("--series", series_text, "target series in t")
      ->required();
  cmd_series->add_option("--order", order, "truncation order K (default 10)");
  cmd_series->add_option("--base", base_text, "base root a with f(a) = s(0)");

  auto* cmd_gallery = add_common(
      app.add_subcommand("gallery", "run the worked-example gallery"), false);
  cmd_gallery->add_option("--case", case_name, "case name or 'all'");

  auto* cmd_eval =
      add_common(app.add_subcommand("eval", "evaluate the map at a point"));
  cmd_eval->add_option("--point", point_text, "point (c1,c2,...)")
      ->required();

  auto* cmd_compose = add_common(
      app.add_subcommand("compose", "compose with a second map (f after g)"));
  cmd_compose->add_option("--with", with_text, "inner map g text")
      ->required();

  auto* cmd_derive = add_common(app.add_subcommand(
      "derive", "partial derivative of every component"));
  cmd_derive->add_option("--var", var_name, "variable name")->required();

  auto* cmd_roots = add_common(app.add_subcommand(
      "roots", "exact rational roots with multiplicity (univariate)"));

  auto* cmd_canon = add_common(app.add_subcommand(
      "canon", "canonical graded-lex form of the map"));

  auto* cmd_sqfree = add_common(app.add_subcommand(
      "squarefree", "squarefreeness via Res(f, f') (univariate)"));

  auto* cmd_sroots = add_common(app.add_subcommand(
      "simple-roots", "simple roots of f mod p (univariate)"));
  cmd_sroots->add_option("--prime", prime, "prime p")->required();

  auto* cmd_bij = add_common(app.add_subcommand(
      "bij-mod", "exhaustive bijectivity scan on (Z/p^k)^n"));
  cmd_bij->add_option("--prime", prime, "prime p")->required();
  cmd_bij->add_option("--power", power, "exponent k")->required();

  auto* cmd_colp2 = add_common(app.add_subcommand(
      "collision-p2", "mod-p^2 collision through a singular point"));
  cmd_colp2->add_option("--prime", prime, "prime p")->required();
  cmd_colp2->add_option("--point", point_text, "singular point mod p")
      ->required();

  auto* cmd_pow = add_common(
      app.add_subcommand("power-inject",
                         "injectivity of x -> x^m on Z_p (gcd formula)"),
      false);
  cmd_pow->add_option("--exponent", power_exponent, "exponent m")->required();
  cmd_pow->add_option("--prime", prime, "prime p")->required();

  auto* cmd_ninj = add_common(app.add_subcommand(
      "noninject-zp", "lifted collision certificate against Z_p-injectivity"));
  cmd_ninj->add_option("--prime", prime, "prime p")->required();

  auto* cmd_member = add_common(
      app.add_subcommand("zloc-member", "membership of a rational in Z_(p)"),
      false);
  cmd_member->add_option("--value", value_text, "rational a/b")->required();
  cmd_member->add_option("--prime", prime, "prime p")->required();

  auto* cmd_profile = add_common(app.add_subcommand(
      "profile", "per-prime solvability profile of f(x) = target"));
  cmd_profile->add_option("--target", target_text,
                          "target vector, default zero");
  cmd_profile->add_option("--prime-bound", prime_bound,
                          "primes up to this bound (default 100)");
  cmd_profile->add_option("--power", power, "depth k (default 1)");

  auto* cmd_finv = add_common(app.add_subcommand(
      "formal-inverse", "raw truncated series inverse at the origin"));
  cmd_finv->add_option("--order", order, "truncation degree (default 10)");

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  try {
    // ---- classify ----------------------------------------------------------
    if (app.got_subcommand(cmd_classify)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      Verdict v = classify_over_Z(mi.map, prime_bound, budget);
      Json verdict;
      verdict["kind"] = v.surjective_invertible ? "SurjectiveAndInvertibleOverZ"
                                                : "NotSurjectiveOverZ";
      Json cert = json_classification(v, mi.var_names);
      if (!v.surjective_invertible) {
        if (v.failing_prime) {
          verdict["obstruction"] = "LocalFailure";
          verdict["failing_prime"] = *v.failing_prime;
        } else {
          verdict["obstruction"] = cert["invertibility"]["obstruction"];
        }
      }
      return emit(make_report("classify", canonical_map_string(mi),
                              verdict, cert, timer.ms()),
                  format, 0);
    }

    // ---- invert ------------------------------------------------------------
    if (app.got_subcommand(cmd_invert)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      InvertibilityCertificate cert = decide_invertibility(mi.map);
      bool inv = cert.outcome == InvertibilityCertificate::Outcome::Invertible;
      Json verdict;
      verdict["kind"] = inv ? "Invertible" : "NotInvertible";
      return emit(make_report("invert", canonical_map_string(mi), verdict,
                              json_invertibility(cert, mi.var_names),
                              timer.ms()),
                  format, 0);
    }

    // ---- surjective-zp -----------------------------------------------------
    if (app.got_subcommand(cmd_surj)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      LocalSurjectivityVerdict v =
          zp_surjectivity_criterion(mi.map, prime, budget);
      Json verdict;
      verdict["kind"] = v.surjective ? "SurjectiveOverZp" : "NotSurjectiveOverZp";
      verdict["p"] = v.p;
      return emit(make_report("surjective-zp", canonical_map_string(mi),
                              verdict, json_local_verdict(v), timer.ms()),
                  format, 0);
    }

    // ---- hensel ------------------------------------------------------------
    if (app.got_subcommand(cmd_hensel)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      std::vector<mpz_class> seed = parse_int_list(seed_text, "--seed");
      ResidueVector seed_rv =
          ResidueVector::reduce(seed, PrimePower::make(prime, 1));
      Json chain = Json::array();
      for (unsigned level = 1; level <= power; ++level)
        chain.push_back(json_residue_vector(
            hensel_lift_vector(mi.map, prime, level, seed_rv)));
      ResidueVector lift = hensel_lift_vector(mi.map, prime, power, seed_rv);
      Json verdict;
      verdict["kind"] = "Lifted";
      verdict["modulus"] = PrimePower::make(prime, power).str();
      Json cert;
      cert["seed"] = json_residue_vector(seed_rv);
      cert["lift"] = json_residue_vector(lift);
      cert["chain"] = chain;
      cert["verified"] = "f(lift) = 0 mod p^k re-checked at every level";
      return emit(make_report("hensel", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- solve-mod ---------------------------------------------------------
    if (app.got_subcommand(cmd_solve)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      std::vector<mpz_class> target(mi.map.dim(), 0);
      if (!target_text.empty()) target = parse_int_list(target_text, "--target");
      SolveStats stats;
      auto sols = solve_system_mod(mi.map, target, prime, power, budget,
                                   &stats);
      Json verdict;
      verdict["kind"] = sols.empty() ? "Unsolvable" : "Solvable";
      verdict["modulus"] = PrimePower::make(prime, power).str();
      verdict["count"] = sols.size();
      return emit(make_report("solve-mod", canonical_map_string(mi), verdict,
                              json_solve(sols, stats), timer.ms()),
                  format, 0);
    }

    // ---- inject-probe ------------------------------------------------------
    if (app.got_subcommand(cmd_probe)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      InjectivityProbe probe =
          injectivity_probe_mod_pk(mi.map, prime, power, budget);
      bool certified = probe.status == ProbeStatus::InjectiveCertified;
      Json verdict;
      verdict["kind"] = certified ? "InjectiveModPk" : "Inconclusive";
      verdict["modulus"] = PrimePower::make(prime, power).str();
      return emit(make_report("inject-probe", canonical_map_string(mi),
                              verdict, json_probe(probe), timer.ms()),
                  format, certified ? 0 : 2);
    }

    // ---- inject-z ----------------------------------------------------------
    if (app.got_subcommand(cmd_injz)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      IntegerInjectivity res = injectivity_over_Z_univariate(
          univariate_component(mi, "inject-z"), budget);
      Json verdict;
      verdict["kind"] = res.injective ? "InjectiveOverZ" : "NotInjectiveOverZ";
      return emit(make_report("inject-z", canonical_map_string(mi), verdict,
                              json_integer_injectivity(res), timer.ms()),
                  format, 0);
    }

    // ---- witness-zloc ------------------------------------------------------
    if (app.got_subcommand(cmd_zloc)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      auto w = rational_noninjectivity_witness(
          univariate_component(mi, "witness-zloc"), prime);
      Json verdict;
      Json cert;
      int code = 0;
      if (w) {
        verdict["kind"] = "NonInjectiveOverZloc";
        verdict["p"] = prime;
        cert = json_zloc_witness(*w);
      } else {
        verdict["kind"] = "NoWitnessFound";
        verdict["p"] = prime;
        cert["note"] = "no rational collision found within the target "
                       "budget; the search is one-sided";
        code = 2;
      }
      return emit(make_report("witness-zloc", canonical_map_string(mi),
                              verdict, cert, timer.ms()),
                  format, code);
    }

    // ---- resultant ---------------------------------------------------------
    if (app.got_subcommand(cmd_res)) {
      ParsedPolys ps = parse_polys(read_source(map_text, file_path));
      if (ps.polys.size() != 2)
        throw PreconditionError(
            "resultant: give exactly two polynomials (f and g)");
      Scalar r = resultant(ps.polys[0], ps.polys[1]);
      Json verdict;
      verdict["kind"] = "Resultant";
      verdict["resultant"] = r.str();
      Json cert;
      cert["f"] = json_polynomial(ps.polys[0], ps.var_names);
      cert["g"] = json_polynomial(ps.polys[1], ps.var_names);
      cert["resultant"] = r.str();
      cert["is_zero"] = r.is_zero();
      std::string input = canonical_string(ps.polys[0], ps.var_names) +
                          "; " +
                          canonical_string(ps.polys[1], ps.var_names);
      return emit(make_report("resultant", input, verdict, cert, timer.ms()),
                  format, 0);
    }

    // ---- jacobian ----------------------------------------------------------
    if (app.got_subcommand(cmd_jac)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      PolyMatrix J = jacobian_matrix(mi.map);
      MultiPoly det = det_poly(J);
      Json matrix = Json::array();
      for (unsigned i = 0; i < J.size(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < J.size(); ++j)
          row.push_back(canonical_string(J.at(i, j), mi.var_names));
        matrix.push_back(row);
      }
      Json verdict;
      verdict["kind"] = "Jacobian";
      verdict["det"] = canonical_string(det, mi.var_names);
      verdict["det_is_unit"] = is_unit_polynomial(det);
      Json cert;
      cert["matrix"] = matrix;
      cert["det"] = canonical_string(det, mi.var_names);
      return emit(make_report("jacobian", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- series-lift -------------------------------------------------------
    if (app.got_subcommand(cmd_series)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      const MultiPoly& f = univariate_component(mi, "series-lift");
      MultiPoly s = parse_polynomial(series_text, {"t"});
      std::optional<Scalar> base;
      if (!base_text.empty())
        base = Scalar::rational(parse_rational_arg(base_text, "--base"));
      SeriesLiftResult lift = series_hensel_lift(f, s, order, base);
      Json verdict;
      verdict["kind"] = "Lifted";
      verdict["order"] = lift.order;
      verdict["exact"] = lift.exact;
      std::string input = canonical_map_string(mi) +
                          " s = " + canonical_string(s, {"t"}) + ";";
      return emit(make_report("series-lift", input, verdict,
                              json_series_lift(lift, "t"), timer.ms()),
                  format, 0);
    }

    // ---- gallery -----------------------------------------------------------
    if (app.got_subcommand(cmd_gallery)) {
      auto results = run_gallery(case_name, budget);
      bool all_passed = true;
      for (const auto& r : results) all_passed = all_passed && r.passed;
      Json verdict;
      verdict["kind"] = all_passed ? "GalleryPassed" : "GalleryFailed";
      verdict["cases"] = results.size();
      return emit(make_report("gallery", case_name, verdict,
                              json_gallery(results), timer.ms()),
                  format, all_passed ? 0 : 1);
    }

    // ---- eval --------------------------------------------------------------
    if (app.got_subcommand(cmd_eval)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      std::vector<Scalar> pt = point_scalars(mi, point_text);
      std::vector<Scalar> img = mi.map.eval(pt);
      Json values = Json::array();
      for (const auto& v : img) values.push_back(v.str());
      Json verdict;
      verdict["kind"] = "Evaluated";
      Json cert;
      cert["value"] = values;
      return emit(make_report("eval", canonical_map_string(mi), verdict, cert,
                              timer.ms()),
                  format, 0);
    }

    // ---- compose -----------------------------------------------------------
    if (app.got_subcommand(cmd_compose)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      ParsedMap inner = parse_map(with_text);
      PolyMap h = compose(mi.map, inner.map);
      Json verdict;
      verdict["kind"] = "Composed";
      Json cert;
      cert["components"] = json_polymap(h, mi.var_names);
      return emit(make_report("compose", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- derive ------------------------------------------------------------
    if (app.got_subcommand(cmd_derive)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      unsigned idx = 0;
      bool found = false;
      for (unsigned i = 0; i < mi.var_names.size(); ++i)
        if (mi.var_names[i] == var_name) {
          idx = i;
          found = true;
        }
      if (!found)
        throw PreconditionError("derive: unknown variable " + var_name);
      Json parts = Json::array();
      for (unsigned i = 0; i < mi.map.dim(); ++i)
        parts.push_back(
            canonical_string(mi.map.component(i).derivative(idx),
                             mi.var_names));
      Json verdict;
      verdict["kind"] = "Derivative";
      verdict["var"] = var_name;
      Json cert;
      cert["components"] = parts;
      return emit(make_report("derive", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- roots -------------------------------------------------------------
    if (app.got_subcommand(cmd_roots)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      auto roots = rational_roots(univariate_component(mi, "roots"));
      Json list = Json::array();
      for (const auto& r : roots) {
        Json e;
        e["root"] = json_mpq(r.value);
        e["multiplicity"] = r.multiplicity;
        list.push_back(e);
      }
      Json verdict;
      verdict["kind"] = "Roots";
      verdict["count"] = roots.size();
      Json cert;
      cert["roots"] = list;
      return emit(make_report("roots", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- canon -------------------------------------------------------------
    if (app.got_subcommand(cmd_canon)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      Json verdict;
      verdict["kind"] = "Canonical";
      Json cert;
      cert["canonical"] = canonical_map_string(mi);
      cert["components"] = json_polymap(mi.map, mi.var_names);
      return emit(make_report("canon", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- squarefree --------------------------------------------------------
    if (app.got_subcommand(cmd_sqfree)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      SquarefreeResult res =
          is_squarefree(univariate_component(mi, "squarefree"));
      Json verdict;
      verdict["kind"] = res.squarefree ? "Squarefree" : "NotSquarefree";
      Json cert;
      cert["discriminant_resultant"] = res.evidence.str();
      return emit(make_report("squarefree", canonical_map_string(mi), verdict,
                              cert, timer.ms()),
                  format, 0);
    }

    // ---- simple-roots ------------------------------------------------------
    if (app.got_subcommand(cmd_sroots)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      auto roots = simple_roots_mod_p(
          univariate_component(mi, "simple-roots"), prime, budget);
      Json verdict;
      verdict["kind"] = "SimpleRoots";
      verdict["p"] = prime;
      verdict["count"] = roots.size();
      Json cert;
      cert["roots"] = roots;
      return emit(make_report("simple-roots", canonical_map_string(mi),
                              verdict, cert, timer.ms()),
                  format, 0);
    }

    // ---- bij-mod -----------------------------------------------------------
    if (app.got_subcommand(cmd_bij)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      BijectivityEvidence ev = is_bijective_mod(mi.map, prime, power, budget);
      Json verdict;
      verdict["kind"] = ev.bijective ? "BijectiveModPk" : "NotBijectiveModPk";
      verdict["modulus"] = PrimePower::make(prime, power).str();
      return emit(make_report("bij-mod", canonical_map_string(mi), verdict,
                              json_bijectivity(ev), timer.ms()),
                  format, 0);
    }

    // ---- collision-p2 ------------------------------------------------------
    if (app.got_subcommand(cmd_colp2)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      std::vector<mpz_class> pt = parse_int_list(point_text, "--point");
      ResidueVector a = ResidueVector::reduce(pt, PrimePower::make(prime, 1));
      Collision c = mod_p2_collision_witness(mi.map, prime, a);
      Json verdict;
      verdict["kind"] = "CollisionModP2";
      verdict["modulus"] = PrimePower::make(prime, 2).str();
      return emit(make_report("collision-p2", canonical_map_string(mi),
                              verdict, json_collision(c), timer.ms()),
                  format, 0);
    }

    // ---- power-inject ------------------------------------------------------
    if (app.got_subcommand(cmd_pow)) {
      bool inj = power_map_injectivity(power_exponent, prime);
      Json verdict;
      verdict["kind"] = inj ? "InjectiveOverZp" : "NotInjectiveOverZp";
      verdict["m"] = power_exponent;
      verdict["p"] = prime;
      Json cert;
      cert["criterion"] = "gcd(m, 2(p-1)) = 1";
      cert["injective"] = inj;
      std::string input =
          "x^" + std::to_string(power_exponent) + " on Z_" +
          std::to_string(prime);
      return emit(make_report("power-inject", input, verdict, cert,
                              timer.ms()),
                  format, 0);
    }

    // ---- noninject-zp ------------------------------------------------------
    if (app.got_subcommand(cmd_ninj)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      auto cert = certify_noninjective_zp(mi.map, prime, budget);
      Json verdict;
      int code = 0;
      Json payload;
      if (cert) {
        verdict["kind"] = "NonInjectiveOverZp";
        verdict["p"] = prime;
        payload = json_zp_noninjectivity(*cert);
      } else {
        verdict["kind"] = "NoCertificate";
        verdict["p"] = prime;
        payload["note"] = "no simple collision mod p; the search is "
                          "one-sided";
        code = 2;
      }
      return emit(make_report("noninject-zp", canonical_map_string(mi),
                              verdict, payload, timer.ms()),
                  format, code);
    }

    // ---- zloc-member -------------------------------------------------------
    if (app.got_subcommand(cmd_member)) {
      mpq_class q = parse_rational_arg(value_text, "--value");
      bool member = zloc_membership(q, prime);
      Json verdict;
      verdict["kind"] = member ? "Member" : "NotMember";
      verdict["p"] = prime;
      Json cert;
      cert["value"] = json_mpq(q);
      cert["denominator"] = q.get_den().get_str();
      return emit(make_report("zloc-member", q.get_str(), verdict, cert,
                              timer.ms()),
                  format, 0);
    }

    // ---- profile -----------------------------------------------------------
    if (app.got_subcommand(cmd_profile)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      std::vector<mpz_class> target(mi.map.dim(), 0);
      if (!target_text.empty()) target = parse_int_list(target_text, "--target");
      DiophantineProfile prof =
          diophantine_profile(mi.map, target, prime_bound, power, budget);
      Json verdict;
      int code = 0;
      if (!prof.all_solvable) {
        verdict["kind"] = "NotAllSolvable";
      } else if (prof.any_budget_exceeded) {
        verdict["kind"] = "Inconclusive";
        code = 2;
      } else {
        verdict["kind"] = "AllSolvable";
      }
      verdict["prime_bound"] = prime_bound;
      verdict["k"] = power;
      return emit(make_report("profile", canonical_map_string(mi), verdict,
                              json_diophantine_profile(prof), timer.ms()),
                  format, code);
    }

    // ---- formal-inverse ----------------------------------------------------
    if (app.got_subcommand(cmd_finv)) {
      ParsedMap mi = parse_map(read_source(map_text, file_path));
      TruncatedSeriesMap g = formal_inverse(mi.map, order);
      Json verdict;
      verdict["kind"] = "FormalInverse";
      verdict["cutoff"] = g.cutoff();
      Json cert;
      cert["components"] = json_polymap(g.to_polymap(), mi.var_names);
      return emit(make_report("formal-inverse", canonical_map_string(mi),
                              verdict, cert, timer.ms()),
                  format, 0);
    }

    throw PreconditionError("unknown subcommand");
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
