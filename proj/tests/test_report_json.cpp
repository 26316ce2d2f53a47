#include "doctest.h"

#include <string>
#include <vector>

#include "polymap/report.hpp"

using namespace polymap;

namespace {

MultiPoly uni(std::vector<long> coeffs) {  // ascending
  MultiPoly p(1, CoeffRing::integers());
  for (unsigned i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term({i}, Scalar::integer(coeffs[i]));
  return p;
}

// Serialization must survive a parse of its own dump.
Json round_trip(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("scalar serialization is lossless decimal text") {
  mpz_class big = 1;
  for (int i = 0; i < 200; ++i) big *= 3;
  CHECK(json_mpz(big).get<std::string>() == big.get_str());
  CHECK(json_mpz(mpz_class(-42)).get<std::string>() == "-42");
  CHECK(json_mpq(mpq_class(6, -8)).get<std::string>() == "-3/4");
  CHECK(json_mpq(mpq_class(5, 1)).get<std::string>() == "5");
  CHECK(json_scalar(Scalar::integer(7)).get<std::string>() == "7");
  CHECK(json_scalar(Scalar::rational(1, 3)).get<std::string>() == "1/3");
  CHECK(json_scalar(Scalar::residue(mpz_class(31), PrimePower::make(5, 2)))
            .get<std::string>() == "6");
}

TEST_CASE("residue vectors carry their modulus") {
  ResidueVector v = ResidueVector::reduce({mpz_class(7), mpz_class(-1)},
                                          PrimePower::make(3, 2));
  Json j = round_trip(json_residue_vector(v));
  CHECK(j["modulus"] == "3^2");
  CHECK(j["entries"][0] == "7");
  CHECK(j["entries"][1] == "8");
}

TEST_CASE("polynomials serialize as canonical strings") {
  Json j = json_polynomial(uni({0, 1, -5, 6}), {"x"});
  CHECK(j.get<std::string>() == "6*x^3 - 5*x^2 + x");
  PolyMap f({uni({0, 2})});
  Json m = json_polymap(f, {"x"});
  REQUIRE(m.is_array());
  CHECK(m[0] == "2*x");
}

TEST_CASE("every verdict kind serializes and round trips") {
  SUBCASE("bijectivity and collision") {
    auto ev = is_bijective_mod(PolyMap({uni({0, 0, 0, 1})}), 3, 2);
    Json j = round_trip(json_bijectivity(ev));
    CHECK(j["bijective"] == false);
    CHECK(j["points_checked"] == 9);
    REQUIRE(j.contains("collision"));
    CHECK(j["collision"]["a"]["entries"][0] == "0");
    CHECK(j["collision"]["b"]["entries"][0] == "3");
    CHECK(j.contains("missed_target"));
  }
  SUBCASE("local verdict") {
    auto v = zp_surjectivity_criterion(PolyMap({uni({0, 1, 2})}), 2);
    Json j = round_trip(json_local_verdict(v));
    CHECK(j["p"] == 2);
    CHECK(j["surjective"] == true);
    CHECK(j["bijective_mod_p"] == true);
    CHECK(j["det_nonvanishing"] == true);
  }
  SUBCASE("invertibility: positive") {
    MultiPoly f1 = MultiPoly::variable(2, 0, CoeffRing::integers());
    MultiPoly y = MultiPoly::variable(2, 1, CoeffRing::integers());
    auto cert = decide_invertibility(PolyMap({f1 + y * y, y}));
    Json j = round_trip(json_invertibility(cert, {"x", "y"}));
    CHECK(j["invertible"] == true);
    CHECK(j["det_jacobian"] == "1");
    CHECK(j["inverse"][0] == "-y^2 + x");
    CHECK(j["degree_bound"] == 2);
  }
  SUBCASE("invertibility: negative with obstruction name") {
    auto cert = decide_invertibility(PolyMap({uni({0, 2})}));
    Json j = round_trip(json_invertibility(cert, {"x"}));
    CHECK(j["invertible"] == false);
    CHECK(j["obstruction"] == "DeterminantNotUnit");
    CHECK(j["det_jacobian"] == "2");
  }
  SUBCASE("classification") {
    Verdict v = classify_over_Z(PolyMap({uni({0, 2})}), 10);
    Json j = round_trip(json_classification(v, {"x"}));
    CHECK(j["surjective_invertible"] == false);
    CHECK(j["failing_prime"] == 2);
    CHECK(j["consistency_ok"] == true);
    CHECK(j["local_table"].size() == 4);  // primes 2, 3, 5, 7
    CHECK(j.contains("invertibility"));
  }
  SUBCASE("solutions with stats") {
    SolveStats st;
    auto sols =
        solve_system_mod(PolyMap({uni({0, 0, 1})}), {mpz_class(0)}, 2, 3,
                         kDefaultBudget, &st);
    Json j = round_trip(json_solve(sols, st));
    CHECK(j["count"] == 2);
    CHECK(j["solutions"][0]["entries"][0] == "0");
    CHECK(j["solutions"][1]["entries"][0] == "4");
    CHECK(j["seeds_scanned"] == 2);
    CHECK(j["singular_seeds"] == 1);
  }
  SUBCASE("probe") {
    auto probe = injectivity_probe_mod_pk(PolyMap({uni({0, 0, 0, 1})}), 3, 2);
    Json j = round_trip(json_probe(probe));
    CHECK(j["status"] == "Inconclusive");
    CHECK(j.contains("collision"));
    auto sure = injectivity_probe_mod_pk(PolyMap({uni({0, 0, 0, 1})}), 5, 1);
    Json k = round_trip(json_probe(sure));
    CHECK(k["status"] == "InjectiveCertified");
    CHECK_FALSE(k.contains("collision"));
  }
  SUBCASE("Z_p non-injectivity certificate") {
    auto cert = certify_noninjective_zp(PolyMap({uni({0, 1, 1})}), 2);
    REQUIRE(cert.has_value());
    Json j = round_trip(json_zp_noninjectivity(*cert));
    CHECK(j["p"] == 2);
    CHECK(j["lift_b"]["modulus"] == "2^3");
    CHECK(j["lift_b"]["entries"][0] == "0");
    CHECK(j["lift_c"]["entries"][0] == "7");
  }
  SUBCASE("integer injectivity") {
    auto res = injectivity_over_Z_univariate(uni({0, -48, 0, 1}));
    Json j = round_trip(json_integer_injectivity(res));
    CHECK(j["injective"] == false);
    CHECK(j.contains("witness"));
    CHECK(j["witness"]["a"] == "-8");
    CHECK(j["witness"]["b"] == "4");
  }
  SUBCASE("Z_(p) witness") {
    auto w = rational_noninjectivity_witness(uni({0, 1, -5, 6}), 5);
    REQUIRE(w.has_value());
    Json j = round_trip(json_zloc_witness(*w));
    CHECK(j["p"] == 5);
    CHECK(j["a"] == "0");
    CHECK(j["b"] == "1/2");
    CHECK(j["value"] == "0");
  }
  SUBCASE("series lift") {
    auto lift = series_hensel_lift(uni({0, -3, 0, 1}), uni({0, 1}), 10);
    Json j = round_trip(json_series_lift(lift, "t"));
    CHECK(j["exact"] == true);
    CHECK(j["order"] == 10);
    CHECK(j["base"] == "0");
    CHECK(j["solution"] ==
          "-55/1594323*t^9 - 4/19683*t^7 - 1/729*t^5 - 1/81*t^3 - 1/3*t");
    CHECK(j["residual"] == "0");
  }
  SUBCASE("diophantine profile") {
    auto prof = diophantine_profile(PolyMap({uni({1, 5, 6})}), {mpz_class(0)},
                                    10, 2);
    Json j = round_trip(json_diophantine_profile(prof));
    CHECK(j["all_solvable"] == true);
    CHECK(j["rows"].size() == 4);
    CHECK(j["rational_solutions"][0] == "-1/2");
    CHECK(j["integer_solutions"].size() == 0);
  }
  SUBCASE("gallery") {
    auto results = run_gallery("2x");
    Json j = round_trip(json_gallery(results));
    REQUIRE(j.is_array());
    CHECK(j[0]["name"] == "2x");
    CHECK(j[0]["passed"] == true);
    CHECK(j[0]["notes"].is_array());
  }
}

TEST_CASE("report envelope") {
  Json verdict;
  verdict["kind"] = "Demo";
  Json cert;
  cert["field"] = json_mpz(mpz_class(12));
  Json rep = make_report("classify", "vars x; f1 = 2*x", verdict, cert, 1.25);
  Json rt = round_trip(rep);
  CHECK(rt["schema_version"] == 1);
  CHECK(rt["command"] == "classify");
  CHECK(rt["input"] == "vars x; f1 = 2*x");
  CHECK(rt["verdict"]["kind"] == "Demo");
  CHECK(rt["certificate"]["field"] == "12");
  CHECK(rt["timing_ms"] == 1.25);
  // Envelope key order is stable.
  std::vector<std::string> keys;
  for (auto it = rep.begin(); it != rep.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "command", "input",
                                         "verdict", "certificate",
                                         "timing_ms"});
}

TEST_CASE("text rendering is deterministic and structured") {
  Json rep = make_report("demo", "vars x; f1 = x",
                         Json{{"kind", "Ok"}, {"n", 3}},
                         Json{{"list", Json::array({"a", "b"})},
                              {"empty", Json::array()}},
                         0.5);
  std::string text = render_text(rep);
  CHECK(text == render_text(rep));  // deterministic
  // Key facts all appear.
  CHECK(text.find("command: demo") != std::string::npos);
  CHECK(text.find("kind: Ok") != std::string::npos);
  CHECK(text.find("- a") != std::string::npos);
  CHECK(text.find("empty: []") != std::string::npos);
}
