#include "polymap/report.hpp"

#include <sstream>

namespace polymap {

Json json_mpz(const mpz_class& v) { return v.get_str(); }

Json json_mpq(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  return c.get_str();
}

Json json_scalar(const Scalar& s) { return s.str(); }

Json json_mpz_list(const std::vector<mpz_class>& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(json_mpz(e));
  return arr;
}

Json json_residue_vector(const ResidueVector& v) {
  Json j;
  j["modulus"] = v.m.str();
  j["entries"] = json_mpz_list(v.entries);
  return j;
}

Json json_polynomial(const MultiPoly& p,
                     const std::vector<std::string>& vars) {
  return canonical_string(p, vars);
}

Json json_polymap(const PolyMap& f, const std::vector<std::string>& vars) {
  Json arr = Json::array();
  for (unsigned i = 0; i < f.dim(); ++i)
    arr.push_back(canonical_string(f.component(i), vars));
  return arr;
}

Json json_collision(const Collision& c) {
  Json j;
  j["a"] = json_residue_vector(c.a);
  j["b"] = json_residue_vector(c.b);
  j["image"] = json_mpz_list(c.image);
  return j;
}

Json json_bijectivity(const BijectivityEvidence& ev) {
  Json j;
  j["bijective"] = ev.bijective;
  j["points_checked"] = ev.points_checked;
  if (ev.collision) j["collision"] = json_collision(*ev.collision);
  if (ev.missed) j["missed_target"] = json_mpz_list(*ev.missed);
  return j;
}

Json json_local_verdict(const LocalSurjectivityVerdict& v) {
  Json j;
  j["p"] = v.p;
  j["surjective"] = v.surjective;
  j["bijective_mod_p"] = v.bijective_mod_p;
  j["det_nonvanishing"] = v.det_nonvanishing;
  if (v.missed_target_mod_p)
    j["missed_target_mod_p"] = json_mpz_list(*v.missed_target_mod_p);
  if (v.collision_mod_p) j["collision_mod_p"] = json_collision(*v.collision_mod_p);
  if (v.singular_point)
    j["singular_point"] = json_residue_vector(*v.singular_point);
  if (v.collision_mod_p2)
    j["collision_mod_p2"] = json_collision(*v.collision_mod_p2);
  j["verified"] = v.verified;
  return j;
}

namespace {

const char* obstruction_name(InvertibilityCertificate::Obstruction o) {
  switch (o) {
    case InvertibilityCertificate::Obstruction::None:
      return "None";
    case InvertibilityCertificate::Obstruction::DeterminantNotUnit:
      return "DeterminantNotUnit";
    case InvertibilityCertificate::Obstruction::NonIntegerCoefficient:
      return "NonIntegerCoefficient";
    case InvertibilityCertificate::Obstruction::NoPolynomialInverse:
      return "NoPolynomialInverse";
  }
  return "Unknown";
}

std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Json json_invertibility(const InvertibilityCertificate& cert,
                        const std::vector<std::string>& vars) {
  Json j;
  j["invertible"] =
      cert.outcome == InvertibilityCertificate::Outcome::Invertible;
  j["det_jacobian"] = json_polynomial(cert.det_jacobian, vars);
  j["degree_bound"] = cert.degree_bound;
  if (cert.inverse) j["inverse"] = json_polymap(*cert.inverse, vars);
  if (cert.outcome == InvertibilityCertificate::Outcome::NotInvertible)
    j["obstruction"] = obstruction_name(cert.obstruction);
  if (cert.offending_coefficient)
    j["offending_coefficient"] = json_mpq(*cert.offending_coefficient);
  if (cert.offending_monomial)
    j["offending_monomial"] = monomial_string(*cert.offending_monomial, vars);
  if (cert.offending_component)
    j["offending_component"] = *cert.offending_component + 1;
  if (cert.residual) j["residual"] = json_polynomial(*cert.residual, vars);
  return j;
}

Json json_classification(const Verdict& v,
                         const std::vector<std::string>& vars) {
  Json j;
  j["surjective_invertible"] = v.surjective_invertible;
  j["invertibility"] = json_invertibility(v.inv, vars);
  Json table = Json::array();
  for (const auto& entry : v.local_table)
    table.push_back(json_local_verdict(entry));
  j["local_table"] = table;
  if (!v.budget_exceeded_primes.empty())
    j["budget_exceeded_primes"] = v.budget_exceeded_primes;
  if (v.failing_prime) j["failing_prime"] = *v.failing_prime;
  j["consistency_ok"] = v.consistency_ok;
  j["consistency_note"] = v.consistency_note;
  return j;
}

Json json_solve(const std::vector<ResidueVector>& sols,
                const SolveStats& st) {
  Json j;
  j["count"] = sols.size();
  Json arr = Json::array();
  for (const auto& s : sols) arr.push_back(json_residue_vector(s));
  j["solutions"] = arr;
  j["seeds_scanned"] = st.seeds_scanned;
  j["nonsingular_seeds"] = st.nonsingular_seeds;
  j["singular_seeds"] = st.singular_seeds;
  j["level_extensions"] = st.level_extensions;
  return j;
}

Json json_probe(const InjectivityProbe& probe) {
  Json j;
  j["p"] = probe.p;
  j["k"] = probe.k;
  j["status"] = probe.status == ProbeStatus::InjectiveCertified
                    ? "InjectiveCertified"
                    : "Inconclusive";
  j["points_checked"] = probe.points_checked;
  if (probe.collision) j["collision"] = json_collision(*probe.collision);
  return j;
}

Json json_zp_noninjectivity(const ZpNoninjectivityCertificate& cert) {
  Json j;
  j["p"] = cert.p;
  j["seed_b"] = json_mpz(cert.seed_b);
  j["seed_c"] = json_mpz(cert.seed_c);
  j["lift_b"] = json_residue_vector(cert.lift_b);
  j["lift_c"] = json_residue_vector(cert.lift_c);
  j["common_value"] = json_mpz_list(cert.value);
  j["exact_target"] = json_mpz(cert.exact_target);
  return j;
}

Json json_integer_injectivity(const IntegerInjectivity& res) {
  Json j;
  j["injective"] = res.injective;
  if (res.witness) {
    Json w;
    w["a"] = json_mpz(res.witness->first);
    w["b"] = json_mpz(res.witness->second);
    j["witness"] = w;
  }
  j["window_lo"] = json_mpz(res.window_lo);
  j["window_hi"] = json_mpz(res.window_hi);
  j["points_checked"] = res.points_checked;
  return j;
}

Json json_zloc_witness(const ZlocWitness& w) {
  Json j;
  j["p"] = w.p;
  j["a"] = json_mpq(w.a);
  j["b"] = json_mpq(w.b);
  j["value"] = json_mpq(w.value);
  return j;
}

Json json_series_lift(const SeriesLiftResult& lift, const std::string& tvar) {
  Json j;
  j["order"] = lift.order;
  j["base"] = json_scalar(lift.base);
  j["solution"] = json_polynomial(lift.solution, {tvar});
  j["exact"] = lift.exact;
  j["residual"] = json_polynomial(lift.residual, {tvar});
  j["residual_norm"] = lift.residual_norm;
  return j;
}

Json json_diophantine_profile(const DiophantineProfile& prof) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : prof.rows) {
    Json r;
    r["p"] = row.p;
    r["k"] = row.k;
    if (row.budget_exceeded) {
      r["budget_exceeded"] = true;
    } else {
      r["solvable"] = row.solvable;
      r["n_solutions"] = row.n_solutions;
      if (row.example) r["example"] = json_residue_vector(*row.example);
    }
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["all_solvable"] = prof.all_solvable;
  if (prof.any_budget_exceeded) j["any_budget_exceeded"] = true;
  Json rats = Json::array();
  for (const auto& q : prof.rational_solutions) rats.push_back(json_mpq(q));
  j["rational_solutions"] = rats;
  Json ints = Json::array();
  for (const auto& z : prof.integer_solutions) ints.push_back(json_mpz(z));
  j["integer_solutions"] = ints;
  return j;
}

Json json_gallery(const std::vector<GalleryCaseResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json c;
    c["name"] = r.name;
    c["title"] = r.title;
    c["passed"] = r.passed;
    c["notes"] = r.notes;
    arr.push_back(c);
  }
  return arr;
}

Json make_report(const std::string& command, const std::string& input,
                 Json verdict, Json certificate, double timing_ms) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["input"] = input;
  j["verdict"] = std::move(verdict);
  j["certificate"] = std::move(certificate);
  j["timing_ms"] = timing_ms;
  return j;
}

namespace {

bool is_leaf(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string leaf_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_node(const Json& j, const std::string& indent,
                 std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_leaf(value)) {
        os << indent << key << ": " << leaf_string(value) << "\n";
      } else if (value.empty()) {
        os << indent << key << ": " << (value.is_array() ? "[]" : "{}")
           << "\n";
      } else {
        os << indent << key << ":\n";
        render_node(value, indent + "  ", os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (is_leaf(value)) {
        os << indent << "- " << leaf_string(value) << "\n";
      } else {
        os << indent << "-\n";
        render_node(value, indent + "  ", os);
      }
    }
  } else {
    os << indent << leaf_string(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_node(report, "", os);
  return os.str();
}

}  // namespace polymap
