#pragma once

// Structured JSON reports for every verdict and certificate type, plus a
// deterministic text rendering derived from the JSON (never the reverse).
// Big integers and rationals are serialized as decimal strings ("-42",
// "3/7") so reports are lossless at any magnitude.

#include <string>
#include <vector>

#include "json.hpp"
#include "polymap/classify.hpp"
#include "polymap/parse.hpp"

namespace polymap {

using Json = nlohmann::ordered_json;

Json json_mpz(const mpz_class& v);
Json json_mpq(const mpq_class& v);
Json json_scalar(const Scalar& s);
Json json_mpz_list(const std::vector<mpz_class>& v);
Json json_residue_vector(const ResidueVector& v);
Json json_polynomial(const MultiPoly& p, const std::vector<std::string>& vars);
Json json_polymap(const PolyMap& f, const std::vector<std::string>& vars);

Json json_collision(const Collision& c);
Json json_bijectivity(const BijectivityEvidence& ev);
Json json_local_verdict(const LocalSurjectivityVerdict& v);
Json json_invertibility(const InvertibilityCertificate& cert,
                        const std::vector<std::string>& vars);
Json json_classification(const Verdict& v, const std::vector<std::string>& vars);
Json json_solve(const std::vector<ResidueVector>& sols, const SolveStats& st);
Json json_probe(const InjectivityProbe& probe);
Json json_zp_noninjectivity(const ZpNoninjectivityCertificate& cert);
Json json_integer_injectivity(const IntegerInjectivity& res);
Json json_zloc_witness(const ZlocWitness& w);
Json json_series_lift(const SeriesLiftResult& lift, const std::string& tvar);
Json json_diophantine_profile(const DiophantineProfile& prof);
Json json_gallery(const std::vector<GalleryCaseResult>& results);

// Assemble the versioned report envelope.
Json make_report(const std::string& command, const std::string& input,
                 Json verdict, Json certificate, double timing_ms);

// Deterministic indented text derived from the JSON tree.
std::string render_text(const Json& report);

}  // namespace polymap
