#include "kzdisk/report.hpp"

#include <cmath>
#include <ctime>

namespace kzdisk {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json numbers(std::span<const double> xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number_or_null(x));
  return a;
}

}  // namespace

Json analysis_payload(const CoverParams& p) {
  Json j;
  j["cover"] = p.to_string();
  j["degree"] = p.degree();
  j["exponents"] = p.exponents();
  j["genus"] = genus(p);
  j["ramification_orders"] = ramification_orders(p);
  const EigenspaceDims dims = eigenspace_dims(p);
  j["eigenspace_dims"] = dims.dims;
  const auto m = square_root_index(p);
  j["orientable"] = m.has_value();
  j["square_root_index"] = m ? Json(*m) : Json(nullptr);
  if (!m) return j;

  const RootOfUnitySpectrum s = mqplus_spectrum(p);
  j["spectrum"] = {{"order", s.order()}, {"exponents", s.exponents()}};
  const RankBoundReport r = degeneracy_verdict(p);
  j["rank"] = {{"structural_rank", r.structural_rank},
               {"corollary_bound", r.corollary_bound},
               {"full_determinant_forced", r.full_determinant_forced},
               {"trivial_torus", r.trivial_torus}};
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json search_payload(const SearchReport& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    hits.push_back({{"cover", h.params.to_string()},
                    {"genus", h.report.genus},
                    {"structural_rank", h.report.structural_rank},
                    {"verdict", std::string(to_string(h.report.verdict))},
                    {"needs_review", h.needs_review},
                    {"even_cone_orders", h.even_cone_orders}});
  }
  return {{"n_max", r.n_max},
          {"examined", r.examined},
          {"skipped_nonorientable", r.skipped_nonorientable},
          {"genus_one", r.genus_one},
          {"hits", hits}};
}

Json origami_json(const Origami& o) {
  return {{"squares", o.squares()},
          {"right", o.right().to_cycle_string()},
          {"up", o.up().to_cycle_string()},
          {"deck", o.deck().to_cycle_string()},
          {"genus", origami_genus(o)},
          {"stratum", origami_stratum(o)}};
}

Json flat_payload(const PillowComplex& c) {
  Json j;
  j["cover"] = c.params().to_string();
  j["squares"] = c.squares();
  j["genus"] = complex_genus(c);
  Json verts = Json::array();
  for (const auto& v : complex_vertices(c)) {
    verts.push_back({{"branch_point", v.branch_point + 1}, {"corners", v.corners}, {"cone_angle_over_pi", v.corners / 2.0}});
  }
  j["vertices"] = verts;
  const StratumSignature sig = stratum_signature(c);
  j["quadratic_stratum"] = sig.quadratic_orders;
  j["abelian_stratum"] = sig.abelian_orders ? Json(*sig.abelian_orders) : Json(nullptr);
  j["orientable"] = holonomy_orientable(c);
  if (holonomy_orientable(c)) {
    const Origami o = to_origami(c);
    j["origami"] = origami_json(o);
    j["deck_check"] = deck_check(o, c.degree());
  } else {
    j["origami"] = nullptr;
  }
  return j;
}

Json lyapunov_payload(const LyapunovEstimate& e, const Json& source) {
  Json per_sample = Json::array();
  for (const auto& row : e.per_sample) per_sample.push_back(numbers(row));
  return {{"source", source},
          {"genus", e.genus},
          {"orbit_size", e.orbit_size},
          {"full_homology", e.full_homology},
          {"lambdas", numbers(e.lambdas)},
          {"stderr", numbers(e.std_error)},
          {"steps", e.steps},
          {"samples", e.samples},
          {"seed", e.seed},
          {"sum_check", number_or_null(e.sum_check)},
          {"log_growth_per_digit", number_or_null(e.log_growth_per_digit)},
          {"per_sample", per_sample}};
}

Json spectrum_payload(std::span<const double> kz, int sigma, std::span<const double> values) {
  return {{"kz", numbers(kz)},
          {"sigma", sigma},
          {"genus", kz.size()},
          {"count", values.size()},
          {"values", numbers(values)}};
}

Json envelope(std::string_view command, Json params_echo, std::string_view kind, Json payload,
              std::string timestamp) {
  payload["kind"] = std::string(kind);
  return {{"tool_version", std::string(kToolVersion)},
          {"command", std::string(command)},
          {"params_echo", std::move(params_echo)},
          {"timestamp", std::move(timestamp)},
          {"payload", std::move(payload)}};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace kzdisk
