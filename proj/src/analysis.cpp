#include "nclorentz/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "nclorentz/constitutive.hpp"
#include "nclorentz/duality.hpp"
#include "nclorentz/error.hpp"
#include "nclorentz/lorentz.hpp"
#include "nclorentz/smallgroup.hpp"

namespace nclorentz {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }
Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }
Json to_json(const CVector3& v) { return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)}); }
Json to_json(const LorentzElement& L) { return Json{{"k0", to_json(L.k0())}, {"k", to_json(L.k())}}; }
Json to_json(const ThetaTensor& t) {
  Json rows = Json::array();
  for (const auto& row : t.m) rows.push_back(Json::array({row[0], row[1], row[2], row[3]}));
  return rows;
}
Json to_json(const GroupParameter& p) {
  if (p.kind == GroupKind::NonIsotropic) return Json{{"chi", to_json(p.chi)}};
  return Json{{"w", to_json(p.w)}, {"sign", p.sign}};
}

Vec3 read_vec3(const Json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, std::string(name) + " must be an array of 3 numbers");
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number()) throw Error(ErrorCode::ParseError, std::string(name) + " entries must be numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Vec3 vec(double r) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
  Vec3 direction() {
    for (;;) {
      const Vec3 v = vec(1.0);
      const double n = norm(v);
      if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
    }
  }
  Complex complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }

 private:
  std::mt19937_64 rng_;
};

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Checks {
  Json json = Json::object();
  bool all = true;
  void add(const std::string& name, bool ok) {
    json[name] = ok;
    all = all && ok;
  }
};

}  // namespace

AnalysisInput parse_input(const std::string& text, const Tolerances& tol) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
  const bool has_matrix = doc.contains("theta_matrix");
  const bool has_vectors = doc.contains("epsilon") || doc.contains("theta");
  if (has_matrix && has_vectors) {
    throw Error(ErrorCode::ParseError, "give either theta_matrix or epsilon/theta, not both");
  }
  AnalysisInput in;
  if (has_matrix) {
    const Json& m = doc["theta_matrix"];
    if (!m.is_array() || m.size() != 4) throw Error(ErrorCode::ParseError, "theta_matrix must be 4x4");
    for (std::size_t i = 0; i < 4; ++i) {
      if (!m[i].is_array() || m[i].size() != 4) throw Error(ErrorCode::ParseError, "theta_matrix must be 4x4");
      for (std::size_t j = 0; j < 4; ++j) {
        if (!m[i][j].is_number()) throw Error(ErrorCode::ParseError, "theta_matrix entries must be numbers");
        in.tensor.m[i][j] = m[i][j].get<double>();
      }
    }
    in.vectors = vectors_from_tensor(in.tensor, tol);
    in.from_matrix = true;
    return in;
  }
  if (!doc.contains("epsilon") || !doc.contains("theta")) {
    throw Error(ErrorCode::ParseError, "need theta_matrix, or both epsilon and theta");
  }
  in.vectors.epsilon = read_vec3(doc["epsilon"], "epsilon");
  in.vectors.theta = read_vec3(doc["theta"], "theta");
  in.tensor = tensor_from_vectors(in.vectors);
  return in;
}

AnalysisReport analyze(const AnalysisInput& in, const AnalysisConfig& cfg) {
  if (cfg.scan_n < 8) throw Error(ErrorCode::InvalidArgument, "scan resolution must be >= 8");
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "trial count must be >= 1");

  const Tolerances& tol = cfg.tolerances;
  Sampler rng(cfg.seed);
  AnalysisReport rep;
  Json& out = rep.json;
  out["tool"] = {{"name", "nclorentz"}, {"version", kVersion}};
  if (cfg.timestamp) out["generated_at"] = timestamp_now();
  out["config"] = {{"scan_n", cfg.scan_n}, {"trials", cfg.trials}, {"seed", cfg.seed}};
  out["input"] = {{"form", in.from_matrix ? "theta_matrix" : "vectors"},
                  {"theta_matrix", to_json(in.tensor)},
                  {"epsilon", to_json(in.vectors.epsilon)},
                  {"theta", to_json(in.vectors.theta)}};

  const KVector k = k_from_vectors(in.vectors);
  const KInvariants inv = invariants(k);
  out["K"] = to_json(k.k);
  out["invariants"] = {{"K_square", to_json(inv.square)},
                       {"theta2_minus_eps2", inv.re_part},
                       {"theta_dot_eps", dot(in.vectors.theta, in.vectors.epsilon)}};
  const KClass cls = classify(k, tol.classify);
  out["classification"] = to_string(cls);

  Checks checks;
  if (cls == KClass::Zero) {
    out["note"] = "K = 0: the stabilizer is the full Lorentz group";
    out["checks"] = checks.json;
    out["passed"] = true;
    rep.summary = "Zero: stabilizer is the full Lorentz group";
    return rep;
  }

  // Thresholds below are stated for |K| ~ 1; rescale for larger inputs.
  const double scale = std::max(1.0, hnorm(k.k) * hnorm(k.k));
  const SmallGroupDescriptor d = describe(k, tol.classify);
  const bool iso = d.kind == GroupKind::Isotropic;
  auto random_param = [&]() {
    if (iso) {
      const Complex w = rng.complex(1.0);
      return GroupParameter::shift(w, rng.uniform(0.0, 1.0) < 0.5 ? -1 : 1);
    }
    return GroupParameter::angle(rng.complex(1.0));
  };

  Json sg;
  sg["kind"] = to_string(d.kind);
  sg["phi"] = to_json(d.phi);
  if (!iso) {
    sg["phi_hat"] = to_json(d.phi_hat);
    sg["sqrt_phi_square"] = to_json(d.sqrt_square);
  }

  std::vector<GroupParameter> samples;
  if (iso) {
    samples = {GroupParameter::shift(1.0), GroupParameter::shift(kI)};
  } else {
    samples = {GroupParameter::angle(0.5), GroupParameter::angle(0.5 * kI), GroupParameter::angle({0.5, 0.5})};
  }
  double max_stab = 0.0;
  Json elems = Json::array();
  for (const auto& p : samples) {
    const LorentzElement L = element(d, p);
    const double r = stabilizes(L, k);
    max_stab = std::max(max_stab, r);
    elems.push_back({{"parameter", to_json(p)}, {"element", to_json(L)}, {"stabilizer_residual", r}});
  }
  sg["sample_elements"] = elems;

  double max_law = 0.0, max_abelian = 0.0, max_invariance = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    const GroupParameter p1 = random_param();
    const GroupParameter p2 = random_param();
    const LorentzElement a = element(d, p1);
    const LorentzElement b = element(d, p2);
    max_stab = std::max(max_stab, stabilizes(a, k));
    max_law = std::max(max_law, group_law_check(d, p1, p2));
    max_abelian = std::max(max_abelian, distance(compose(a, b), compose(b, a)));
    const Vec3 e = rng.vec(1.0);
    const Vec3 b_field = rng.vec(1.0);
    max_invariance = std::max(max_invariance, verify_constitutive_invariance(k, a, e, b_field));
  }
  // A generic element outside the small group must be visible.
  const Vec3 rot_axis = rng.direction();
  const Vec3 boost_axis = rng.direction();
  const LorentzElement outsider = compose(rotation_element(rot_axis, 0.5), boost_element(boost_axis, 0.4));
  const double outsider_stab = stabilizes(outsider, k);
  const double outsider_inv = verify_constitutive_invariance(k, outsider, {1, 0, 0}, {0, 1, 0});

  sg["max_stabilizer_residual"] = max_stab;
  sg["max_group_law_defect"] = max_law;
  sg["max_abelian_defect"] = max_abelian;
  sg["max_constitutive_invariance_residual"] = max_invariance;
  sg["outsider"] = {{"element", to_json(outsider)},
                    {"stabilizer_residual", outsider_stab},
                    {"constitutive_invariance_residual", outsider_inv}};
  out["small_group"] = sg;
  checks.add("stabilizer", max_stab <= 1e-12 * scale);
  checks.add("group_law", max_law <= 1e-12 * scale);
  checks.add("abelian", max_abelian <= 1e-12 * scale);
  checks.add("constitutive_invariance", max_invariance <= 1e-12 * scale);
  checks.add("outsider_detected", outsider_stab > 1e-4 * hnorm(k.k));

  // Canonical form.
  Json cf;
  if (!iso) {
    const CanonicalForm c = canonical_form(k, tol.classify);
    const CVector3 moved = act_vector(c.L, d.phi_hat);
    const double imag_res = max_abs(imag(moved));
    const double inv_drift = std::abs(dot(c.k_canonical.k, c.k_canonical.k) - inv.square);
    cf = {{"L", to_json(c.L)},
          {"K_canonical", to_json(c.k_canonical.k)},
          {"phi_hat_image", to_json(moved)},
          {"imag_residual", imag_res},
          {"K_square_drift", inv_drift}};
    checks.add("canonical_real", imag_res <= 1e-11);
    checks.add("canonical_invariant", inv_drift <= 1e-12 * scale);
  } else {
    const CanonicalForm c = canonical_form_isotropic(k, tol.classify);
    const CVector3 moved = act_vector(c.L, d.phi);
    const double res = max_abs(moved - CVector3{1.0, -kI, 0.0});
    cf = {{"L", to_json(c.L)}, {"K_canonical", to_json(c.k_canonical.k)}, {"phi_image", to_json(moved)},
          {"reference_residual", res}};
    checks.add("canonical_reference", res <= 1e-11);
  }
  out["canonical_form"] = cf;

  // Rotation / boost split of one element.
  {
    const GroupParameter p = iso ? GroupParameter::shift({1.0, 1.0}) : GroupParameter::angle({0.5, 0.5});
    const LorentzElement L = element(d, p);
    const Factorization f = factorize(L);
    const double recompose = distance(compose(f.rotation, f.boost), L);
    out["factorization"] = {{"parameter", to_json(p)},
                            {"element", to_json(L)},
                            {"rotation", to_json(f.rotation)},
                            {"boost", to_json(f.boost)},
                            {"recomposition_defect", recompose}};
    checks.add("factorization", recompose <= 1e-12 * scale);
  }

  // Duality scan on a random consistent state.
  {
    FieldState fs;
    fs.E = rng.vec(1.0);
    fs.B = rng.vec(1.0);
    const GRState st = consistent_state(fs, k);
    const auto scan = duality_scan(st, k, cfg.scan_n, tol);
    Json points = Json::array();
    bool zeros_ok = true, off_ok = true;
    Json zeros = Json::array();
    for (const auto& pt : scan) {
      points.push_back(Json::array({pt.chi, pt.residual, to_string(pt.phase)}));
      const double quarter = std::numbers::pi / 2.0;
      const double dist = std::abs(pt.chi - quarter * std::round(pt.chi / quarter));
      if (pt.phase != DualPhase::None) {
        zeros.push_back({{"chi", pt.chi},
                         {"phase", to_string(pt.phase)},
                         {"trivial", pt.phase == DualPhase::Identity || pt.phase == DualPhase::SignFlip},
                         {"residual", pt.residual}});
        zeros_ok = zeros_ok && pt.residual <= tol.duality_zero * scale;
      } else if (dist >= std::numbers::pi / 36.0 - 1e-12) {
        off_ok = off_ok && pt.residual >= 1e-6;
      }
    }
    out["duality_scan"] = {{"state", {{"E", to_json(fs.E)}, {"B", to_json(fs.B)}}},
                           {"pre_rotation_gr_residual", constitutive_residual_gr(st, k)},
                           {"zeros", zeros},
                           {"columns", Json::array({"chi", "residual", "phase"})},
                           {"points", points}};
    checks.add("duality_zeros", zeros_ok);
    checks.add("duality_broken_elsewhere", off_ok);
    if (cfg.csv) {
      std::ofstream csv(*cfg.csv);
      if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.csv->string());
      csv << "chi,residual,phase\n";
      char line[96];
      for (const auto& pt : scan) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,", pt.chi, pt.residual);
        csv << line << to_string(pt.phase) << '\n';
      }
    }
  }

  out["checks"] = checks.json;
  out["passed"] = checks.all;
  rep.passed = checks.all;
  rep.exit_code = checks.all ? ExitCode::Pass : ExitCode::CheckFailed;
  std::ostringstream s;
  s << to_string(cls) << ": " << (checks.all ? "all checks passed" : "some checks FAILED");
  rep.summary = s.str();
  return rep;
}

AnalysisReport run_analysis(const AnalysisConfig& cfg) {
  AnalysisReport rep;
  try {
    std::ifstream f(cfg.input);
    if (!f) throw Error(ErrorCode::ParseError, "cannot read " + cfg.input.string());
    std::stringstream buf;
    buf << f.rdbuf();
    rep = analyze(parse_input(buf.str(), cfg.tolerances), cfg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError && e.code() != ErrorCode::NotAntisymmetric &&
        e.code() != ErrorCode::InvalidArgument) {
      throw;
    }
    rep = AnalysisReport{};
    rep.json["tool"] = {{"name", "nclorentz"}, {"version", kVersion}};
    rep.json["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    rep.passed = false;
    rep.exit_code = ExitCode::InputError;
    rep.summary = std::string("input error: ") + e.what();
  }
  if (!cfg.report.empty()) {
    std::ofstream r(cfg.report);
    if (!r) {
      rep.exit_code = ExitCode::InputError;
      rep.summary = "cannot write report " + cfg.report.string();
      return rep;
    }
    r << rep.json.dump(2) << '\n';
  }
  return rep;
}

}  // namespace nclorentz
