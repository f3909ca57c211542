// Copyright 2026 The Schmidt Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidt/experiment.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "schmidt/continued_fractions.h"
#include "schmidt/fractal_ifs.h"
#include "schmidt/friendly_measures.h"
#include "schmidt/game.h"
#include "schmidt/linear_forms.h"
#include "schmidt/strategies.h"
#include "schmidt/support.h"
#include "schmidt/svg_writer.h"

namespace schmidt {
namespace {

// Parameter problems; mapped to kExitInvalidSpec.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Artifacts {
  nlohmann::json json;  // null when the command has no JSON output
  std::string csv;
  std::string svg;
  int status = kExitOk;
};

template <typename T>
T Param(const ExperimentSpec& spec, const char* key, T fallback) {
  if (!spec.params.contains(key)) return fallback;
  try {
    return spec.params.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SpecError(std::string("bad value for ") + key);
  }
}

Rational ParamRational(const ExperimentSpec& spec, const char* key,
                       const Rational& fallback) {
  if (!spec.params.contains(key)) return fallback;
  const nlohmann::json& j = spec.params.at(key);
  try {
    if (j.is_string()) return Rational::Parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number()) return Rational::FromDouble(j.get<double>());
  } catch (const std::invalid_argument&) {
  }
  throw SpecError(std::string("bad rational for ") + key);
}

std::string Fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string JoinLongs(const std::vector<long>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::json Base(const ExperimentSpec& spec) {
  return {{"spec", spec.ToJson()}};
}

std::vector<Rational> ScalesParam(const ExperimentSpec& spec,
                                  const std::string& fallback) {
  const std::string text = Param<std::string>(spec, "scales", fallback);
  try {
    return ParseScales(text);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

// ---------------------------------------------------------------- game

std::unique_ptr<Strategy> StrategyFromParams(const nlohmann::json& j,
                                             const std::string& fallback,
                                             std::uint64_t seed) {
  std::string name = fallback;
  nlohmann::json params = nlohmann::json::object();
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    name = j.value("name", fallback);
    if (j.contains("params")) params = j["params"];
  } else if (!j.is_null()) {
    throw SpecError("strategy must be a name or {name, params}");
  }
  if (name == "random" && !params.contains("seed")) params["seed"] = seed;
  try {
    return MakeStrategy(name, params);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(e.what());
  }
}

Artifacts GamePlay(const ExperimentSpec& spec) {
  GameConfig config;
  config.alpha = ParamRational(spec, "alpha", Rational(1, 2));
  config.beta = ParamRational(spec, "beta", Rational(1, 2));
  config.dim = Param<std::size_t>(spec, "dim", 1);
  try {
    config.support = MakeSupport(Param<std::string>(spec, "support", "none"));
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  const int rounds = Param<int>(spec, "rounds", 20);
  Ball initial(Point::Zero(config.dim), Rational(1));
  if (spec.params.contains("initial")) {
    try {
      initial = BallFromJson(spec.params["initial"]);
    } catch (const std::exception& e) {
      throw SpecError(std::string("bad initial ball: ") + e.what());
    }
  }
  const nlohmann::json none;
  auto white = StrategyFromParams(spec.params.value("white", none), "lazy",
                                  spec.seed);
  auto black = StrategyFromParams(spec.params.value("black", none), "lazy",
                                  spec.seed ^ 0x9e3779b97f4a7c15ULL);
  Transcript t;
  try {
    t = Play(config, *white, *black, initial, rounds);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  Artifacts a;
  a.json = Base(spec);
  a.json["white"] = {{"name", white->Name()}, {"params", white->Params()}};
  a.json["black"] = {{"name", black->Name()}, {"params", black->Params()}};
  a.json["transcript"] = ToJson(t);
  a.json["legal"] = t.legal();
  if (t.legal()) a.json["limit_enclosure"] = ToJson(LimitEnclosure(t));
  if (auto* avoid = dynamic_cast<WhiteRationalAvoid*>(white.get())) {
    nlohmann::json certs = nlohmann::json::array();
    for (const AvoidCertificate& c : avoid->certificates()) {
      certs.push_back({{"round", c.round},
                       {"cap", c.cap.get_str()},
                       {"bound", c.bound.ToString()},
                       {"ball", ToJson(c.ball)}});
    }
    a.json["certificates"] = certs;
  }
  if (auto* push = dynamic_cast<WhiteGradientPush*>(white.get())) {
    nlohmann::json recs = nlohmann::json::array();
    for (const PushRecord& r : push->records()) {
      recs.push_back({{"round", r.round}, {"nu", r.nu}, {"branch", r.branch},
                      {"K", r.K}, {"mu", r.mu}, {"min_minor", r.min_minor},
                      {"sup_prev", r.sup_prev}, {"grad_norm", r.grad_norm},
                      {"d_center", r.d_center}, {"d_push", r.d_push},
                      {"bound", r.bound}, {"exceeds", r.exceeds}});
    }
    a.json["push_records"] = recs;
  }
  return a;
}

Artifacts WindimDemo(const ExperimentSpec& spec) {
  const WindimParams w{Param<int>(spec, "N", 1)};
  const int rounds = Param<int>(spec, "rounds", 30);
  if (w.N < 1 || w.N > 8) throw SpecError("N must lie in [1, 8]");
  if (rounds < 0 || rounds > 200) throw SpecError("rounds must lie in [0, 200]");
  const GameConfig config = w.Config();
  BlackCantorZero black(w);
  auto white = StrategyFromParams(spec.params.value("white", nlohmann::json()),
                                  "random", spec.seed);
  const Transcript t = Play(config, *white, black, WindimParams::Opening(), rounds);

  bool black_legal = true;
  bool black_zero = true;
  bool radii_match = true;
  bool white_in_range = true;
  for (std::size_t i = 0; i < t.balls.size(); ++i) {
    const std::size_t k = i / 2;
    const Ball& b = t.balls[i];
    if (i % 2 == 0) {
      black_legal = black_legal && t.legality[i];
      black_zero = black_zero && b.center()[0].is_zero();
      radii_match = radii_match && b.radius() == w.BlackRadius(static_cast<int>(k));
    } else {
      radii_match = radii_match && b.radius() == w.WhiteRadius(static_cast<int>(k));
      const Rational& x = b.center()[0];
      white_in_range = white_in_range && x.sign() >= 0 &&
                       x <= w.RightmostWhiteCenter(static_cast<int>(k));
    }
  }
  const bool legal = t.legal();
  const bool contains_zero =
      legal && LimitEnclosure(t).Contains(Point::Zero(1));
  Artifacts a;
  a.json = Base(spec);
  a.json["alpha"] = w.alpha().ToString();
  a.json["beta"] = w.beta().ToString();
  a.json["transcript"] = ToJson(t);
  a.json["white"] = {{"name", white->Name()}, {"params", white->Params()}};
  a.json["checks"] = {{"black_all_legal", black_legal},
                      {"black_all_zero", black_zero},
                      {"radii_match", radii_match},
                      {"white_centers_in_range", white_in_range},
                      {"transcript_legal", legal},
                      {"limit_contains_zero", contains_zero}};
  if (legal) a.json["limit_enclosure"] = ToJson(LimitEnclosure(t));
  const bool ok = black_legal && black_zero && radii_match && legal &&
                  contains_zero;
  a.json["passed"] = ok;
  a.status = ok ? kExitOk : kExitCheckFailed;
  return a;
}

// ------------------------------------------------------------- badness

Artifacts Badness(const ExperimentSpec& spec) {
  if (!spec.params.contains("matrix")) throw SpecError("matrix required");
  nlohmann::json mj = spec.params["matrix"];
  if (mj.is_string()) {
    // Inline rows when the text starts with '[', otherwise a file path.
    const std::string text = mj.get<std::string>();
    const auto first = text.find_first_not_of(" \t\n");
    try {
      if (first != std::string::npos && text[first] == '[') {
        mj = nlohmann::json::parse(text);
      } else {
        std::ifstream f(text);
        if (!f) throw SpecError("cannot read matrix file " + text);
        mj = nlohmann::json::parse(f);
      }
    } catch (const nlohmann::json::exception& e) {
      throw SpecError(std::string("bad matrix: ") + e.what());
    }
  }
  LinearFormsMatrix a = LinearFormsMatrix::Zero(1, 1);
  try {
    a = LinearFormsMatrix::FromJson(mj);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  const long cap = Param<long>(spec, "cap", 1000);
  if (cap < 1) throw SpecError("cap must be >= 1");
  const std::vector<BadnessStep> steps = BadnessProfile(a, cap);
  std::ostringstream csv;
  csv << "cap[count],running_min[dimensionless],exact_min[rational],"
         "witness[integer vector]\n";
  for (const BadnessStep& s : steps) {
    csv << s.cap << ',' << Fmt(s.value) << ','
        << (s.exact_value ? s.exact_value->ToString() : "") << ','
        << JoinLongs(s.witness, ' ') << '\n';
  }
  Artifacts out;
  out.csv = csv.str();
  out.json = Base(spec);
  out.json["matrix"] = a.ToJson();
  const BadnessStep& last = steps.back();
  out.json["infimum"] = last.value;
  if (last.exact_value) out.json["exact_infimum"] = last.exact_value->ToString();
  out.json["witness"] = last.witness;
  return out;
}

// ---------------------------------------------------- continued fractions

std::vector<long> AlphabetParam(const ExperimentSpec& spec) {
  const nlohmann::json& j = spec.params.value("alphabet", nlohmann::json("1,3"));
  try {
    if (j.is_string()) return ParseLongList(j.get<std::string>());
    return j.get<std::vector<long>>();
  } catch (const std::exception& e) {
    throw SpecError(std::string("bad alphabet: ") + e.what());
  }
}

Artifacts CfCylinders(const ExperimentSpec& spec) {
  const std::vector<long> alphabet = AlphabetParam(spec);
  const int depth = Param<int>(spec, "depth", 4);
  if (depth < 1 || depth > 16) throw SpecError("depth must lie in [1, 16]");
  for (long d : alphabet) {
    if (d < 1) throw SpecError("digits must be >= 1");
  }
  const Rational mass =
      Pow(Rational(static_cast<std::int64_t>(alphabet.size())), -depth);
  std::ostringstream csv;
  csv << "word[digits],lo[rational],hi[rational],length[rational],"
         "length[decimal],measure[probability]\n";
  for (const CfWord& w : AllWords(alphabet, depth)) {
    const Cylinder c = CylinderInterval(w);
    std::string word = WordToString(w);
    std::replace(word.begin(), word.end(), ',', ' ');
    csv << word << ',' << c.lo.ToString() << ',' << c.hi.ToString()
        << ',' << c.length().ToString() << ',' << Fmt(c.length().ToDouble())
        << ',' << mass.ToString() << '\n';
  }
  Artifacts a;
  a.csv = csv.str();
  a.json = Base(spec);
  a.json["cylinders"] = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(alphabet.size()), depth));
  return a;
}

Artifacts CfRatioCheck(const ExperimentSpec& spec) {
  const std::vector<long> alphabet = AlphabetParam(spec);
  const int depth = Param<int>(spec, "depth", 12);
  if (depth < 1 || depth > 20) throw SpecError("depth must lie in [1, 20]");
  RatioReport r;
  try {
    r = RatioBoundsCheck(depth, alphabet);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  Artifacts a;
  a.json = Base(spec);
  a.json["report"] = {{"max_depth", r.max_depth},
                      {"pairs_checked", r.pairs_checked},
                      {"min_ratio", r.min_ratio.ToString()},
                      {"max_ratio", r.max_ratio.ToString()},
                      {"min_ratio_decimal", r.min_ratio.ToDouble()},
                      {"max_ratio_decimal", r.max_ratio.ToDouble()},
                      {"argmin", WordToString(r.argmin)},
                      {"argmax", WordToString(r.argmax)},
                      {"lower_bound", "1/12"},
                      {"upper_bound", "1/2"},
                      {"within_bounds", r.within_bounds},
                      {"largest_digit_shortest", r.largest_digit_shortest},
                      {"root_max_ratio", r.root_max_ratio.ToString()}};
  a.status = r.within_bounds ? kExitOk : kExitCheckFailed;
  return a;
}

// ------------------------------------------------------------------ ifs

Ifs IfsParam(const ExperimentSpec& spec, Ball* seed) {
  const std::string preset = Param<std::string>(spec, "preset", "cantor");
  try {
    Ifs ifs = PresetIfs(preset);
    *seed = PresetSeed(preset);
    return ifs;
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

Artifacts IfsRender(const ExperimentSpec& spec) {
  if (spec.svg_path.empty()) throw SpecError("ifs render needs an SVG path");
  Ball seed(Point::Zero(1), Rational(1));
  const Ifs ifs = IfsParam(spec, &seed);
  const int depth = Param<int>(spec, "depth", 6);
  if (depth < 0 || depth > 14) throw SpecError("depth must lie in [0, 14]");
  const AttractorApprox approx = IterateAttractor(ifs, depth, seed);
  std::vector<XY> pts;
  pts.reserve(approx.cells.size());
  for (const AttractorCell& c : approx.cells) {
    pts.emplace_back(c.center[0], ifs.dim() > 1 ? c.center[1] : 0.0);
  }
  SvgWriter svg = SvgWriter::Fit(pts);
  svg.Title(ifs.name() + " depth " + std::to_string(depth));
  svg.Scatter(pts, ifs.dim() > 1 ? 0.8 : 1.5);
  Artifacts a;
  a.svg = svg.ToString();
  a.json = Base(spec);
  a.json["cells"] = approx.cells.size();
  a.json["max_cell_diameter"] = approx.MaxCellDiameter();
  return a;
}

Artifacts IfsDim(const ExperimentSpec& spec) {
  Ball seed(Point::Zero(1), Rational(1));
  const Ifs ifs = IfsParam(spec, &seed);
  const int depth = Param<int>(spec, "depth", 10);
  if (depth < 0 || depth > 14) throw SpecError("depth must lie in [0, 14]");
  const std::vector<Rational> rs = ScalesParam(spec, "3:1:6");
  std::vector<double> scales;
  for (const Rational& r : rs) scales.push_back(r.ToDouble());
  const AttractorApprox approx = IterateAttractor(ifs, depth, seed);
  BoxCountFit fit;
  try {
    fit = BoxCountingDimension(approx, scales);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  std::ostringstream csv;
  csv << "scale[length],count[boxes],log_inv_scale[nats],log_count[nats],"
         "residual[nats]\n";
  for (std::size_t i = 0; i < fit.scales.size(); ++i) {
    csv << Fmt(fit.scales[i]) << ',' << fit.counts[i] << ','
        << Fmt(std::log(1.0 / fit.scales[i])) << ','
        << Fmt(std::log(static_cast<double>(fit.counts[i]))) << ','
        << Fmt(fit.residuals[i]) << '\n';
  }
  Artifacts a;
  a.csv = csv.str();
  a.json = Base(spec);
  a.json["box_counting"] = {{"estimate", fit.estimate},
                            {"intercept", fit.intercept},
                            {"r_squared", fit.r_squared}};
  a.json["similarity_dimension"] = SimilarityDimension(ifs);
  return a;
}

// ------------------------------------------------------------- measures

CylinderMeasure MeasureParam(const ExperimentSpec& spec) {
  try {
    return CylinderMeasure::Preset(Param<std::string>(spec, "preset", "cf13"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

Artifacts MeasureDoubling(const ExperimentSpec& spec) {
  const CylinderMeasure m = MeasureParam(spec);
  const int depth = Param<int>(spec, "depth", 16);
  const auto samples = Param<std::size_t>(spec, "samples", 16);
  const std::vector<Rational> scales = ScalesParam(spec, "3:2:8");
  if (depth < 1 || depth > m.depth_cap()) throw SpecError("depth out of range");
  const std::vector<Point> centers =
      SampleCenters(m, samples, Param<int>(spec, "sample_depth", depth),
                    spec.seed);
  DoublingReport r;
  try {
    r = DoublingEstimate(m, centers, scales, depth);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  std::ostringstream csv;
  csv << "rho[length],min_ratio[dimensionless]\n";
  for (std::size_t i = 0; i < scales.size(); ++i) {
    csv << scales[i].ToString() << ',' << Fmt(r.per_scale[i]) << '\n';
  }
  Artifacts a;
  a.csv = csv.str();
  a.json = Base(spec);
  a.json["doubling"] = {{"estimate", r.estimate},
                        {"certified_positive", r.estimate > 0.0},
                        {"samples", r.samples},
                        {"spread", r.spread},
                        {"worst_scale", r.worst_scale.ToString()},
                        {"worst_center", ToJson(Ball(r.worst_center,
                                                     r.worst_scale))["center"]}};
  return a;
}

Artifacts MeasureDecay(const ExperimentSpec& spec) {
  const CylinderMeasure m = MeasureParam(spec);
  const int depth = Param<int>(spec, "depth", 14);
  const auto samples = Param<std::size_t>(spec, "samples", 8);
  const int levels = Param<int>(spec, "levels", 5);
  const std::string reading = Param<std::string>(spec, "reading", "equal");
  if (reading != "equal" && reading != "sup") {
    throw SpecError("reading must be equal or sup");
  }
  const std::vector<Rational> scales = ScalesParam(spec, "3:2:5");
  if (depth < 1 || depth > m.depth_cap()) throw SpecError("depth out of range");
  const std::vector<Point> centers =
      SampleCenters(m, samples, Param<int>(spec, "sample_depth", depth),
                    spec.seed);
  DecayReport r;
  try {
    r = DecayEstimate(m, centers, scales, depth, levels,
                      reading == "sup" ? DecayScale::kSupOverSmaller
                                       : DecayScale::kEqual);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  std::ostringstream csv;
  csv << "rho[length],eps_over_rho[dimensionless],worst_ratio[dimensionless]\n";
  for (const DecayRow& row : r.rows) {
    csv << row.rho.ToString() << ',' << row.eps_over_rho.ToString() << ','
        << Fmt(row.worst_ratio) << '\n';
  }
  Artifacts a;
  a.csv = csv.str();
  a.json = Base(spec);
  a.json["decay"] = {{"a", r.a},
                     {"C", r.C},
                     {"r_squared", r.r_squared},
                     {"eps_levels", r.eps_levels},
                     {"worst_by_level", r.worst_by_level},
                     {"residuals", r.residuals},
                     {"degenerate", r.degenerate}};
  return a;
}

// -------------------------------------------------------------- theorem

Artifacts TheoremScheduleCmd(const ExperimentSpec& spec) {
  const double R = Param<double>(spec, "R", 2.0);
  const int M = Param<int>(spec, "M", 1);
  const int N = Param<int>(spec, "N", 1);
  const int stages = Param<int>(spec, "stages", 4);
  if (!(R > 1.0)) throw SpecError("R must exceed 1");
  if (M < 1 || N < 1 || M > 6 || N > 6) throw SpecError("M, N must lie in [1, 6]");
  if (stages < 1 || stages > 64) throw SpecError("stages must lie in [1, 64]");
  const TheoremSchedule s = TheoremSchedule::Make(R, M, N);
  nlohmann::json windows = nlohmann::json::array();
  for (int i = 0; i < stages; ++i) {
    const WindowRecord w = ScheduleWindows(s, i);
    windows.push_back({{"i", w.i},
                       {"x_exp", w.x_exp.ToString()},
                       {"a_exp", w.a_exp.ToString()},
                       {"y_exp", w.y_exp.ToString()},
                       {"y_low_exp", w.y_low_exp.ToString()},
                       {"b_exp", w.b_exp.ToString()},
                       {"x_radius_exp", w.x_radius_exp.ToString()},
                       {"y_radius_exp", w.y_radius_exp.ToString()},
                       {"x_bound", w.x_bound},
                       {"a_bound", w.a_bound},
                       {"y_bound", w.y_bound},
                       {"y_low", w.y_low},
                       {"b_bound", w.b_bound},
                       {"x_radius", w.x_radius},
                       {"y_radius", w.y_radius}});
  }
  Artifacts a;
  a.json = Base(spec);
  a.json["schedule"] = {{"R", R},
                        {"M", M},
                        {"N", N},
                        {"L", s.L()},
                        {"lambda", s.lambda.ToString()},
                        {"delta_exp", s.delta_exp.ToString()},
                        {"delta_t_exp", s.delta_t_exp.ToString()},
                        {"delta", s.delta()},
                        {"delta_t", s.delta_t()},
                        {"final_exponent", FinalBadnessExponent(s).ToString()},
                        {"final_bound", FinalBadnessBound(s)}};
  a.json["windows"] = windows;
  return a;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

Artifacts Dispatch(const ExperimentSpec& spec) {
  const std::string& c = spec.subcommand;
  if (c == "game play") return GamePlay(spec);
  if (c == "game windim-demo") return WindimDemo(spec);
  if (c == "badness") return Badness(spec);
  if (c == "cf cylinders") return CfCylinders(spec);
  if (c == "cf ratio-check") return CfRatioCheck(spec);
  if (c == "ifs render") return IfsRender(spec);
  if (c == "ifs dim") return IfsDim(spec);
  if (c == "measure doubling") return MeasureDoubling(spec);
  if (c == "measure decay") return MeasureDecay(spec);
  if (c == "theorem schedule") return TheoremScheduleCmd(spec);
  throw SpecError("unknown subcommand: " + c);
}

}  // namespace

nlohmann::json ExperimentSpec::ToJson() const {
  return {{"subcommand", subcommand},
          {"params", params},
          {"seed", seed},
          {"outputs", {{"json", json_path}, {"csv", csv_path}, {"svg", svg_path}}}};
}

std::vector<std::string> Subcommands() {
  return {"game play",    "game windim-demo", "badness",
          "cf cylinders", "cf ratio-check",   "ifs render",
          "ifs dim",      "measure doubling", "measure decay",
          "theorem schedule"};
}

int Run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  Artifacts a;
  try {
    if (!spec.params.is_object()) throw SpecError("params must be an object");
    a = Dispatch(spec);
  } catch (const SpecError& e) {
    err << "invalid spec: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid spec: " << e.what() << '\n';
    return kExitInvalidSpec;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  try {
    const std::string json = a.json.is_null() ? "" : a.json.dump(2) + "\n";
    if (!a.csv.empty()) {
      if (spec.csv_path.empty()) {
        out << a.csv;
      } else {
        WriteFile(spec.csv_path, a.csv);
      }
      if (!spec.json_path.empty() && !json.empty()) {
        WriteFile(spec.json_path, json);
      }
    } else if (!json.empty()) {
      if (spec.json_path.empty()) {
        out << json;
      } else {
        WriteFile(spec.json_path, json);
      }
    }
    if (!a.svg.empty()) WriteFile(spec.svg_path, a.svg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (a.status == kExitCheckFailed) {
    err << "property check failed: " << spec.subcommand << '\n';
  }
  return a.status;
}

std::vector<Rational> ParseScales(const std::string& text) {
  std::vector<Rational> out;
  if (text.find(':') != std::string::npos) {
    std::istringstream is(text);
    std::string base, k0, k1;
    if (!std::getline(is, base, ':') || !std::getline(is, k0, ':') ||
        !std::getline(is, k1)) {
      throw std::invalid_argument("scales must be base:kmin:kmax");
    }
    const Rational b = Rational::Parse(base);
    long lo = 0, hi = 0;
    try {
      lo = std::stol(k0);
      hi = std::stol(k1);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent range in scales");
    }
    if (b <= Rational(1) || lo > hi || hi - lo > 64) {
      throw std::invalid_argument("scales need base > 1 and a short range");
    }
    for (long k = lo; k <= hi; ++k) out.push_back(Pow(b, -k));
    return out;
  }
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Rational::Parse(item));
    if (out.back().sign() <= 0) throw std::invalid_argument("scales must be positive");
  }
  if (out.empty()) throw std::invalid_argument("no scales given");
  return out;
}

std::vector<long> ParseLongList(const std::string& text) {
  std::vector<long> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace schmidt
