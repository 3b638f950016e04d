#include "vsde/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "vsde/dibr_oracle.hpp"
#include "vsde/media_io.hpp"

namespace vsde::harness {

using nlohmann::json;

namespace {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(where + ": bad '" + key + "': " + e.what());
  }
}

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

TextureSpec parse_texture(const json& j, const std::string& where) {
  TextureSpec t;
  t.kind = parse_texture_kind(required<std::string>(j, "kind", where));
  t.mean = optional_field(j, "mean", t.mean);
  t.amplitude = optional_field(j, "amplitude", t.amplitude);
  t.slope = optional_field(j, "slope", t.slope);
  t.frequency = optional_field(j, "frequency", t.frequency);
  t.frequency_y = optional_field(j, "frequency_y", t.frequency_y);
  t.cutoff = optional_field(j, "cutoff", t.cutoff);
  t.period = optional_field(j, "period", t.period);
  return t;
}

json texture_json(const TextureSpec& t) {
  return {{"kind", to_string(t.kind)}, {"mean", t.mean},
          {"amplitude", t.amplitude},  {"slope", t.slope},
          {"frequency", t.frequency},  {"frequency_y", t.frequency_y},
          {"cutoff", t.cutoff},        {"period", t.period}};
}

SceneSpec parse_scene(const json& j, const std::string& where) {
  SceneSpec s;
  s.width = required<int>(j, "width", where);
  s.height = required<int>(j, "height", where);
  s.seed = required<std::uint64_t>(j, "seed", where);
  const auto layers = required<json>(j, "layers", where);
  if (!layers.is_array()) throw std::invalid_argument(where + ": 'layers' must be an array");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto lw = where + ".layers[" + std::to_string(i) + "]";
    const auto& l = layers[i];
    s.layers.push_back({required<int>(l, "depth", lw), required<int>(l, "x_begin", lw),
                        required<int>(l, "x_end", lw),
                        parse_texture(required<json>(l, "texture", lw), lw + ".texture")});
  }
  s.validate();
  return s;
}

json scene_json(const SceneSpec& s) {
  json layers = json::array();
  for (const auto& l : s.layers)
    layers.push_back({{"depth", l.depth_level}, {"x_begin", l.x_begin},
                      {"x_end", l.x_end}, {"texture", texture_json(l.texture)}});
  return {{"width", s.width}, {"height", s.height}, {"seed", s.seed}, {"layers", layers}};
}

NoiseLaw parse_law(const json& j, const std::string& where) {
  if (j.is_null()) return {};
  NoiseLaw law{parse_noise_kind(required<std::string>(j, "kind", where)),
               optional_field(j, "scale", 0.0)};
  law.variance();  // validates the scale
  return law;
}

json law_json(const NoiseLaw& l) { return {{"kind", to_string(l.kind)}, {"scale", l.scale}}; }

NoiseSpec parse_noise(const json& j, const std::string& where) {
  NoiseSpec n;
  n.seed = required<std::uint64_t>(j, "seed", where);
  n.texture = parse_law(j.value("texture", json()), where + ".texture");
  n.depth = parse_law(j.value("depth", json()), where + ".depth");
  return n;
}

CameraConfig parse_camera(const json& j, const std::string& where) {
  CameraConfig c;
  c.focal_px = required<double>(j, "focal_px", where);
  c.x_left = required<double>(j, "x_left", where);
  c.x_right = required<double>(j, "x_right", where);
  c.x_virtual = required<double>(j, "x_virtual", where);
  c.z_near = required<double>(j, "z_near", where);
  c.z_far = required<double>(j, "z_far", where);
  c.validate();
  return c;
}

json camera_json(const CameraConfig& c) {
  return {{"focal_px", c.focal_px}, {"x_left", c.x_left}, {"x_right", c.x_right},
          {"x_virtual", c.x_virtual}, {"z_near", c.z_near}, {"z_far", c.z_far}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("manifest: ") + e.what());
  }
}

}  // namespace

CaseFrames make_case_frames(const ValidationCase& c) {
  CaseFrames f{generate_scene(c.scene, c.camera), {}};
  const auto& o = f.original;
  const auto s = c.noise.seed;
  f.decoded = {simulate_compression(o.texture_left, c.noise.texture, stream_seed(s, 0)),
               simulate_compression(o.depth_left, c.noise.depth, stream_seed(s, 1)),
               simulate_compression(o.texture_right, c.noise.texture, stream_seed(s, 2)),
               simulate_compression(o.depth_right, c.noise.depth, stream_seed(s, 3))};
  return f;
}

CaseResult run_case(const ValidationCase& c, const EstimatorParams& params) {
  const auto f = make_case_frames(c);
  const auto& o = f.original;
  const auto& d = f.decoded;
  CaseResult r{c.name,
               estimate_frame(o.texture_left, o.depth_left, o.texture_right,
                              o.depth_right, d.texture_left, d.depth_left,
                              d.texture_right, d.depth_right, c.camera, params)};
  const auto u = oracle::synthesize(o.texture_left, o.depth_left, o.texture_right,
                                    o.depth_right, c.camera);
  const auto w = oracle::synthesize(d.texture_left, d.depth_left, d.texture_right,
                                    d.depth_right, c.camera);
  r.report.oracle_mse = mse(u.view, w.view);
  return r;
}

ValidationSummary summarize(std::span<const double> estimates,
                            std::span<const double> actuals) {
  if (estimates.size() != actuals.size())
    throw std::invalid_argument("summarize: length mismatch");
  const std::size_t n = estimates.size();
  if (n < 2) throw std::invalid_argument("summarize: need at least two cases");

  ValidationSummary s;
  s.n_cases = n;
  double me = 0.0, ma = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    me += estimates[i];
    ma += actuals[i];
  }
  me /= n;
  ma /= n;
  double see = 0.0, saa = 0.0, sea = 0.0, sq = 0.0;
  std::vector<double> rel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double de = estimates[i] - me, da = actuals[i] - ma;
    see += de * de;
    saa += da * da;
    sea += de * da;
    const double diff = estimates[i] - actuals[i];
    sq += diff * diff;
    rel[i] = actuals[i] != 0.0 ? std::abs(diff) / std::abs(actuals[i])
             : diff == 0.0     ? 0.0
                               : std::numeric_limits<double>::infinity();
  }
  // Two constant series are perfectly (if trivially) linearly related.
  if (see == 0.0 || saa == 0.0)
    s.pcc = see == saa ? 1.0 : 0.0;
  else
    s.pcc = std::clamp(sea / std::sqrt(see * saa), -1.0, 1.0);
  s.rmse = std::sqrt(sq / n);
  std::sort(rel.begin(), rel.end());
  s.median_relative_error = n % 2 ? rel[n / 2] : 0.5 * (rel[n / 2 - 1] + rel[n / 2]);
  return s;
}

ValidationResult validate_run(const std::vector<ValidationCase>& cases,
                              const EstimatorParams& params) {
  ValidationResult out;
  out.cases.reserve(cases.size());
  for (const auto& c : cases) out.cases.push_back(run_case(c, params));
  std::vector<double> est, act;
  for (const auto& r : out.cases) {
    est.push_back(r.report.e_total);
    act.push_back(*r.report.oracle_mse);
  }
  out.summary = summarize(est, act);
  return out;
}

std::vector<ValidationCase> parse_case_manifest(const std::string& text) {
  const auto j = parse_json(text);
  const auto& list = j.is_array() ? j : required<json>(j, "cases", "manifest");
  if (!list.is_array()) throw std::invalid_argument("manifest: 'cases' must be an array");
  std::vector<ValidationCase> cases;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto where = "cases[" + std::to_string(i) + "]";
    const auto& c = list[i];
    cases.push_back({c.value("name", where),
                     parse_scene(required<json>(c, "scene", where), where + ".scene"),
                     parse_noise(required<json>(c, "noise", where), where + ".noise"),
                     parse_camera(required<json>(c, "camera", where), where + ".camera")});
  }
  return cases;
}

std::string format_case_manifest(const std::vector<ValidationCase>& cases) {
  json list = json::array();
  for (const auto& c : cases)
    list.push_back({{"name", c.name},
                    {"scene", scene_json(c.scene)},
                    {"noise", {{"seed", c.noise.seed},
                               {"texture", law_json(c.noise.texture)},
                               {"depth", law_json(c.noise.depth)}}},
                    {"camera", camera_json(c.camera)}});
  return json{{"cases", list}}.dump(2) + "\n";
}

SceneManifest parse_scene_manifest(const std::string& text) {
  const auto j = parse_json(text);
  return {parse_scene(required<json>(j, "scene", "manifest"), "scene"),
          parse_camera(required<json>(j, "camera", "manifest"), "camera")};
}

std::string format_validation_csv(const ValidationResult& result) {
  std::string out = "case";
  for (const auto& c : report_columns()) out += "," + c;
  out += ",n_cases,pcc,rmse,median_relative_error\n";
  const std::size_t report_width = report_columns().size();
  for (const auto& r : result.cases) {
    out += r.name;
    for (const auto& cell : report_cells(r.report)) out += "," + cell;
    out += ",,,,\n";
  }
  const auto& s = result.summary;
  out += "summary" + std::string(report_width, ',');
  out += "," + std::to_string(s.n_cases) + "," + format_number(s.pcc) + "," +
         format_number(s.rmse) + "," + format_number(s.median_relative_error) + "\n";
  return out;
}

}  // namespace vsde::harness
