// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and never tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vsde/dibr_oracle.hpp"
#include "vsde/estimator.hpp"
#include "vsde/geometry.hpp"
#include "vsde/gradient_classify.hpp"
#include "vsde/metrics.hpp"
#include "vsde/validation.hpp"
#include "vsde/vsde_blend.hpp"
#include "vsde/vsde_ls.hpp"
#include "vsde/vsde_ns.hpp"

using namespace vsde;
using namespace vsde::harness;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel_err(double est, double ref) {
  return ref == 0.0 ? std::abs(est) : std::abs(est - ref) / std::abs(ref);
}

// Integer-valued shift law given by its probability mass on [-n_max, n_max].
struct ShiftLaw {
  std::string name;
  int n_max = 0;
  std::vector<double> pmf;  // index n + n_max

  double p(int n) const { return pmf[static_cast<std::size_t>(n + n_max)]; }
  double moment(int order) const {
    double m = 0.0;
    for (int n = -n_max; n <= n_max; ++n) m += p(n) * std::pow(n, order);
    return m;
  }
  // Histogram form consumed by the estimator (depth step = one pixel).
  DepthErrorStats stats() const {
    DepthErrorStats s;
    for (int n = -n_max; n <= n_max; ++n)
      s.histogram[static_cast<std::size_t>(n + kMaxDepthError)] = p(n);
    s.variance = moment(2);
    s.disparity_variance = s.variance;
    return s;
  }
  int sample(std::mt19937_64& rng) const {
    double u = unit_uniform(rng);
    for (int n = -n_max; n <= n_max; ++n) {
      u -= p(n);
      if (u < 0.0) return n;
    }
    return n_max;
  }
};

ShiftLaw symmetric_unit_law(double nu2) {
  return {"+-1 var " + fmt("%.2f", nu2), 1, {nu2 / 2, 1 - nu2, nu2 / 2}};
}

// p(n) ~ q^|n| with q solving 2q / (1 - q)^2 = variance, truncated where the
// tail mass drops below 1e-15 and renormalized.
ShiftLaw two_sided_geometric_law(double variance, int n_max = 40) {
  const double q = ((variance + 1) - std::sqrt(2 * variance + 1)) / variance;
  ShiftLaw law{"laplace var " + fmt("%.2f", variance), n_max, {}};
  double total = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    law.pmf.push_back(std::pow(q, std::abs(n)));
    total += law.pmf.back();
  }
  for (auto& v : law.pmf) v /= total;
  return law;
}

DisparityModel unit_model() {
  DisparityModel m;
  m.k = 1.0;
  return m;
}

LumaFrame quantize(const RealMap& m) {
  LumaFrame f(m.width(), m.height());
  for (std::size_t i = 0; i < f.size(); ++i)
    f.samples()[i] = static_cast<std::uint8_t>(
        std::clamp(std::floor(m.samples()[i] + 0.5), 0.0, 255.0));
  return f;
}

double frame_variance(const LumaFrame& f) {
  double s = 0.0, s2 = 0.0;
  for (auto v : f.samples()) {
    s += v;
    s2 += static_cast<double>(v) * v;
  }
  const double n = static_cast<double>(f.size());
  return s2 / n - (s / n) * (s / n);
}

// ---------------------------------------------------------------- A1
Outcome disparity_algebra() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    CameraConfig cam;
    cam.focal_px = 100 + 4900 * u(rng);
    cam.x_left = -10 + 20 * u(rng);
    cam.x_right = cam.x_left + 0.01 + 50 * u(rng);
    cam.x_virtual = cam.x_left + (cam.x_right - cam.x_left) * (0.01 + 0.98 * u(rng));
    cam.z_near = 0.1 + 20 * u(rng);
    cam.z_far = cam.z_near * (1.5 + 1000 * u(rng));
    for (auto side : {ViewSide::left, ViewSide::right}) {
      const auto m = disparity_model(cam, side);
      const double fb = cam.focal_px * cam.baseline(side);
      worst = std::max({worst, rel_err(disparity(m, 255), fb / cam.z_near),
                        rel_err(disparity(m, 0), fb / cam.z_far)});
    }
  }
  return {worst <= 1e-9, fmt("max relative error %.2e over 100 configs x 2 views", worst)};
}

// ---------------------------------------------------------------- A2
double brute_shift_mse(const LumaFrame& t, const ShiftLaw& law, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double acc = 0.0;
  std::size_t n = 0;
  for (int pass = 0; pass < 4; ++pass)
    for (int y = 0; y < t.height(); ++y)
      for (int x = 0; x < t.width(); ++x) {
        const int xs = x + law.sample(rng);
        if (xs < 0 || xs >= t.width()) continue;
        const double d = static_cast<double>(t(xs, y)) - t(x, y);
        acc += d * d;
        ++n;
      }
  return acc / static_cast<double>(n);
}

Outcome ls_spectral_model() {
  const int n = 256;
  std::vector<std::pair<std::string, LumaFrame>> textures;
  {
    std::mt19937_64 rng(7);
    RealMap white(n, n);
    for (auto& v : white.samples()) v = 28.0 + std::floor(unit_uniform(rng) * 201.0);
    textures.emplace_back("white", quantize(white));
  }
  for (double cutoff : {0.05, 0.15, 0.3}) {
    auto field = filtered_noise_field(n, n, cutoff, 11);
    for (auto& v : field.samples()) v = 128.0 + 30.0 * v;
    textures.emplace_back(fmt("lowpass %.2f", cutoff), quantize(field));
  }
  {
    RealMap mix(n, n);
    const double tau = 2 * std::acos(-1.0);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        mix(x, y) = 128 + 40 * std::sin(tau * (0.05 * x + 0.02 * y)) +
                    30 * std::sin(tau * (0.13 * x - 0.07 * y)) + 20 * std::sin(tau * 0.31 * x);
    textures.emplace_back("sine mix", quantize(mix));
  }
  const std::vector<ShiftLaw> laws{symmetric_unit_law(1.0), two_sided_geometric_law(0.5),
                                   two_sided_geometric_law(1.0)};

  bool ok = true;
  double worst = 0.0;
  std::string worst_case;
  double white_closed_form = 0.0;
  for (std::size_t ti = 0; ti < textures.size(); ++ti) {
    const auto& [name, tex] = textures[ti];
    const auto spec = ls_power_spectrum(tex, RegionMask(n, n));
    for (std::size_t li = 0; li < laws.size(); ++li) {
      const auto& law = laws[li];
      const auto p = char_fn_on_grid(law.stats(), unit_model(), n);
      const double model = ls_base_distortion(spec, p);
      const double brute = brute_shift_mse(tex, law, 1000 + 10 * ti + li);
      const double e = rel_err(model, brute);
      if (e > worst) {
        worst = e;
        worst_case = name + " / " + law.name;
      }
      ok = ok && e <= 0.15;
      if (ti == 0 && li == 0) {
        white_closed_form = rel_err(model, 2.0 * frame_variance(tex));
        ok = ok && white_closed_form <= 0.05;
      }
    }
  }
  return {ok, fmt("%zu textures x %zu laws; worst %.3f (%s, limit 0.15); white +-1 vs 2 sigma^2 %.4f (limit 0.05)",
                  textures.size(), laws.size(), worst, worst_case.c_str(), white_closed_form)};
}

// ---------------------------------------------------------------- A3
// Textures must be exactly representable in 8 bits: rounding a shallow curve
// turns its second difference into quantization noise.
Outcome ns_taylor_model() {
  const int h = 8;
  const double tau = 2 * std::acos(-1.0);
  struct Shape {
    std::string name;
    int width;
    std::function<double(int)> value;
  };
  const std::vector<Shape> shapes{
      {"affine", 128, [](int x) { return 60.0 + x; }},
      // u (u - 1) / 2 is integral with second difference exactly 1.
      {"quadratic", 44, [](int x) { return 10.0 + (x - 21) * (x - 22) / 2; }},
      {"sine", 128, [tau](int x) { return 128.0 + 100.0 * std::sin(tau * x / 64.0); }},
  };
  const std::vector<ShiftLaw> laws{symmetric_unit_law(0.25), symmetric_unit_law(0.5),
                                   symmetric_unit_law(1.0), two_sided_geometric_law(0.5, 12),
                                   two_sided_geometric_law(1.0, 12)};

  bool ok = true;
  double worst = 0.0, worst_affine = 0.0;
  std::string worst_case;
  for (const auto& shape : shapes) {
    const int w = shape.width;
    LumaFrame t(w, h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        t(x, y) = static_cast<std::uint8_t>(std::clamp(std::floor(shape.value(x) + 0.5), 0.0, 255.0));
    const auto grads = sobel_gradients(t);
    for (const auto& law : laws) {
      // NS region keeps every shifted sample inside the frame.
      RegionMask mask(w, h);
      for (int y = 0; y < h; ++y)
        for (int x = law.n_max; x < w - law.n_max; ++x) mask.set(x, y, Region::ns);
      const auto curv = second_derivative_x(t, mask);
      const double nu2 = law.moment(2);
      const double model = ns_distortion(t, mask, grads.gx, curv, nu2).value;
      // Exact expectation over the law, averaged over the NS pixels.
      double brute = 0.0;
      for (auto idx : mask.ns_indices()) {
        const int x = static_cast<int>(idx % w), y = static_cast<int>(idx / w);
        for (int s = -law.n_max; s <= law.n_max; ++s) {
          const double d = static_cast<double>(t(x + s, y)) - t(x, y);
          brute += law.p(s) * d * d;
        }
      }
      brute /= static_cast<double>(mask.ns_count());
      const double e = rel_err(model, brute);
      if (e > worst) {
        worst = e;
        worst_case = shape.name + " / " + law.name;
      }
      ok = ok && e <= 0.10;
      if (shape.name == "affine") {
        const double ea = rel_err(model, 1.0 * nu2);
        worst_affine = std::max(worst_affine, ea);
        ok = ok && ea <= 0.01;
      }
    }
  }
  return {ok, fmt("3 textures x %zu laws (nu2 <= 1); worst %.3f (%s, limit 0.10); affine vs g^2 nu2 %.2e (limit 0.01)",
                  laws.size(), worst, worst_case.c_str(), worst_affine)};
}

// ---------------------------------------------------------------- A4
int exhaustive_otsu(const std::vector<std::uint64_t>& h) {
  int occupied = 0, last = 0;
  long double total = 0, total_sum = 0;
  for (int i = 0; i < 256; ++i) {
    total += h[i];
    total_sum += static_cast<long double>(h[i]) * i;
    if (h[i]) {
      ++occupied;
      last = i;
    }
  }
  if (occupied <= 1) return last;
  int best = 0;
  long double best_score = -1;
  for (int t = 0; t < 255; ++t) {
    long double n0 = 0, s0 = 0;
    for (int i = 0; i <= t; ++i) {
      n0 += h[i];
      s0 += static_cast<long double>(h[i]) * i;
    }
    const long double n1 = total - n0, s1 = total_sum - s0;
    if (n0 == 0 || n1 == 0) continue;
    const long double w0 = n0 / total, w1 = n1 / total;
    const long double diff = s0 / n0 - s1 / n1;
    const long double score = w0 * w1 * diff * diff;
    if (score > best_score) {
      best_score = score;
      best = t;
    }
  }
  return best;
}

Outcome otsu_equivalence() {
  std::mt19937_64 rng(404);
  int mismatches = 0, value_mismatches = 0, value_checks = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::uint64_t> h(256, 0);
    switch (i % 4) {
      case 0:  // dense
        for (auto& v : h) v = rng() % 200;
        break;
      case 1: {  // a few spikes
        const int k = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j < k; ++j) h[rng() % 256] += 1 + rng() % 5000;
        break;
      }
      case 2: {  // two bumps
        std::normal_distribution<double> a(40 + rng() % 60, 5 + rng() % 20),
            b(150 + rng() % 80, 5 + rng() % 20);
        const int na = 200 + static_cast<int>(rng() % 3000), nb = 200 + static_cast<int>(rng() % 3000);
        for (int j = 0; j < na; ++j) ++h[std::clamp(static_cast<int>(a(rng)), 0, 255)];
        for (int j = 0; j < nb; ++j) ++h[std::clamp(static_cast<int>(b(rng)), 0, 255)];
        break;
      }
      default:  // sparse random support
        for (auto& v : h)
          if (rng() % 10 == 0) v = rng() % 1000;
        break;
    }
    if (std::accumulate(h.begin(), h.end(), std::uint64_t{0}) == 0) h[rng() % 256] = 1;
    const int expected = exhaustive_otsu(h);
    mismatches += otsu_bin_threshold(h) != expected;

    if (i % 10 == 0) {
      // Same histogram as map values: the threshold is the largest value
      // falling in the lower class.
      std::vector<double> values;
      double expected_value = -1.0;
      for (int b = 0; b < 256; ++b)
        for (std::uint64_t c = 0; c < h[b]; ++c) {
          const double v = (b + 0.4 * (unit_uniform(rng) - 0.5)) / 255.0;
          values.push_back(std::clamp(v, 0.0, 1.0));
          if (b <= expected) expected_value = std::max(expected_value, values.back());
        }
      ++value_checks;
      value_mismatches += otsu_threshold(values) != expected_value;
    }
  }
  return {mismatches == 0 && value_mismatches == 0,
          fmt("%d/1000 histogram mismatches, %d/%d value-threshold mismatches", mismatches,
              value_mismatches, value_checks)};
}

// ---------------------------------------------------------------- A5
Outcome region_proportion_geometry() {
  const double baselines[] = {1.0, 1.8, 2.6, 3.4, 4.2, 5.0, 5.8, 6.6, 7.4, 8.0};
  const double positions[] = {0.5, 0.3, 0.7, 0.5, 0.4, 0.6, 0.5, 0.25, 0.75, 0.5};
  const int fg_levels[] = {60, 50, 40, 45, 35, 40, 30, 35, 25, 30};
  bool ok = true, sums_exact = true;
  double worst_abs = 0.0;
  for (int i = 0; i < 10; ++i) {
    SceneSpec s;
    s.width = 256;
    s.height = 64;
    s.seed = 500 + i;
    // Background at level 0 rounds to zero disparity, so no border band.
    s.layers = {{0, 0, 256, {TextureKind::filtered_noise, 110, 20, 0, 0, 0, 0.15}},
                {fg_levels[i], 80, 140, {TextureKind::sine, 150, 30, 0, 0.07}}};
    const double b = baselines[i];
    const CameraConfig cam{300.0, 0.0, b, b * positions[i], 6.0, 1e4};
    const auto v = generate_scene(s, cam);
    const auto r = estimate_frame(v.texture_left, v.depth_left, v.texture_right, v.depth_right,
                                  v.texture_left, v.depth_left, v.texture_right, v.depth_right, cam);
    const auto syn = oracle::synthesize(v.texture_left, v.depth_left, v.texture_right,
                                        v.depth_right, cam);
    const auto& p = r.proportions;
    sums_exact = sums_exact && p.sum() == 1.0;
    const std::pair<double, double> pairs[] = {
        {p.p_left, syn.labels.fraction(oracle::RegionLabel::left_only)},
        {p.p_right, syn.labels.fraction(oracle::RegionLabel::right_only)},
        {p.p_none, syn.labels.fraction(oracle::RegionLabel::none)}};
    for (auto [pred, meas] : pairs) {
      const double err = std::abs(pred - meas);
      worst_abs = std::max(worst_abs, err);
      ok = ok && err <= std::max(0.10 * meas, 0.005);
    }
  }
  return {ok && sums_exact,
          fmt("10 scenes, baselines 1-8; worst |pred - measured| %.4f (limit max(10%%, 0.005)); sums exact: %s",
              worst_abs, sums_exact ? "yes" : "no")};
}

// ---------------------------------------------------------------- A7 grid
// Six two-layer scenes, five depth-noise levels each.
std::vector<ValidationCase> fidelity_grid() {
  using K = TextureKind;
  const std::pair<TextureSpec, TextureSpec> textures[] = {
      {{K::filtered_noise, 128, 20, 0, 0, 0, 0.08}, {K::filtered_noise, 128, 20, 0, 0, 0, 0.15}},
      {{K::filtered_noise, 128, 25, 0, 0, 0, 0.2}, {K::sine, 128, 20, 0, 0.04, 0.0}},
      {{K::sine, 128, 30, 0, 0.06, 0.02}, {K::filtered_noise, 128, 15, 0, 0, 0, 0.1}},
      {{K::filtered_noise, 120, 30, 0, 0, 0, 0.3}, {K::filtered_noise, 136, 25, 0, 0, 0, 0.05}},
      {{K::sine, 128, 25, 0, 0.1, 0.0}, {K::filtered_noise, 128, 20, 0, 0, 0, 0.25}},
      {{K::filtered_noise, 128, 18, 0, 0, 0, 0.12}, {K::sine, 128, 25, 0, 0.03, 0.03}},
  };
  const double baselines[] = {2.0, 3.2, 4.4, 5.6, 6.8, 8.0};
  const double positions[] = {0.5, 0.3, 0.5, 0.7, 0.5, 0.35};
  // Target disparity-error standard deviations, pixels, at half baseline.
  const double levels[] = {0.6, 0.8, 1.0, 1.25, 1.5};
  const double focal = 300.0, z_near = 6.0, z_far = 1e4;
  const int w = 256, h = 128;

  std::vector<ValidationCase> cases;
  for (int si = 0; si < 6; ++si)
    for (int li = 0; li < 5; ++li) {
      ValidationCase c;
      c.name = fmt("s%d_b%.1f_l%.2f", si, baselines[si], levels[li]);
      c.scene.width = w;
      c.scene.height = h;
      c.scene.seed = 7 + si;
      c.scene.layers = {{8, 0, w, textures[si].first}, {40, 90, 160, textures[si].second}};
      const double b = baselines[si];
      c.camera = {focal, 0.0, b, b * positions[si], z_near, z_far};
      const double k_mid = focal * (b / 2) / (255.0 * z_near);
      c.noise.seed = 11 + si;
      c.noise.depth = {NoiseKind::discrete_laplace, levels[li] / (k_mid * std::sqrt(2.0))};
      cases.push_back(c);
    }
  return cases;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct FidelityRun {
  ValidationResult result;
  std::string csv;
  std::string manifest;
  Outcome outcome;
};

FidelityRun end_to_end_fidelity() {
  FidelityRun run;
  const auto cases = fidelity_grid();
  run.manifest = format_case_manifest(cases);
  run.result = validate_run(cases);
  run.csv = format_validation_csv(run.result);

  // The uncompensated estimate reuses the same frames; only the LS scale changes.
  EstimatorParams plain;
  plain.compensate = false;
  std::vector<double> rel_comp, rel_plain;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (cases[i].camera.baseline() < 6.0) continue;
    const auto f = make_case_frames(cases[i]);
    const auto& o = f.original;
    const auto& d = f.decoded;
    const auto r = estimate_frame(o.texture_left, o.depth_left, o.texture_right, o.depth_right,
                                  d.texture_left, d.depth_left, d.texture_right, d.depth_right,
                                  cases[i].camera, plain);
    const double actual = *run.result.cases[i].report.oracle_mse;
    rel_comp.push_back(rel_err(run.result.cases[i].report.e_total, actual));
    rel_plain.push_back(rel_err(r.e_total, actual));
  }
  const auto& s = run.result.summary;
  const double med_comp = median(rel_comp), med_plain = median(rel_plain);
  const bool ok = s.pcc >= 0.85 && s.median_relative_error <= 0.30 && med_plain > med_comp;
  run.outcome = {ok, fmt("%zu cases; PCC %.3f (>= 0.85), median rel err %.3f (<= 0.30); "
                         "baseline >= 6 subset (%zu cases) median rel err %.3f with compensation vs %.3f without",
                         s.n_cases, s.pcc, s.median_relative_error, rel_comp.size(), med_comp, med_plain)};
  return run;
}

// ---------------------------------------------------------------- A6
// The texture term treats every virtual pixel as a blend of both views, so
// the scenes keep single-view area small: the background sits at level 0
// (zero rounded disparity) and only the foreground opens holes.
Outcome texture_vsd_exactness() {
  using K = TextureKind;
  struct SceneCase {
    TextureSpec background, foreground;
    int fg_level;
    double baseline, noise_half_width;
  };
  const SceneCase scenes[] = {
      {{K::filtered_noise, 128, 20, 0, 0, 0, 0.08}, {K::filtered_noise, 128, 20, 0, 0, 0, 0.15}, 30, 2.0, 4.0},
      {{K::filtered_noise, 128, 25, 0, 0, 0, 0.2}, {K::sine, 128, 20, 0, 0.04, 0.0}, 20, 3.0, 6.0},
      {{K::sine, 128, 30, 0, 0.06, 0.02}, {K::filtered_noise, 128, 15, 0, 0, 0, 0.1}, 16, 4.0, 8.0},
  };
  const double alphas[] = {0.0, 0.25, 0.5, 1.0};
  double worst_identity = 0.0, worst_oracle = 0.0, worst_single = 0.0;
  for (int si = 0; si < 3; ++si) {
    const auto& sc = scenes[si];
    ValidationCase c;
    c.scene.width = 256;
    c.scene.height = 128;
    c.scene.seed = 70 + si;
    c.scene.layers = {{0, 0, 256, sc.background}, {sc.fg_level, 90, 160, sc.foreground}};
    c.noise.seed = 71 + si;
    c.noise.texture = {NoiseKind::uniform, sc.noise_half_width};
    for (double a : alphas) {
      c.camera = {300.0, 0.0, sc.baseline, sc.baseline * (1 - a), 6.0, 1e4};
      const auto f = make_case_frames(c);
      const auto& o = f.original;
      const auto& d = f.decoded;
      // Per-view MSE by direct summation.
      auto direct = [](const LumaFrame& x, const LumaFrame& y) {
        long double acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          const long double e = static_cast<long double>(x.samples()[i]) - y.samples()[i];
          acc += e * e;
        }
        return static_cast<double>(acc / x.size());
      };
      const double alpha = c.camera.alpha_blend();
      const double hand = alpha * alpha * direct(o.texture_left, d.texture_left) +
                          (1 - alpha) * (1 - alpha) * direct(o.texture_right, d.texture_right);
      const double model = texture_vsd(o.texture_left, d.texture_left, o.texture_right,
                                       d.texture_right, alpha);
      worst_identity = std::max(worst_identity, rel_err(model, hand));

      const auto u = oracle::synthesize(o.texture_left, o.depth_left, o.texture_right,
                                        o.depth_right, c.camera);
      const auto y = oracle::synthesize(d.texture_left, o.depth_left, d.texture_right,
                                        o.depth_right, c.camera);
      worst_oracle = std::max(worst_oracle, rel_err(model, mse(u.view, y.view)));
      worst_single = std::max(worst_single,
                              u.labels.fraction(oracle::RegionLabel::left_only) +
                                  u.labels.fraction(oracle::RegionLabel::right_only) +
                                  u.labels.fraction(oracle::RegionLabel::none));
    }
  }
  return {worst_identity <= 1e-12 && worst_oracle <= 0.10,
          fmt("3 scenes x 4 alphas; identity rel err %.2e (<= 1e-12); vs oracle %.3f (<= 0.10); "
              "max single-view area %.3f",
              worst_identity, worst_oracle, worst_single)};
}

// ---------------------------------------------------------------- A8
Outcome compensation_behaviour() {
  const CompensationParams p;
  const double at_thresh = sigmoid_scale(p.xi_thresh, p);
  bool monotone = true, bounded = true;
  double prev = -1.0;
  for (int i = 0; i < 10000; ++i) {
    const double xi = -10.0 + 20.0 * i / 9999.0;
    const double s = sigmoid_scale(xi, p);
    monotone = monotone && s >= prev;
    bounded = bounded && s >= 1.0 && s <= 1.0 + p.alpha_comp;
    prev = s;
  }
  const bool exact = std::abs(at_thresh - (1.0 + p.alpha_comp / 2)) <= 1e-12;
  return {exact && monotone && bounded,
          fmt("S(thresh) = %.15f (1.75 +- 1e-12), monotone: %s, within [1, 2.5]: %s over 10^4 points",
              at_thresh, monotone ? "yes" : "no", bounded ? "yes" : "no")};
}

// ---------------------------------------------------------------- A9
Outcome complexity_contract() {
  const int sizes[] = {128, 256, 512, 1024};
  std::vector<double> log_n, log_t;
  std::string timings;
  const auto calls_before = oracle::call_count();
  for (int n : sizes) {
    SceneSpec s;
    s.width = s.height = n;
    s.seed = 900;
    s.layers = {{8, 0, n, {TextureKind::filtered_noise, 128, 20, 0, 0, 0, 0.15}},
                {40, n * 35 / 100, n * 60 / 100, {TextureKind::sine, 128, 25, 0, 0.05}}};
    ValidationCase c{"timing", s, {{NoiseKind::uniform, 3.0}, {NoiseKind::discrete_laplace, 1.0}, 901},
                     {300.0, 0.0, 4.0, 2.0, 6.0, 1e4}};
    const auto f = make_case_frames(c);
    const auto& o = f.original;
    const auto& d = f.decoded;
    double best = 1e30;
    const int reps = std::max(3, (1 << 20) / (n * n) * 3);
    for (int r = 0; r < reps; ++r) {
      const auto t0 = Clock::now();
      const auto rep = estimate_frame(o.texture_left, o.depth_left, o.texture_right, o.depth_right,
                                      d.texture_left, d.depth_left, d.texture_right, d.depth_right,
                                      c.camera);
      const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      if (!(rep.e_total >= 0.0)) return {false, "non-finite estimate"};
      best = std::min(best, dt);
    }
    log_n.push_back(std::log(static_cast<double>(n) * n));
    log_t.push_back(std::log(best));
    timings += fmt("%s%d^2 %.1f ms", timings.empty() ? "" : ", ", n, best * 1e3);
  }
  const bool no_render = oracle::call_count() == calls_before;
  const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / log_n.size();
  const double my = std::accumulate(log_t.begin(), log_t.end(), 0.0) / log_t.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_t[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  const double exponent = sxy / sxx;
  return {exponent <= 1.25 && no_render,
          fmt("fitted exponent %.3f (<= 1.25) [%s]; renderer calls during estimation: %llu",
              exponent, timings.c_str(),
              static_cast<unsigned long long>(oracle::call_count() - calls_before))};
}

// ---------------------------------------------------------------- A10
Outcome determinism(const FidelityRun& first) {
  const auto cases = parse_case_manifest(first.manifest);
  const auto csv = format_validation_csv(validate_run(cases));
  return {csv == first.csv && !csv.empty(),
          fmt("second validate run over the parsed manifest: %zu bytes, %s", csv.size(),
              csv == first.csv ? "byte-identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* what, auto&& fn) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %s  %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", what, o.detail.c_str(), dt);
    std::fflush(stdout);
  };

  report("A1", "disparity algebra", disparity_algebra);
  report("A2", "LS spectral model", ls_spectral_model);
  report("A3", "NS Taylor model", ns_taylor_model);
  report("A4", "Otsu oracle equivalence", otsu_equivalence);
  report("A5", "region-proportion geometry", region_proportion_geometry);
  report("A6", "texture VSD exactness", texture_vsd_exactness);
  FidelityRun fidelity;
  report("A7", "end-to-end fidelity", [&] {
    fidelity = end_to_end_fidelity();
    return fidelity.outcome;
  });
  report("A8", "compensation behaviour", compensation_behaviour);
  report("A9", "complexity contract", complexity_contract);
  report("A10", "determinism", [&] {
    if (fidelity.csv.empty()) return Outcome{false, "A7 produced no CSV"};
    return determinism(fidelity);
  });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
