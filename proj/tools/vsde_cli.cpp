#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vsde/dibr_oracle.hpp"
#include "vsde/errors.hpp"
#include "vsde/estimator.hpp"
#include "vsde/media_io.hpp"
#include "vsde/validation.hpp"

namespace fs = std::filesystem;
using namespace vsde;

namespace {

struct FrameGeometry {
  int width = 0;
  int height = 0;
  std::string layout = "single";

  PlaneLayout plane_layout() const {
    return layout == "yuv420" ? PlaneLayout::yuv420 : PlaneLayout::single;
  }
};

void add_geometry(CLI::App* cmd, FrameGeometry& g) {
  cmd->add_option("--width", g.width, "Frame width in pixels")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--height", g.height, "Frame height in pixels")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--layout", g.layout, "Raw file layout")
      ->check(CLI::IsMember({"single", "yuv420"}));
}

struct ViewPaths {
  std::string texture_left, depth_left, texture_right, depth_right;
};

void add_views(CLI::App* cmd, ViewPaths& p, const std::string& prefix,
               const std::string& what) {
  cmd->add_option("--" + prefix + "texture-left", p.texture_left, what + " left texture")
      ->required();
  cmd->add_option("--" + prefix + "depth-left", p.depth_left, what + " left depth")
      ->required();
  cmd->add_option("--" + prefix + "texture-right", p.texture_right, what + " right texture")
      ->required();
  cmd->add_option("--" + prefix + "depth-right", p.depth_right, what + " right depth")
      ->required();
}

struct Views {
  LumaFrame tl, dl, tr, dr;
};

Views read_views(const ViewPaths& p, const FrameGeometry& g, std::size_t index) {
  const auto layout = g.plane_layout();
  return {read_raw_frame(p.texture_left, g.width, g.height, index, layout),
          read_raw_frame(p.depth_left, g.width, g.height, index, layout),
          read_raw_frame(p.texture_right, g.width, g.height, index, layout),
          read_raw_frame(p.depth_right, g.width, g.height, index, layout)};
}

std::size_t common_frame_count(const std::vector<std::string>& paths,
                               const FrameGeometry& g) {
  std::size_t n = SIZE_MAX;
  for (const auto& p : paths)
    n = std::min(n, count_raw_frames(p, g.width, g.height, g.plane_layout()));
  return n;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual view synthesis distortion estimator"};
  app.require_subcommand(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "Estimate synthesized-view distortion without rendering");
  FrameGeometry est_geom;
  ViewPaths est_orig, est_recon;
  std::string est_camera, est_out, est_format = "csv";
  std::size_t est_frames = 0;
  bool est_no_comp = false, est_oracle = false;
  add_geometry(est, est_geom);
  add_views(est, est_orig, "", "Original");
  add_views(est, est_recon, "recon-", "Decoded");
  est->add_option("--camera", est_camera, "Camera configuration file")->required();
  est->add_option("--out", est_out, "Report path (stdout when omitted)");
  est->add_option("--format", est_format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  est->add_option("--frames", est_frames, "Number of frames (0 = all)");
  est->add_flag("--no-compensation", est_no_comp, "Disable the large-baseline LS compensation");
  est->add_flag("--with-oracle", est_oracle, "Also render both views and report the measured MSE");

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "Render the virtual view with the reference synthesizer");
  FrameGeometry syn_geom;
  ViewPaths syn_views;
  std::string syn_camera, syn_out, syn_labels;
  std::size_t syn_index = 0;
  add_geometry(syn, syn_geom);
  add_views(syn, syn_views, "", "Reference");
  syn->add_option("--camera", syn_camera, "Camera configuration file")->required();
  syn->add_option("--out", syn_out, "Raw output path for the virtual view")->required();
  syn->add_option("--labels-out", syn_labels,
                  "Raw output path for region labels (0 overlap, 1 left only, 2 right only, 3 none)");
  syn->add_option("--frame-index", syn_index, "Frame index inside the inputs");

  // validate
  auto* val = app.add_subcommand("validate", "Compare estimates with the reference synthesizer");
  std::string val_cases, val_out;
  bool val_no_comp = false;
  val->add_option("--cases", val_cases, "JSON case manifest")->required();
  val->add_option("--out", val_out, "CSV output path (stdout when omitted)");
  val->add_flag("--no-compensation", val_no_comp, "Disable the large-baseline LS compensation");

  // gen-scene
  auto* gen = app.add_subcommand("gen-scene", "Render a synthetic layered scene to raw frames");
  std::string gen_scene, gen_dir;
  gen->add_option("--scene", gen_scene, "JSON scene manifest")->required();
  gen->add_option("--out-dir", gen_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << sub->help();
    return 2;
  }

  try {
    if (*est) {
      const auto cam = read_camera_config(est_camera);
      EstimatorParams params;
      params.compensate = !est_no_comp;
      std::size_t n = common_frame_count(
          {est_orig.texture_left, est_orig.depth_left, est_orig.texture_right,
           est_orig.depth_right, est_recon.texture_left, est_recon.depth_left,
           est_recon.texture_right, est_recon.depth_right},
          est_geom);
      if (est_frames > 0) n = std::min(n, est_frames);
      if (n == 0) throw TruncatedInput("inputs hold no complete frame");
      std::vector<VsdeReport> reports;
      for (std::size_t i = 0; i < n; ++i) {
        const auto o = read_views(est_orig, est_geom, i);
        const auto d = read_views(est_recon, est_geom, i);
        auto r = estimate_frame(o.tl, o.dl, o.tr, o.dr, d.tl, d.dl, d.tr, d.dr, cam, params);
        if (est_oracle) {
          const auto u = oracle::synthesize(o.tl, o.dl, o.tr, o.dr, cam);
          const auto w = oracle::synthesize(d.tl, d.dl, d.tr, d.dr, cam);
          r.oracle_mse = mse(u.view, w.view);
        }
        reports.push_back(r);
      }
      emit(format_reports(reports, parse_report_format(est_format)), est_out);
    } else if (*syn) {
      const auto cam = read_camera_config(syn_camera);
      const auto v = read_views(syn_views, syn_geom, syn_index);
      const auto result = oracle::synthesize(v.tl, v.dl, v.tr, v.dr, cam);
      write_raw_frame(syn_out, result.view);
      if (!syn_labels.empty()) {
        LumaFrame labels(syn_geom.width, syn_geom.height);
        for (std::size_t i = 0; i < labels.size(); ++i)
          labels.samples()[i] = static_cast<std::uint8_t>(result.labels.labels[i]);
        write_raw_frame(syn_labels, labels);
      }
    } else if (*val) {
      const auto cases = harness::parse_case_manifest(read_text_file(val_cases));
      EstimatorParams params;
      params.compensate = !val_no_comp;
      emit(harness::format_validation_csv(harness::validate_run(cases, params)), val_out);
    } else if (*gen) {
      const auto m = harness::parse_scene_manifest(read_text_file(gen_scene));
      const auto views = harness::generate_scene(m.scene, m.camera);
      fs::create_directories(gen_dir);
      const fs::path dir(gen_dir);
      write_raw_frame(dir / "texture_left.yuv", views.texture_left);
      write_raw_frame(dir / "depth_left.yuv", views.depth_left);
      write_raw_frame(dir / "texture_right.yuv", views.texture_right);
      write_raw_frame(dir / "depth_right.yuv", views.depth_right);
      write_text_file(dir / "camera.cfg", format_camera_config(m.camera));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
