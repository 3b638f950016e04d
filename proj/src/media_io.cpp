#include "vsde/media_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "vsde/errors.hpp"

namespace vsde {
namespace fs = std::filesystem;

void CameraConfig::validate() const {
  const std::array<std::pair<const char*, double>, 6> fields{{
      {"focal_px", focal_px},
      {"x_left", x_left},
      {"x_right", x_right},
      {"x_virtual", x_virtual},
      {"z_near", z_near},
      {"z_far", z_far},
  }};
  for (const auto& [key, value] : fields)
    if (!std::isfinite(value)) throw ConfigError(key, "value is not finite");
  if (focal_px <= 0.0) throw ConfigError("focal_px", "must be positive");
  if (z_near <= 0.0) throw ConfigError("z_near", "must be positive");
  if (z_far <= z_near) throw ConfigError("z_far", "must exceed z_near");
  if (x_right <= x_left) throw ConfigError("x_right", "must exceed x_left");
  if (x_virtual < x_left || x_virtual > x_right)
    throw ConfigError("x_virtual", "must lie within [x_left, x_right]");
}

std::size_t plane_stride(int width, int height, PlaneLayout layout) {
  const auto luma = static_cast<std::size_t>(width) * height;
  if (layout == PlaneLayout::single) return luma;
  const auto chroma = static_cast<std::size_t>((width + 1) / 2) *
                      static_cast<std::size_t>((height + 1) / 2);
  return luma + 2 * chroma;
}

LumaFrame read_raw_frame(const fs::path& path, int width, int height,
                         std::size_t frame_index, PlaneLayout layout) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("read_raw_frame: dimensions must be positive");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  const auto luma = static_cast<std::size_t>(width) * height;
  const auto offset = frame_index * plane_stride(width, height, layout);
  in.seekg(0, std::ios::end);
  const auto file_size = static_cast<std::size_t>(in.tellg());
  if (file_size < offset + luma)
    throw TruncatedInput(path.string() + ": need " +
                         std::to_string(offset + luma) + " bytes for frame " +
                         std::to_string(frame_index) + ", file has " +
                         std::to_string(file_size));

  std::vector<std::uint8_t> samples(luma);
  in.seekg(static_cast<std::streamoff>(offset));
  in.read(reinterpret_cast<char*>(samples.data()),
          static_cast<std::streamsize>(luma));
  if (!in) throw IoError("read failed on " + path.string());
  return LumaFrame(width, height, std::move(samples));
}

std::size_t count_raw_frames(const fs::path& path, int width, int height,
                             PlaneLayout layout) {
  std::error_code ec;
  const auto size = fs::file_size(path, ec);
  if (ec) throw IoError("cannot stat " + path.string());
  const auto stride = plane_stride(width, height, layout);
  const auto luma = static_cast<std::size_t>(width) * height;
  if (size < luma) return 0;
  return (size - luma) / stride + 1;
}

void write_raw_frame(const fs::path& path, const LumaFrame& frame, bool append) {
  std::ofstream out(path, std::ios::binary |
                              (append ? std::ios::app : std::ios::trunc));
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(frame.samples().data()),
            static_cast<std::streamsize>(frame.size()));
  if (!out) throw IoError("write failed on " + path.string());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

CameraConfig parse_camera_config(std::string_view text) {
  CameraConfig cam;
  const std::map<std::string, double CameraConfig::*, std::less<>> members{
      {"focal_px", &CameraConfig::focal_px},
      {"x_left", &CameraConfig::x_left},
      {"x_right", &CameraConfig::x_right},
      {"x_virtual", &CameraConfig::x_virtual},
      {"z_near", &CameraConfig::z_near},
      {"z_far", &CameraConfig::z_far},
  };
  std::map<std::string, bool, std::less<>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(std::string(line), "expected 'key = value'");
    const auto key = std::string(trim(line.substr(0, eq)));
    const auto it = members.find(key);
    if (it == members.end()) throw ConfigError(key, "unknown key");
    if (seen[key]) throw ConfigError(key, "duplicate key");
    const auto value = parse_double(line.substr(eq + 1));
    if (!value) throw ConfigError(key, "value is not numeric");
    cam.*(it->second) = *value;
    seen[key] = true;
  }
  for (const auto& [key, member] : members)
    if (!seen[key]) throw ConfigError(key, "missing");
  cam.validate();
  return cam;
}

CameraConfig read_camera_config(const fs::path& path) {
  return parse_camera_config(read_text_file(path));
}

std::string format_camera_config(const CameraConfig& cam) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "focal_px = %.17g\nx_left = %.17g\nx_right = %.17g\n"
                "x_virtual = %.17g\nz_near = %.17g\nz_far = %.17g\n",
                cam.focal_px, cam.x_left, cam.x_right, cam.x_virtual,
                cam.z_near, cam.z_far);
  return buf;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(name) +
                              "' (expected csv or json)");
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

namespace {

// One accessor per column, in VsdeReport field order. Optional fields map
// to std::nullopt when absent.
struct Column {
  const char* name;
  std::function<std::optional<double>(const VsdeReport&)> get;
  std::function<void(VsdeReport&, std::optional<double>)> set;
};

template <class M>
Column plain(const char* name, M VsdeReport::*member) {
  return {name,
          [member](const VsdeReport& r) -> std::optional<double> {
            return static_cast<double>(r.*member);
          },
          [member](VsdeReport& r, std::optional<double> v) {
            r.*member = static_cast<M>(v.value_or(0.0));
          }};
}

Column proportion(const char* name, double RegionProportions::*member) {
  return {name,
          [member](const VsdeReport& r) -> std::optional<double> {
            return r.proportions.*member;
          },
          [member](VsdeReport& r, std::optional<double> v) {
            r.proportions.*member = v.value_or(0.0);
          }};
}

const std::vector<Column>& columns() {
  static const std::vector<Column> cols{
      plain("e_tex", &VsdeReport::e_tex),
      plain("e_ls_left", &VsdeReport::e_ls_left),
      plain("e_ls_right", &VsdeReport::e_ls_right),
      plain("e_ns_left", &VsdeReport::e_ns_left),
      plain("e_ns_right", &VsdeReport::e_ns_right),
      plain("bdi_left", &VsdeReport::bdi_left),
      plain("bdi_right", &VsdeReport::bdi_right),
      proportion("p_overlap", &RegionProportions::p_overlap),
      proportion("p_left", &RegionProportions::p_left),
      proportion("p_right", &RegionProportions::p_right),
      proportion("p_none", &RegionProportions::p_none),
      plain("e_dep", &VsdeReport::e_dep),
      plain("e_total", &VsdeReport::e_total),
      {"oracle_mse", [](const VsdeReport& r) { return r.oracle_mse; },
       [](VsdeReport& r, std::optional<double> v) { r.oracle_mse = v; }},
      plain("nu2_local_left", &VsdeReport::nu2_local_left),
      plain("nu2_local_right", &VsdeReport::nu2_local_right),
      plain("depth_error_mean_left", &VsdeReport::depth_error_mean_left),
      plain("depth_error_mean_right", &VsdeReport::depth_error_mean_right),
      plain("proportions_clamped", &VsdeReport::proportions_clamped),
  };
  return cols;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : columns()) n.emplace_back(c.name);
    return n;
  }();
  return names;
}

std::vector<std::string> report_cells(const VsdeReport& report) {
  std::vector<std::string> cells;
  for (const auto& c : columns()) {
    const auto v = c.get(report);
    cells.push_back(v ? format_number(*v) : std::string());
  }
  return cells;
}

std::string format_reports(std::span<const VsdeReport> reports,
                           ReportFormat format) {
  const auto& cols = columns();
  if (format == ReportFormat::csv) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      out += cols[i].name;
    }
    out += '\n';
    for (const auto& r : reports) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        if (const auto v = cols[i].get(r)) out += format_number(*v);
      }
      out += '\n';
    }
    return out;
  }

  // Numbers go through format_number so both formats carry the same digits.
  std::string out = "[";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    out += k ? ",\n  {" : "\n  {";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ", ";
      out += '"';
      out += cols[i].name;
      out += "\": ";
      const auto v = cols[i].get(reports[k]);
      out += v ? format_number(*v) : "null";
    }
    out += '}';
  }
  out += reports.empty() ? "]\n" : "\n]\n";
  return out;
}

std::vector<VsdeReport> parse_reports(std::string_view text,
                                      ReportFormat format) {
  const auto& cols = columns();
  std::vector<VsdeReport> out;
  if (format == ReportFormat::csv) {
    auto lines = split(text, '\n');
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("report csv: empty input");
    const auto header = split(trim(lines.front()), ',');
    if (header.size() != cols.size())
      throw std::invalid_argument("report csv: unexpected column count");
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (header[i] != cols[i].name)
        throw std::invalid_argument("report csv: unexpected column '" +
                                    std::string(header[i]) + "'");
    for (std::size_t l = 1; l < lines.size(); ++l) {
      const auto cells = split(trim(lines[l]), ',');
      if (cells.size() != cols.size())
        throw std::invalid_argument("report csv: ragged row " +
                                    std::to_string(l));
      VsdeReport r;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::optional<double> v;
        if (!trim(cells[i]).empty()) {
          v = parse_double(cells[i]);
          if (!v)
            throw std::invalid_argument("report csv: bad number '" +
                                        std::string(cells[i]) + "'");
        }
        cols[i].set(r, v);
      }
      out.push_back(r);
    }
    return out;
  }

  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("report json: expected array");
  for (const auto& obj : doc) {
    VsdeReport r;
    for (const auto& c : cols) {
      const auto it = obj.find(c.name);
      if (it == obj.end())
        throw std::invalid_argument(std::string("report json: missing ") +
                                    c.name);
      c.set(r, it->is_null() ? std::nullopt
                             : std::optional<double>(it->get<double>()));
    }
    out.push_back(r);
  }
  return out;
}

void write_text_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed on " + path.string());
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_report(std::span<const VsdeReport> reports, const fs::path& path,
                  ReportFormat format) {
  write_text_file(path, format_reports(reports, format));
}

}  // namespace vsde
