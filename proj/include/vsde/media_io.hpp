#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/report.hpp"

namespace vsde {

// How consecutive frames are packed in a raw file. Only the luma plane is
// ever read; for 4:2:0 the two chroma planes are skipped.
enum class PlaneLayout { single, yuv420 };

std::size_t plane_stride(int width, int height, PlaneLayout layout);

LumaFrame read_raw_frame(const std::filesystem::path& path, int width,
                         int height, std::size_t frame_index = 0,
                         PlaneLayout layout = PlaneLayout::single);

// Number of whole frames stored in the file.
std::size_t count_raw_frames(const std::filesystem::path& path, int width,
                             int height, PlaneLayout layout = PlaneLayout::single);

void write_raw_frame(const std::filesystem::path& path, const LumaFrame& frame,
                     bool append = false);

CameraConfig parse_camera_config(std::string_view text);
CameraConfig read_camera_config(const std::filesystem::path& path);
std::string format_camera_config(const CameraConfig& cam);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

// Column names in VsdeReport field order.
const std::vector<std::string>& report_columns();

// CSV cells of one report in column order; empty for an absent optional.
std::vector<std::string> report_cells(const VsdeReport& report);

std::string format_reports(std::span<const VsdeReport> reports,
                           ReportFormat format);
std::vector<VsdeReport> parse_reports(std::string_view text,
                                      ReportFormat format);

void write_report(std::span<const VsdeReport> reports,
                  const std::filesystem::path& path, ReportFormat format);

// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Fixed 6-significant-digit rendering used by every report writer.
std::string format_number(double value);

}  // namespace vsde
