// Copyright 2026 The qbcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbcap/cli/output.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "qbcap/cli/config.hpp"

namespace qbcap::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  cells.resize(header_.size());
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  return out;
}

std::string sweep_csv(std::span<const SweepRecord> records) {
  CsvTable table({"channel", "sides", "p", "q", "n", "capacity_closed", "capacity_general",
                  "lambda0", "lambda1", "lambda2", "lambda3", "branch", "deviation_flag"});
  for (const auto& r : records) {
    std::optional<double> closed;
    if (r.capacity_closed) closed = *r.capacity_closed;
    table.add_row({std::string(short_name(r.kind)), std::string(to_string(r.sides)),
                   format_double(r.p), format_optional(r.q), std::to_string(r.n),
                   format_optional(closed), format_double(r.capacity_general),
                   format_double(r.spectrum[0]), format_double(r.spectrum[1]),
                   format_double(r.spectrum[2]), format_double(r.spectrum[3]),
                   r.branch_used ? std::string(to_string(*r.branch_used)) : std::string(),
                   r.deviation_flag ? "true" : "false"});
  }
  return table.str();
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;
constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string header(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + "<text x=\"" +
         fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  }
};

std::string axes(const Range& xr, const Range& yr, const std::string& x_label,
                 const std::string& y_label) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  std::string s = "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y1) + "\" width=\"" + fmt(x1 - x0) +
                  "\" height=\"" + fmt(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    const double xv = xr.lo + t * (xr.hi - xr.lo), yv = yr.lo + t * (yr.hi - yr.lo);
    const double px = x0 + t * (x1 - x0), py = y0 - t * (y0 - y1);
    s += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(y0 + 16) + "\" text-anchor=\"middle\">" +
         fmt(xv) + "</text>\n";
    s += "<text x=\"" + fmt(x0 - 6) + "\" y=\"" + fmt(py + 4) + "\" text-anchor=\"end\">" +
         fmt(yv) + "</text>\n";
  }
  s += "<text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"" + fmt(kHeight - 12) +
       "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + fmt((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       fmt((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
  return s;
}

// Piecewise-linear blue to yellow ramp.
std::string ramp(double t) {
  static constexpr std::array<std::array<int, 3>, 4> kStops = {
      {{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (kStops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), kStops.size() - 2);
  const double f = t - i;
  char buf[8];
  int rgb[3];
  for (int k = 0; k < 3; ++k)
    rgb[k] = static_cast<int>(std::lround(kStops[i][k] + f * (kStops[i + 1][k] - kStops[i][k])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace

std::string svg_lines(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<Series>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  std::string out = header(title) + axes(xr, yr, x_label, y_label);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    std::string points;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      const double px = x0 + (s.x[i] - xr.lo) / (xr.hi - xr.lo) * (x1 - x0);
      const double py = y0 - (s.y[i] - yr.lo) / (yr.hi - yr.lo) * (y0 - y1);
      if (!points.empty()) points += ' ';
      points += fmt(px) + "," + fmt(py);
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(k);
    out += "<line x1=\"" + fmt(x1 + 12) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" + fmt(x1 + 32) +
           "\" y2=\"" + fmt(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt(x1 + 38) + "\" y=\"" + fmt(ly) + "\">" + escape(s.label) +
           "</text>\n";
  }
  return out + "</svg>\n";
}

std::string svg_heatmap(const std::string& title, const std::vector<double>& xs,
                        const std::vector<double>& ys, const std::vector<double>& values) {
  Range xr, yr, vr;
  for (double v : xs) xr.add(v);
  for (double v : ys) yr.add(v);
  for (double v : values) vr.add(v);
  xr.finish();
  yr.finish();
  vr.finish();
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  const double cw = (x1 - x0) / std::max<std::size_t>(xs.size(), 1);
  const double ch = (y0 - y1) / std::max<std::size_t>(ys.size(), 1);
  std::string out = header(title);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double v = values[i * ys.size() + j];
      out += "<rect x=\"" + fmt(x0 + i * cw) + "\" y=\"" + fmt(y0 - (j + 1) * ch) +
             "\" width=\"" + fmt(cw + 0.05) + "\" height=\"" + fmt(ch + 0.05) + "\" fill=\"" +
             ramp((v - vr.lo) / (vr.hi - vr.lo)) + "\"/>\n";
    }
  }
  out += axes(xr, yr, "p", "q");
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    const double ly = y0 - t * (y0 - y1);
    out += "<rect x=\"" + fmt(x1 + 16) + "\" y=\"" + fmt(ly - 8) +
           "\" width=\"16\" height=\"16\" fill=\"" + ramp(t) + "\"/>\n";
    out += "<text x=\"" + fmt(x1 + 38) + "\" y=\"" + fmt(ly + 4) + "\">" +
           fmt(vr.lo + t * (vr.hi - vr.lo)) + "</text>\n";
  }
  return out + "</svg>\n";
}

}  // namespace qbcap::cli
