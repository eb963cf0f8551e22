#include "cmi/trace_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cmi {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) return false;
    ++end;
  }
  return true;
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

json sidecar_json(const Interferogram& trace) {
  json meta;
  meta["kind"] = to_string(trace.kind);
  meta["normalization"] = to_string(trace.normalization);
  if (trace.passes) meta["passes"] = *trace.passes;
  if (trace.spectrum) {
    meta["omega0_rad_per_s"] = trace.spectrum->omega0;
    meta["delta_omega_rad_per_s"] = trace.spectrum->delta_omega;
  }
  return meta;
}

void apply_sidecar(Interferogram& trace, const std::filesystem::path& meta_path) {
  std::ifstream in(meta_path);
  if (!in) return;  // no sidecar; keep defaults
  json meta;
  try {
    in >> meta;
  } catch (const json::exception& e) {
    throw io_error("failed to parse metadata sidecar " + meta_path.string() + ": " + e.what());
  }
  if (meta.contains("kind")) trace.kind = trace_kind_from_string(meta["kind"]);
  if (meta.contains("normalization")) {
    trace.normalization = normalization_from_string(meta["normalization"]);
  }
  if (meta.contains("passes")) trace.passes = meta["passes"].get<int>();
  if (meta.contains("omega0_rad_per_s") && meta.contains("delta_omega_rad_per_s")) {
    trace.spectrum = SpectrumModel(meta["omega0_rad_per_s"].get<double>(),
                                   meta["delta_omega_rad_per_s"].get<double>());
  }
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  if (p.extension() == ".csv") {
    p.replace_extension(".json");
  } else {
    p += ".json";
  }
  return p;
}

void write_trace_csv(const Interferogram& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");

  out << "delay_fs,value\n";
  for (int i = 0; i < trace.delays.samples(); ++i) {
    out << format_double(trace.delays.delay_fs(i)) << ','
        << format_double(trace.values[static_cast<std::size_t>(i)]) << '\n';
  }
  if (!out) throw io_error("write failed for " + path.string());

  std::ofstream meta(sidecar_path(path));
  if (!meta) throw io_error("cannot open " + sidecar_path(path).string() + " for writing");
  meta << sidecar_json(trace).dump(2) << '\n';
  if (!meta) throw io_error("write failed for " + sidecar_path(path).string());
}

Interferogram read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());

  std::vector<double> delays;
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const std::size_t comma = stripped.find(',');
    if (comma == std::string::npos) {
      throw io_error(path.string() + ":" + std::to_string(line_no) +
                     ": expected two comma-separated columns");
    }
    double d = 0.0;
    double v = 0.0;
    const bool ok = parse_double(trim(stripped.substr(0, comma)), d) &&
                    parse_double(trim(stripped.substr(comma + 1)), v);
    if (!ok) {
      if (header_allowed) {  // a single leading header line is fine
        header_allowed = false;
        continue;
      }
      throw io_error(path.string() + ":" + std::to_string(line_no) +
                     ": cannot parse numeric columns");
    }
    header_allowed = false;
    delays.push_back(d);
    values.push_back(v);
  }
  if (delays.size() < 2) {
    throw io_error(path.string() + ": need at least 2 data rows");
  }

  double mean_step = (delays.back() - delays.front()) / static_cast<double>(delays.size() - 1);
  if (!(mean_step > 0.0)) {
    throw io_error(path.string() + ": delays must increase");
  }
  double jitter = 0.0;
  for (std::size_t i = 1; i < delays.size(); ++i) {
    const double step = delays[i] - delays[i - 1];
    if (!(step > 0.0)) {
      throw io_error(path.string() + ": delays must strictly increase (row " +
                     std::to_string(i + 1) + " of the data)");
    }
    jitter = std::max(jitter, std::abs(step - mean_step) / mean_step);
  }
  if (jitter > 0.01) {
    throw io_error(path.string() + ": delay spacing jitter " + std::to_string(jitter) +
                   " exceeds the 1% resampling limit");
  }

  const DelayGrid grid(delays.front(), delays.back(), static_cast<int>(delays.size()));
  Interferogram trace{grid, {}, Normalization::raw, TraceKind::full, std::nullopt, std::nullopt};
  if (jitter < 1e-9) {
    trace.values = std::move(values);
  } else {
    // Linear resampling onto the uniform grid.
    trace.values.resize(delays.size());
    std::size_t seg = 0;
    for (int i = 0; i < grid.samples(); ++i) {
      const double t = grid.delay_fs(i);
      while (seg + 2 < delays.size() && delays[seg + 1] < t) ++seg;
      const double t0 = delays[seg];
      const double t1 = delays[seg + 1];
      const double f = std::clamp((t - t0) / (t1 - t0), 0.0, 1.0);
      trace.values[static_cast<std::size_t>(i)] = values[seg] + f * (values[seg + 1] - values[seg]);
    }
  }

  apply_sidecar(trace, sidecar_path(path));
  return trace;
}

std::string metrics_to_json(const TraceMetrics& metrics, int indent) {
  json j;
  j["peak"] = metrics.peak;
  j["background"] = metrics.background;
  j["f_pb"] = metrics.peak_to_background;
  j["g2_zero"] = metrics.g2_zero;
  j["fwhm_fs"] = metrics.fwhm_fs;
  j["visibility"] = metrics.visibility;
  j["fringe_period_fs"] = metrics.fringe_period_fs;
  return j.dump(indent);
}

}  // namespace cmi
