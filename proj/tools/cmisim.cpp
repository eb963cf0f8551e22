// cmisim — command-line front end: closed-form superbunching metrics, trace
// synthesis, and envelope analysis for chaotic light cascaded N times
// through a Michelson interferometer.
//
// Exit codes: 0 success, 1 usage error, 2 computation/domain error, 3 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmi/analysis.hpp"
#include "cmi/coherence.hpp"
#include "cmi/interferogram.hpp"
#include "cmi/reference.hpp"
#include "cmi/spectrum.hpp"
#include "cmi/trace_io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kOutputDirEnv = "CMISIM_OUTPUT_DIR";

struct RunConfig {
  int passes = 1;
  int max_passes = 1;
  double wavelength_nm = 1550.0;
  double bandwidth_nm = 30.0;
  double tau_start_fs = -400.0;
  double tau_stop_fs = 400.0;
  int samples = 0;  // 0 = choose automatically
  double cutoff_fraction = 0.5;
  std::string kind = "full";
  std::string delay_convention = "arm";
  bool raw = false;
  bool as_json = false;
  int decimals = 2;
  std::string output;
  std::string input;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = fs::path(dir) / p;
    }
  }
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw cmi::io_error("cannot create directory " + p.parent_path().string());
  }
  return p;
}

/// Writes to the resolved output path, or to stdout when no path is set.
void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  const fs::path path = resolve_output(output);
  std::ofstream out(path);
  if (!out) throw cmi::io_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw cmi::io_error("write failed for " + path.string());
}

cmi::SpectrumModel spectrum_from_config(const RunConfig& cfg) {
  cmi::SpectrumModel spectrum = cmi::spectrum_from_wavelength(
      {cfg.wavelength_nm * 1e-9, cfg.bandwidth_nm * 1e-9});
  if (cfg.delay_convention == "mirror") {
    // Delay axis counted in one-way mirror-displacement time: phase advances
    // twice as fast per axis unit, which is the same trace with both
    // spectral parameters doubled.
    return cmi::SpectrumModel(2.0 * spectrum.omega0, 2.0 * spectrum.delta_omega);
  }
  return spectrum;
}

std::string format_fixed(double v, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << cmi::round_half_even(v, decimals);
  return os.str();
}

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json reference_json(const cmi::reference::MeasuredRun& run) {
  return json{{"g2_zero", run.g2_zero.value},
              {"g2_zero_uncertainty", run.g2_zero.uncertainty},
              {"filtered_ratio", run.filtered_ratio},
              {"fwhm_fs", run.fwhm_fs},
              {"visibility", run.visibility},
              {"tpa_peak_counts", run.tpa_peak_counts},
              {"note", "measured on a tabletop setup; depends on the apparatus and "
                       "the true source spectrum, for comparison only"}};
}

std::string reference_text(const cmi::reference::MeasuredRun& run) {
  std::ostringstream os;
  os << "measured reference, " << run.passes
     << (run.passes == 1 ? " pass" : " passes")
     << " (apparatus-dependent, for comparison only):\n"
     << "  g2(0) = " << run.g2_zero.value << " +- " << run.g2_zero.uncertainty
     << ", envelope ratio " << run.filtered_ratio << ", FWHM " << run.fwhm_fs
     << " fs, visibility " << 100.0 * run.visibility << "%, peak counts "
     << run.tpa_peak_counts << "\n";
  return os.str();
}

int cmd_metrics(const RunConfig& cfg) {
  const cmi::PassCount n(cfg.passes);
  const cmi::CoherenceMetrics m = cmi::metrics(n);
  const double amplification = cmi::amplification_factor(n);

  std::string text;
  if (cfg.as_json) {
    json j{{"passes", cfg.passes},
           {"r_pb", m.r_pb},
           {"f_pb", m.f_pb},
           {"g2_zero", m.g2_zero},
           {"tpa_peak", m.tpa_peak},
           {"amplification", amplification}};
    if (cfg.passes == 1) j["experimental_reference"] = reference_json(cmi::reference::kSinglePass);
    if (cfg.passes == 2) j["experimental_reference"] = reference_json(cmi::reference::kDoublePass);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "passes               : " << cfg.passes << "\n"
       << "R_P/B (full trace)   : " << format_fixed(m.r_pb, cfg.decimals) << "\n"
       << "F_P/B (envelope)     : " << format_fixed(m.f_pb, cfg.decimals) << "\n"
       << "g2(0)                : " << format_fixed(m.g2_zero, cfg.decimals) << "\n"
       << "TPA peak counts      : " << format_fixed(m.tpa_peak, cfg.decimals) << "\n"
       << "amplification vs N=1 : " << format_fixed(amplification, cfg.decimals) << "\n";
    if (cfg.passes == 1) os << reference_text(cmi::reference::kSinglePass);
    if (cfg.passes == 2) os << reference_text(cmi::reference::kDoublePass);
    text = os.str();
  }
  emit(text, cfg.output);
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  if (cfg.max_passes < 1) throw std::domain_error("--max-passes must be >= 1");
  std::ostringstream os;
  os << "passes,r_pb,f_pb,g2_zero,tpa_peak,amplification\n";
  const double base = cmi::tpa_peak_counts(cmi::PassCount(1));
  for (int n = 1; n <= cfg.max_passes; ++n) {
    const cmi::CoherenceMetrics m = cmi::metrics(cmi::PassCount(n));
    os << n << ',' << format_full(m.r_pb) << ',' << format_full(m.f_pb) << ','
       << format_full(m.g2_zero) << ',' << format_full(m.tpa_peak) << ','
       << format_full(m.tpa_peak / base) << '\n';
  }
  emit(os.str(), cfg.output);
  return 0;
}

int cmd_synth(const RunConfig& cfg) {
  const cmi::PassCount n(cfg.passes);
  const cmi::SpectrumModel spectrum = spectrum_from_config(cfg);
  const cmi::TraceKind kind = cmi::trace_kind_from_string(cfg.kind);
  const cmi::Normalization norm =
      cfg.raw ? cmi::Normalization::raw : cmi::Normalization::background_normalized;

  int samples = cfg.samples;
  if (samples == 0) {
    samples = kind == cmi::TraceKind::full
                  ? cmi::required_samples(n, spectrum, cfg.tau_start_fs, cfg.tau_stop_fs)
                  : 2001;
  }
  const cmi::DelayGrid grid(cfg.tau_start_fs, cfg.tau_stop_fs, samples);

  cmi::Interferogram trace = [&] {
    switch (kind) {
      case cmi::TraceKind::full: return cmi::full_trace(n, spectrum, grid, norm);
      case cmi::TraceKind::envelope: return cmi::envelope_trace(n, spectrum, grid, norm);
      case cmi::TraceKind::g2: return cmi::g2_curve(n, spectrum, grid);
    }
    throw std::domain_error("unknown trace kind");
  }();

  const fs::path path = resolve_output(cfg.output);
  cmi::write_trace_csv(trace, path);
  std::cout << "wrote " << path.string() << " and " << cmi::sidecar_path(path).string()
            << " (" << samples << " samples)\n";
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  cmi::Interferogram trace = cmi::read_trace_csv(cfg.input);
  if (!trace.spectrum) {
    trace.spectrum = spectrum_from_config(cfg);
  }
  const cmi::FilterConfig filter =
      cmi::FilterConfig::for_spectrum(*trace.spectrum, cfg.cutoff_fraction);
  const cmi::TraceMetrics m = cmi::analyze(trace, filter);
  emit(cmi::metrics_to_json(m) + "\n", cfg.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Two-photon superbunching of broadband chaotic light in a cascaded "
               "Michelson interferometer: exact coefficients, trace synthesis, and "
               "envelope analysis"};
  app.require_subcommand(1);

  const auto add_source_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--wavelength-nm", cfg.wavelength_nm, "Center wavelength [nm]")
        ->capture_default_str();
    cmd->add_option("--bandwidth-nm", cfg.bandwidth_nm, "Full spectral width [nm]")
        ->capture_default_str();
  };

  CLI::App* metrics = app.add_subcommand(
      "metrics", "Closed-form coherence metrics for one pass count");
  metrics->add_option("--passes", cfg.passes, "Number of passes N")->required();
  metrics->add_flag("--json", cfg.as_json, "Machine-readable output");
  metrics->add_option("--decimals", cfg.decimals, "Decimals in the human-readable table")
      ->capture_default_str();
  metrics->add_option("--output", cfg.output, "Write to file instead of stdout");

  CLI::App* scan = app.add_subcommand(
      "scan", "CSV table of metrics for every N up to a maximum");
  scan->add_option("--max-passes", cfg.max_passes, "Largest pass count")->required();
  scan->add_option("--output", cfg.output, "Write to file instead of stdout");

  CLI::App* synth = app.add_subcommand("synth", "Synthesize a trace to CSV + JSON sidecar");
  synth->add_option("--passes", cfg.passes, "Number of passes N")->required();
  synth->add_option("--kind", cfg.kind, "Trace kind")
      ->check(CLI::IsMember({"full", "envelope", "g2"}))
      ->capture_default_str();
  add_source_flags(synth);
  synth->add_option("--tau-start-fs", cfg.tau_start_fs, "Delay axis start [fs]")
      ->capture_default_str();
  synth->add_option("--tau-stop-fs", cfg.tau_stop_fs, "Delay axis stop [fs]")
      ->capture_default_str();
  synth->add_option("--samples", cfg.samples,
                    "Sample count (default: automatic, >= 20 per fringe)");
  synth->add_flag("--raw", cfg.raw, "Raw units instead of background-normalized");
  synth->add_option("--delay-convention", cfg.delay_convention,
                    "Delay axis: inter-arm delay (arm) or one-way mirror-displacement "
                    "time (mirror)")
      ->check(CLI::IsMember({"arm", "mirror"}))
      ->capture_default_str();
  synth->add_option("--output", cfg.output, "Trace CSV path")->required();

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Envelope metrics from a trace CSV (uses the JSON sidecar when present)");
  analyze->add_option("--input", cfg.input, "Trace CSV path")->required();
  add_source_flags(analyze);
  analyze->add_option("--cutoff-fraction", cfg.cutoff_fraction,
                      "Low-pass cutoff as a fraction of omega0")
      ->capture_default_str();
  analyze->add_option("--delay-convention", cfg.delay_convention,
                      "Axis convention assumed when no sidecar metadata exists")
      ->check(CLI::IsMember({"arm", "mirror"}))
      ->capture_default_str();
  analyze->add_option("--output", cfg.output, "Write metrics JSON to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (metrics->parsed()) return cmd_metrics(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (synth->parsed()) return cmd_synth(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const cmi::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
