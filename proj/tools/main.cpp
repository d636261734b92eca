// Command line front end for the leaf-function library.
//
// Subcommands:
//   constants  half-period constants pi_n
//   table      per-phase angle and leaf values for one pose
//   curve      sampled curve points as CSV or SVG
//   frame      construction frame at one phase as CSV or SVG
//   verify     run the identity battery against a tolerance
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leaffun/leaffun.hpp"

namespace {

// Writes to --out when given, stdout otherwise.
void deliver(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing output file: " + path);
}

leaffun::LemniscateVariant parse_variant(const std::string& name) {
  if (name == "horizontal") return leaffun::LemniscateVariant::Horizontal;
  if (name == "diagonal") return leaffun::LemniscateVariant::Diagonal;
  throw CLI::ValidationError("--variant", "must be 'horizontal' or 'diagonal'");
}

int run_verify(double tolerance, int samples, const std::string& out_path) {
  const auto reports = leaffun::run_identity_checks(samples);
  std::string out;
  bool all_pass = true;
  std::size_t name_width = 0;
  for (const auto& rep : reports) name_width = std::max(name_width, rep.name.size());
  for (const auto& rep : reports) {
    const bool ok = rep.passes(tolerance);
    all_pass = all_pass && ok;
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-*s  max residual %.3e  (%d samples)\n",
                  ok ? "PASS" : "FAIL", static_cast<int>(name_width),
                  rep.name.c_str(), rep.max_abs_residual, rep.sample_count);
    out += line;
  }
  char tail[128];
  std::snprintf(tail, sizeof tail, "%s: %zu checks against tolerance %.1e\n",
                all_pass ? "OK" : "FAILED", reports.size(), tolerance);
  out += tail;
  deliver(out_path, out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leaf functions sleaf_n/cleaf_n and lemniscate geometry"};
  app.require_subcommand(1);

  std::string variant_name = "horizontal";
  std::string format = "csv";
  std::string out_path;
  double phase = 0.5;
  double tolerance = 1e-8;
  int samples = 100;
  int precision = 5;
  int n_start = 1;
  int n_end = 10;
  double l_start = 0.0;
  double l_end = 1.3;
  double l_step = 0.1;

  CLI::App* c_table = app.add_subcommand("table", "angle/leaf-value table");
  c_table->add_option("--variant", variant_name, "horizontal or diagonal")
      ->capture_default_str();
  c_table->add_option("--start", l_start, "first phase")->capture_default_str();
  c_table->add_option("--end", l_end, "last phase")->capture_default_str();
  c_table->add_option("--step", l_step, "phase increment")->capture_default_str();
  c_table->add_option("--precision", precision, "digits after the point")
      ->capture_default_str();
  c_table->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* c_constants = app.add_subcommand("constants", "half-period constants pi_n");
  c_constants->add_option("--start", n_start, "first order")->capture_default_str();
  c_constants->add_option("--end", n_end, "last order")->capture_default_str();
  c_constants->add_option("--precision", precision, "digits after the point")
      ->capture_default_str();
  c_constants->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* c_curve = app.add_subcommand("curve", "sampled curve points");
  c_curve->add_option("--variant", variant_name, "horizontal or diagonal")
      ->capture_default_str();
  c_curve->add_option("--samples", samples, "number of points")->capture_default_str();
  c_curve->add_option("--format", format, "csv or svg")->capture_default_str();
  c_curve->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* c_frame = app.add_subcommand("frame", "construction frame at one phase");
  c_frame->add_option("--variant", variant_name, "horizontal or diagonal")
      ->capture_default_str();
  c_frame->add_option("--l", phase, "phase (arc length), strictly inside (0, pi_2/2)")
      ->capture_default_str();
  c_frame->add_option("--format", format, "csv or svg")->capture_default_str();
  c_frame->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* c_verify = app.add_subcommand("verify", "run the identity battery");
  c_verify->add_option("--tolerance", tolerance, "max residual accepted")
      ->capture_default_str();
  c_verify->add_option("--samples", samples, "points per sweep")
      ->capture_default_str();
  c_verify->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);

    if (c_table->parsed()) {
      leaffun::TableSpec spec;
      spec.kind = parse_variant(variant_name) == leaffun::LemniscateVariant::Horizontal
                      ? leaffun::TableKind::Horizontal
                      : leaffun::TableKind::Diagonal;
      spec.l_start = l_start;
      spec.l_end = l_end;
      spec.l_step = l_step;
      spec.precision = precision;
      deliver(out_path, leaffun::render_table(spec));
      return 0;
    }
    if (c_constants->parsed()) {
      leaffun::TableSpec spec;
      spec.kind = leaffun::TableKind::Constants;
      spec.precision = precision;
      spec.n_start = n_start;
      spec.n_end = n_end;
      deliver(out_path, leaffun::render_table(spec));
      return 0;
    }
    if (c_curve->parsed()) {
      const auto variant = parse_variant(variant_name);
      const auto rows = leaffun::sample_curve(variant, samples);
      if (format == "csv") {
        deliver(out_path, leaffun::curve_csv(rows));
      } else if (format == "svg") {
        deliver(out_path, leaffun::curve_svg(variant, rows));
      } else {
        throw CLI::ValidationError("--format", "must be 'csv' or 'svg'");
      }
      return 0;
    }
    if (c_frame->parsed()) {
      const auto variant = parse_variant(variant_name);
      const auto f = leaffun::construction_frame(variant, phase);
      if (format == "csv") {
        deliver(out_path, leaffun::frame_csv(f));
      } else if (format == "svg") {
        deliver(out_path, leaffun::frame_svg(f));
      } else {
        throw CLI::ValidationError("--format", "must be 'csv' or 'svg'");
      }
      return 0;
    }
    if (c_verify->parsed()) {
      if (samples < 1)
        throw CLI::ValidationError("--samples", "must be at least 1");
      return run_verify(tolerance, samples, out_path);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // clean exit for --help, usage error otherwise
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
