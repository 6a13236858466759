#include "areagrowth/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "areagrowth/error.hpp"
#include "areagrowth/growth_analysis.hpp"
#include "areagrowth/packet_certifier.hpp"
#include "areagrowth/r3_scheduler.hpp"
#include "areagrowth/sublevel_quadrature.hpp"
#include "areagrowth/svg_plot.hpp"
#include "areagrowth/table_io.hpp"

namespace areagrowth::cli {
namespace {

using nlohmann::json;

enum class Format { Csv, Json };

// Writes to --output when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::InvalidArgument, fmt::format("cannot open '{}'", path));
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

GraphFamily family_arg(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw Error(ErrorKind::InvalidArgument, fmt::format("unknown family '{}'", name));
}

Format format_arg(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::InvalidArgument, fmt::format("format '{}' is not valid here", name));
}

json real_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ---- area -------------------------------------------------------------------

struct AreaOpts {
  std::string family;
  std::string r_list;
  std::string mode = "lower";
  QuadConfig quad;
  std::string output;
  std::string format = "csv";
};

int cmd_area(const AreaOpts& o, std::ostream& out, std::ostream& err) {
  const GraphFamily family = family_arg(o.family);
  const std::vector<double> radii = parse_real_list(o.r_list);
  QuadConfig cfg = o.quad;
  if (o.mode == "lower") {
    cfg.mode = QuadMode::LowerBound;
  } else if (o.mode == "estimate") {
    cfg.mode = QuadMode::Estimate;
  } else {
    throw Error(ErrorKind::InvalidArgument, fmt::format("unknown mode '{}'", o.mode));
  }
  const Format format = format_arg(o.format);
  cfg.validate();
  // Check every radius before any work so that a refusal produces no partial output.
  for (double r : radii) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
    if (r > radius_cap(family) && !cfg.override_cap) {
      throw Error(ErrorKind::CapExceeded,
                  fmt::format("r = {} exceeds the cap {} for {} (use --override-cap)", format_real(r),
                              format_real(radius_cap(family)), family_name(family)));
    }
  }

  std::vector<AreaEstimate> results;
  for (double r : radii) {
    results.push_back(graph_area(SublevelDomain{family, r}, cfg));
    if (results.back().depth_exceeded) {
      err << fmt::format("warning: r = {}: tolerance not met at max depth {}\n", format_real(r),
                         cfg.max_depth);
    }
  }

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  const std::string src(source_name(SampleSource::Quadrature));
  if (format == Format::Csv) {
    write_csv_row(os, {"r", "area_lower", "area_estimate", "source", "cells_inside", "cells_boundary",
                       "depth_reached"});
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const AreaEstimate& a = results[i];
      write_csv_row(os, {format_real(radii[i]), format_real(a.lower),
                         a.estimate ? format_real(*a.estimate) : std::string(), src,
                         std::to_string(a.cells_inside), std::to_string(a.cells_boundary),
                         std::to_string(a.depth_reached)});
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const AreaEstimate& a = results[i];
      rows.push_back({{"r", radii[i]},
                      {"area_lower", a.lower},
                      {"area_estimate", a.estimate ? json(*a.estimate) : json(nullptr)},
                      {"source", src},
                      {"cells_inside", a.cells_inside},
                      {"cells_boundary", a.cells_boundary},
                      {"depth_reached", a.depth_reached},
                      {"depth_exceeded", a.depth_exceeded}});
    }
    os << json{{"family", family_name(family)}, {"samples", rows}}.dump() << '\n';
  }
  return kExitOk;
}

// ---- packets ----------------------------------------------------------------

struct PacketOpts {
  std::string family;
  std::string range;
  std::string method = "auto";
  std::int64_t samples = 10000;
  double delta = 0.01;
  std::string output;
  std::string format = "csv";
};

int cmd_packets(const PacketOpts& o, std::ostream& out) {
  const GraphFamily family = family_arg(o.family);
  if (family == GraphFamily::Exp) {
    throw Error(ErrorKind::InvalidArgument, "the exp family has no packets");
  }
  const auto [lo, hi] = parse_index_range(o.range);
  if (lo < min_packet_index(family)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("packet indices for {} start at {}", family_name(family),
                            min_packet_index(family)));
  }
  if (o.method != "auto" && o.method != "interval" && o.method != "sampling") {
    throw Error(ErrorKind::InvalidArgument, fmt::format("unknown method '{}'", o.method));
  }
  if (o.samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be positive");
  const Format format = format_arg(o.format);
  const double delta = family == GraphFamily::SinExpSq ? o.delta : 0.0;

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  json rows = json::array();
  if (format == Format::Csv) {
    write_csv_row(os, {"n", "center", "radius", "max_abs_f", "min_abs_fprime", "f_bound_ok",
                       "fprime_bound_ok", "disjoint_ok"});
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    const DiskPacket p = make_packet(family, n, delta);
    CertMethod method = CertMethod::IntervalProof;
    if (o.method == "sampling" || (o.method == "auto" && n > 100)) method = CertMethod::DenseSampling;
    const PacketCertificate c = certify_packet(p, method, o.samples);
    // Neighbours are the closest packets on the real axis.
    const bool disjoint =
        verify_disjoint(family, std::max(lo, n - 1), std::min(hi, n + 1), delta).all_disjoint;
    if (format == Format::Csv) {
      write_csv_row(os, {std::to_string(n), format_real(p.center), format_real(p.radius),
                         format_real(c.max_abs_f), format_real(c.min_abs_fprime),
                         format_bool(c.f_bound_ok), format_bool(c.fprime_bound_ok),
                         format_bool(disjoint)});
    } else {
      rows.push_back({{"n", n},
                      {"center", p.center},
                      {"radius", p.radius},
                      {"max_abs_f", c.max_abs_f},
                      {"min_abs_fprime", c.min_abs_fprime},
                      {"f_bound_ok", c.f_bound_ok},
                      {"fprime_bound_ok", c.fprime_bound_ok},
                      {"disjoint_ok", disjoint},
                      {"rigorous", c.rigorous}});
    }
  }
  if (format == Format::Json) {
    os << json{{"family", family_name(family)}, {"packets", rows}}.dump() << '\n';
  }
  return kExitOk;
}

// ---- growth -----------------------------------------------------------------

struct GrowthOpts {
  std::string input;
  std::string generate;
  std::string family = "sin-exp";
  std::string r_list;
  std::string model = "auto";
  std::string value = "lower";
  double delta = 0.01;
  QuadConfig quad;
  std::string output;
};

std::vector<GrowthSample> samples_from_csv(std::istream& in, bool use_estimate) {
  const Table t = read_csv(in);
  const std::size_t ir = t.column("r");
  const std::size_t ia = use_estimate ? t.column("area_estimate") : t.column("area_lower");
  std::optional<std::size_t> is;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == "source") is = i;
  }
  std::vector<GrowthSample> out;
  for (const auto& row : t.rows) {
    GrowthSample s;
    s.r = parse_real_list(row[ir]).at(0);
    s.area_lower = parse_real_list(row[ia]).at(0);
    if (is) {
      auto src = parse_source(row[*is]);
      if (!src) throw Error(ErrorKind::InvalidArgument, fmt::format("unknown source '{}'", row[*is]));
      s.source = *src;
    }
    out.push_back(s);
  }
  return out;
}

int cmd_growth(const GrowthOpts& o, std::ostream& out) {
  if (o.value != "lower" && o.value != "estimate") {
    throw Error(ErrorKind::InvalidArgument, fmt::format("unknown value column '{}'", o.value));
  }
  const bool use_estimate = o.value == "estimate";
  std::vector<GrowthSample> samples;
  if (!o.input.empty() == !o.generate.empty()) {
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --input and --generate");
  }
  if (!o.input.empty()) {
    if (o.input == "-") {
      samples = samples_from_csv(std::cin, use_estimate);
    } else {
      std::ifstream in(o.input);
      if (!in) throw Error(ErrorKind::InvalidArgument, fmt::format("cannot read '{}'", o.input));
      samples = samples_from_csv(in, use_estimate);
    }
  } else {
    const GraphFamily family = family_arg(o.family);
    if (o.r_list.empty()) throw Error(ErrorKind::InvalidArgument, "--generate needs --r");
    const std::vector<double> radii = parse_real_list(o.r_list);
    if (o.generate == "packets") {
      for (double r : radii) {
        samples.push_back({r, packet_growth_lower_bound(family, r, o.delta), std::nullopt,
                           SampleSource::Packets});
      }
    } else if (o.generate == "area") {
      QuadConfig cfg = o.quad;
      cfg.mode = use_estimate ? QuadMode::Estimate : QuadMode::LowerBound;
      for (double r : radii) {
        const AreaEstimate a = graph_area(SublevelDomain{family, r}, cfg);
        samples.push_back(
            {r, use_estimate ? a.estimate.value_or(a.lower) : a.lower, a.estimate, SampleSource::Quadrature});
      }
    } else {
      throw Error(ErrorKind::InvalidArgument, fmt::format("unknown generator '{}'", o.generate));
    }
  }

  GrowthFit fit;
  if (o.model == "auto") {
    fit = classify_growth(samples);
  } else if (auto m = parse_model(o.model)) {
    fit = fit_growth(samples, *m);
  } else {
    throw Error(ErrorKind::InvalidArgument, fmt::format("unknown model '{}'", o.model));
  }
  json c_w = nullptr;
  json r0_w = nullptr;
  try {
    const GrowthWitness w = witness_constants(samples, fit.model);
    c_w = w.c;
    r0_w = w.r0;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoWitness) throw;
  }
  Sink sink(o.output, out);
  sink.get() << json{{"model", model_name(fit.model)},
                     {"rate", fit.rate},
                     {"log_intercept", fit.log_intercept},
                     {"residual_rms", fit.residual_rms},
                     {"c_witness", c_w},
                     {"r0_witness", r0_w}}
                    .dump()
             << '\n';
  return kExitOk;
}

// ---- schedule ---------------------------------------------------------------

struct ScheduleOpts {
  std::string variant = "exp";
  ScheduleConfig cfg;
  std::string query_r;
  int queries = 64;
  std::string output;
  std::string diagnostics_path;
  std::string format = "csv";
};

json diagnostics_json(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg,
                      std::span<const double> queries) {
  const ScheduleDiagnostics d = diagnostics(rows, cfg, queries);
  json n_of_r = json::array();
  for (const auto& [R, n] : d.n_of_r) n_of_r.push_back({{"R", R}, {"N", n}});
  json area = json::array();
  for (const auto& [R, a] : d.area_lower_of_r) area.push_back({{"R", R}, {"area_lower", a}});
  json partial = json::array();
  for (double s : d.sigma_partial_sums) partial.push_back(real_or_null(s));
  json trend = nullptr;
  try {
    const CompletenessTrend t = completeness_trend(rows, cfg.n0);
    trend = {{"exponent", t.exponent}, {"diverging", t.diverging}, {"scaled_spread", t.scaled_spread}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientRows) throw;
  }
  const auto [qlo, qhi] = queryable_range(rows, cfg);
  return {{"N_of_R", n_of_r},
          {"area_lower_of_R", area},
          {"sigma_partial_sums", partial},
          {"completeness_trend", trend},
          {"eta_max_tail", d.eta_max_tail},
          {"all_hyp2_ok", d.all_hyp2_ok},
          {"all_sigma_feasible", d.all_sigma_feasible},
          {"max_sigma_residual", d.max_sigma_residual},
          {"queryable_range", {real_or_null(qlo), real_or_null(qhi)}}};
}

int cmd_schedule(ScheduleOpts o, std::ostream& out, std::ostream& err) {
  auto v = parse_variant(o.variant);
  if (!v) throw Error(ErrorKind::InvalidArgument, fmt::format("unknown variant '{}'", o.variant));
  o.cfg.variant = *v;
  o.cfg.validate();
  const Format format = format_arg(o.format);
  const std::vector<ScheduleRow> rows = build_schedule(o.cfg);
  std::vector<double> queries;
  if (!o.query_r.empty()) {
    queries = parse_real_list(o.query_r);
  } else {
    if (o.queries < 1) throw Error(ErrorKind::InvalidArgument, "--queries must be positive");
    queries = default_queries(rows, o.cfg, o.queries);
  }
  const json diag = diagnostics_json(rows, o.cfg, queries);

  Sink sink(o.output, out);
  std::ostream& os = sink.get();
  if (format == Format::Csv) {
    write_csv_row(os, {"n", "r_n", "mu_n", "a_n", "b_n", "eps_n", "sigma_n", "eta_n", "hyp2_ok",
                       "sigma_feasible"});
    for (const ScheduleRow& r : rows) {
      write_csv_row(os, {std::to_string(r.n), format_real(r.r_n), format_real(r.mu_n),
                         format_real(r.a_n), format_real(r.b_n), format_real(r.eps_n),
                         format_real(r.sigma_n), format_real(r.eta_n), format_bool(r.hyp2_ok),
                         format_bool(r.sigma_feasible)});
    }
    if (o.diagnostics_path.empty()) {
      err << diag.dump() << '\n';
    } else {
      Sink dsink(o.diagnostics_path, err);
      dsink.get() << diag.dump() << '\n';
    }
  } else {
    json jr = json::array();
    for (const ScheduleRow& r : rows) {
      jr.push_back({{"n", r.n},
                    {"r_n", r.r_n},
                    {"mu_n", r.mu_n},
                    {"a_n", r.a_n},
                    {"b_n", r.b_n},
                    {"eps_n", r.eps_n},
                    {"sigma_n", real_or_null(r.sigma_n)},
                    {"eta_n", r.eta_n},
                    {"hyp2_ok", r.hyp2_ok},
                    {"sigma_feasible", r.sigma_feasible}});
    }
    os << json{{"variant", variant_name(o.cfg.variant)}, {"rows", jr}, {"diagnostics", diag}}.dump()
       << '\n';
  }
  return kExitOk;
}

// ---- plot -------------------------------------------------------------------

struct PlotOpts {
  std::string input;
  std::string axes = "linear";
  std::string x = "r";
  std::string y = "area_lower";
  std::string output;
};

int cmd_plot(const PlotOpts& o, std::ostream& out, std::ostream& err) {
  const auto mode = parse_axes(o.axes);
  if (!mode) throw Error(ErrorKind::InvalidArgument, fmt::format("unknown axes mode '{}'", o.axes));
  Table t;
  if (o.input == "-") {
    t = read_csv(std::cin);
  } else {
    std::ifstream in(o.input);
    if (!in) throw Error(ErrorKind::InvalidArgument, fmt::format("cannot read '{}'", o.input));
    t = read_csv(in);
  }
  if (t.rows.empty()) throw Error(ErrorKind::InvalidArgument, "no data rows to plot");
  const std::size_t ix = t.column(o.x);
  const std::size_t iy = t.column(o.y);
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& row : t.rows) {
    if (row[iy].empty()) continue;
    const double xv = parse_real_list(row[ix]).at(0);
    const double yv = parse_real_list(row[iy]).at(0);
    if (!std::isfinite(xv) || !std::isfinite(yv)) continue;
    xs.push_back(xv);
    ys.push_back(yv);
  }
  // Render into a buffer first; a failed plot must not leave a truncated file.
  std::ostringstream svg;
  const PlotResult res = write_svg_plot(svg, xs, ys, *mode, o.x, o.y);
  Sink sink(o.output, out);
  sink.get() << svg.str();
  if (!o.output.empty()) err << fmt::format("slope={}\n", format_real(res.slope));
  return kExitOk;
}

void add_quad_flags(CLI::App* cmd, QuadConfig& q) {
  cmd->add_option("--max-depth", q.max_depth, "maximum quadtree depth")->capture_default_str();
  cmd->add_option("--tol-rel", q.tol_rel, "relative integrand tolerance")->capture_default_str();
  cmd->add_option("--pad", q.seed_box_pad, "seed box padding")->capture_default_str();
  cmd->add_option("--samples-per-cell", q.samples_per_cell, "estimate-mode samples per leaf")
      ->capture_default_str();
  cmd->add_option("--threads", q.threads, "worker threads (0 = automatic)")->capture_default_str();
  cmd->add_flag("--override-cap", q.override_cap, "allow radii above the family cap");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Area growth of entire holomorphic graphs in C^2", "areagrowth"};
  app.require_subcommand(1);

  AreaOpts area;
  auto* c_area = app.add_subcommand("area", "graph area inside B_r by adaptive quadrature");
  c_area->add_option("--family", area.family, "sin-exp | sin-exp-sq | exp")->required();
  c_area->add_option("--r", area.r_list, "comma-separated radii")->required();
  c_area->add_option("--mode", area.mode, "lower | estimate")->capture_default_str();
  add_quad_flags(c_area, area.quad);
  c_area->add_option("--output,-o", area.output, "output file");
  c_area->add_option("--format", area.format, "csv | json")->capture_default_str();

  PacketOpts pk;
  auto* c_pk = app.add_subcommand("packets", "certify packet disks");
  c_pk->add_option("--family", pk.family, "sin-exp | sin-exp-sq")->required();
  c_pk->add_option("--n", pk.range, "index range lo..hi")->required();
  c_pk->add_option("--method", pk.method, "auto | interval | sampling")->capture_default_str();
  c_pk->add_option("--samples", pk.samples, "points per packet for sampling")->capture_default_str();
  c_pk->add_option("--delta", pk.delta, "radius scale for sin-exp-sq")->capture_default_str();
  c_pk->add_option("--output,-o", pk.output, "output file");
  c_pk->add_option("--format", pk.format, "csv | json")->capture_default_str();

  GrowthOpts gr;
  auto* c_gr = app.add_subcommand("growth", "fit and classify area growth");
  c_gr->add_option("--input", gr.input, "CSV with r and area columns ('-' for stdin)");
  c_gr->add_option("--generate", gr.generate, "packets | area");
  c_gr->add_option("--family", gr.family, "family for --generate")->capture_default_str();
  c_gr->add_option("--r", gr.r_list, "radii for --generate");
  c_gr->add_option("--model", gr.model, "auto | polynomial | exponential | gaussian")
      ->capture_default_str();
  c_gr->add_option("--value", gr.value, "lower | estimate: which area column to fit")
      ->capture_default_str();
  c_gr->add_option("--delta", gr.delta, "radius scale for sin-exp-sq packets")->capture_default_str();
  add_quad_flags(c_gr, gr.quad);
  c_gr->add_option("--output,-o", gr.output, "output file");

  ScheduleOpts sc;
  auto* c_sc = app.add_subcommand("schedule", "build the radii schedule and audit its hypotheses");
  c_sc->add_option("--variant", sc.variant, "exp | gaussian")->capture_default_str();
  c_sc->add_option("--n0", sc.cfg.n0, "index shift")->capture_default_str();
  c_sc->add_option("--d", sc.cfg.d, "gaussian radii scale")->capture_default_str();
  c_sc->add_option("--theta", sc.cfg.theta, "exponential radii scale")->capture_default_str();
  c_sc->add_option("--a0", sc.cfg.a0, "area per stage packet")->capture_default_str();
  c_sc->add_option("--N", sc.cfg.N, "number of stages")->capture_default_str();
  c_sc->add_option("--query-R", sc.query_r, "comma-separated radii for N(R)");
  c_sc->add_option("--queries", sc.queries, "default query count")->capture_default_str();
  c_sc->add_option("--diagnostics", sc.diagnostics_path, "diagnostics JSON file (default stderr)");
  c_sc->add_option("--output,-o", sc.output, "output file");
  c_sc->add_option("--format", sc.format, "csv | json")->capture_default_str();

  PlotOpts pl;
  auto* c_pl = app.add_subcommand("plot", "SVG line chart of a CSV");
  c_pl->add_option("--input", pl.input, "CSV file ('-' for stdin)")->required();
  c_pl->add_option("--axes", pl.axes, "linear | semilog-y | y-vs-r2 | log-log")->capture_default_str();
  c_pl->add_option("--x", pl.x, "x column")->capture_default_str();
  c_pl->add_option("--y", pl.y, "y column")->capture_default_str();
  c_pl->add_option("--output,-o", pl.output, "output file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    // Help requests come through here as well, with exit code 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_area->parsed()) return cmd_area(area, out, err);
    if (c_pk->parsed()) return cmd_packets(pk, out);
    if (c_gr->parsed()) return cmd_growth(gr, out);
    if (c_sc->parsed()) return cmd_schedule(sc, out, err);
    if (c_pl->parsed()) return cmd_plot(pl, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::CapExceeded ? kExitRefused : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace areagrowth::cli
