#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "lrbt/adi.hpp"
#include "lrbt/balancing.hpp"
#include "lrbt/io.hpp"
#include "lrbt/loewner.hpp"
#include "lrbt/pipeline.hpp"
#include "lrbt/sampling.hpp"

namespace lrbt::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string model;
  std::string shifts;
  std::string samples;
  std::string out;
  std::string interim_out;
  std::string method;
  std::string a;
  std::string b;
  std::string grid = "log:1e-3:1e3:100";
  std::optional<long> order;
  std::optional<double> tol;
  bool identity_factors = false;
};

/// Pending outputs; nothing touches the filesystem until commit().
class Outputs {
 public:
  Outputs(std::ostream& out) : out_(out) {}

  void add(const std::string& path, std::string text) {
    if (path.empty()) {
      stdout_text_ += text;
    } else {
      files_.emplace_back(path, std::move(text));
    }
  }

  void commit() {
    std::vector<fs::path> written;
    try {
      for (const auto& [path, text] : files_) {
        io::write_file_atomic(path, text);
        written.push_back(path);
      }
    } catch (...) {
      std::error_code ec;
      for (const auto& p : written) fs::remove(p, ec);
      throw;
    }
    out_ << stdout_text_;
  }

 private:
  std::ostream& out_;
  std::vector<std::pair<std::string, std::string>> files_;
  std::string stdout_text_;
};

std::string short_list(const RVector& v) {
  std::string s;
  char buf[32];
  for (Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", v(i));
    s += (i ? " " : "") + std::string(buf);
  }
  return s;
}

OrderSelection selection_from(const Options& o) {
  if (o.order && o.tol) {
    throw Error(ErrorCode::InvalidArgument, "--order and --tol are mutually exclusive");
  }
  if (o.order) {
    if (*o.order < 1) throw Error(ErrorCode::InvalidArgument, "--order must be positive");
    return OrderSelection::fixed(static_cast<Index>(*o.order));
  }
  return OrderSelection::relative(o.tol.value_or(1e-8));
}

void require(const std::string& value, const char* flag, const std::string& method) {
  if (value.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(flag) + " is required for --method " + method);
  }
}

void cmd_hsv(const Options& o, Outputs& outs, std::ostream& log) {
  const auto sys = validate_system(io::load_model(o.model));
  const RVector hsv = hankel_singular_values(sys);
  outs.add(o.out, io::format_values("hsv", hsv));
  if (!o.out.empty()) log << "hankel singular values: " << short_list(hsv) << "\n";
}

void cmd_sample(const Options& o, Outputs& outs, std::ostream& log) {
  const auto sys = validate_system(io::load_model(o.model));
  auto lists = io::load_shifts(o.shifts);
  const auto shifts =
      validate_shifts(std::move(lists.alphas), std::move(lists.betas), sys.inputs(), sys.outputs());
  const auto plan = required_samples(shifts);
  const auto ds = sample_model(sys, plan.points, plan.derivative_points);
  outs.add(o.out, io::format_samples(ds));
  if (!o.out.empty()) {
    log << "sampled " << plan.points.size() << " points (" << plan.derivative_points.size()
        << " with derivatives)\n";
  }
}

void cmd_reduce(const Options& o, Outputs& outs, std::ostream& log) {
  const auto selection = selection_from(o);
  Reduction red;
  if (o.method == "bt") {
    require(o.model, "--model", o.method);
    const auto bt = intrusive_balanced_truncation(io::load_model(o.model), selection);
    red.rom = bt.rom;
    red.svd.S1 = bt.hsv.head(bt.rom.order());
    red.svd.S2 = bt.hsv.tail(bt.hsv.size() - bt.rom.order());
  } else if (o.method == "adi") {
    require(o.model, "--model", o.method);
    require(o.shifts, "--shifts", o.method);
    const auto sys = validate_system(io::load_model(o.model));
    auto lists = io::load_shifts(o.shifts);
    const auto shifts = validate_shifts(std::move(lists.alphas), std::move(lists.betas),
                                        sys.inputs(), sys.outputs());
    red = reduce_adi_intrusive(sys, shifts, selection);
  } else if (o.method == "dd") {
    require(o.samples, "--samples", o.method);
    require(o.shifts, "--shifts", o.method);
    const auto ds = io::load_samples(o.samples);
    auto lists = io::load_shifts(o.shifts);
    const auto shifts = validate_shifts(std::move(lists.alphas), std::move(lists.betas),
                                        ds.inputs(), ds.outputs());
    const auto interim = build_block_loewner(ds, shifts);
    for (const auto& w : interim.warnings) log << "warning: " << w << "\n";
    red = reduce_interim(interim, selection);
    if (!o.interim_out.empty()) outs.add(o.interim_out, io::format_interim(interim));
  } else {
    throw Error(ErrorCode::InvalidArgument, "--method must be bt, adi or dd");
  }
  outs.add(o.out, io::format_model(red.rom));
  log << "reduced order " << red.rom.order() << "; retained values: " << short_list(red.svd.S1)
      << "\n";
}

void cmd_hsv_est(const Options& o, Outputs& outs, std::ostream& log) {
  const auto ds = io::load_samples(o.samples);
  auto lists = io::load_shifts(o.shifts);
  const auto shifts = validate_shifts(std::move(lists.alphas), std::move(lists.betas),
                                      ds.inputs(), ds.outputs());
  const auto interim = build_block_loewner(ds, shifts);
  CMatrix zp, zq;
  if (o.identity_factors) {
    zp = CMatrix::Identity(shifts.k(), shifts.k());
    zq = CMatrix::Identity(shifts.l(), shifts.l());
  } else {
    zp = small_cholesky(shifts.alphas()).L;
    zq = small_cholesky(shifts.betas()).L;
  }
  const RVector est = hsv_estimates_from_data(interim, zp, zq);
  outs.add(o.out, io::format_values("hsv_estimates", est));
  if (!o.out.empty()) log << "estimates: " << short_list(est) << "\n";
}

void cmd_compare(const Options& o, Outputs& outs, std::ostream& log) {
  const auto a = io::load_model(o.a);
  const auto b = io::load_model(o.b);
  const auto grid = grid_points(parse_grid(o.grid));
  const auto report = compare_roms(a, b, grid);
  outs.add(o.out, io::format_report(report));
  if (!o.out.empty()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", report.max_deviation);
    log << "max relative deviation: " << buf << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced truncation from transfer-function samples at ADI mirror points", "lrbt"};
  app.require_subcommand(1);
  Options o;

  auto* hsv = app.add_subcommand("hsv", "Hankel singular values of a model");
  hsv->add_option("--model", o.model, "model file")->required();
  hsv->add_option("--out", o.out, "output file (stdout if omitted)");

  auto* sample = app.add_subcommand("sample", "sample a model at the mirror images of ADI shifts");
  sample->add_option("--model", o.model, "model file")->required();
  sample->add_option("--shifts", o.shifts, "shifts file")->required();
  sample->add_option("--out", o.out, "samples file")->required();

  auto* reduce = app.add_subcommand("reduce", "reduce a model (bt, adi) or samples (dd)");
  reduce->add_option("--method", o.method, "bt | adi | dd")
      ->required()
      ->check(CLI::IsMember({"bt", "adi", "dd"}));
  reduce->add_option("--model", o.model, "model file (bt, adi)");
  reduce->add_option("--shifts", o.shifts, "shifts file (adi, dd)");
  reduce->add_option("--samples", o.samples, "samples file (dd)");
  reduce->add_option("--order", o.order, "reduced order");
  reduce->add_option("--tol", o.tol, "relative singular value cutoff (default 1e-8)");
  reduce->add_option("--out", o.out, "reduced model file")->required();
  reduce->add_option("--interim-out", o.interim_out, "also write the interim Loewner model (dd)");

  auto* est = app.add_subcommand("hsv-est", "Hankel singular value estimates from samples");
  est->add_option("--samples", o.samples, "samples file")->required();
  est->add_option("--shifts", o.shifts, "shifts file")->required();
  est->add_option("--out", o.out, "output file (stdout if omitted)");
  est->add_flag("--identity-factors", o.identity_factors,
                "replace the shift Cholesky factors by identities (debug)");

  auto* cmp = app.add_subcommand("compare", "compare two models on a frequency grid");
  cmp->add_option("--a", o.a, "first model")->required();
  cmp->add_option("--b", o.b, "reference model")->required();
  cmp->add_option("--grid", o.grid, "log:LO:HI:N (default log:1e-3:1e3:100)");
  cmp->add_option("--out", o.out, "report file (stdout if omitted)");

  std::vector<const char*> argv{"lrbt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  Outputs outs(out);
  std::ostringstream log;
  try {
    if (*hsv) cmd_hsv(o, outs, log);
    if (*sample) cmd_sample(o, outs, log);
    if (*reduce) cmd_reduce(o, outs, log);
    if (*est) cmd_hsv_est(o, outs, log);
    if (*cmp) cmd_compare(o, outs, log);
    outs.commit();
    out << log.str();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace lrbt::cli
