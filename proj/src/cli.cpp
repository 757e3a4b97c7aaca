#include "varregion/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "varregion/extremal.hpp"
#include "varregion/io.hpp"
#include "varregion/schwarz_sampler.hpp"
#include "varregion/verify.hpp"

namespace varregion {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

/// Usage-level failure carrying its exit code.
struct CliFailure {
  int code;
  std::string message;
};

struct CommonFlags {
  double A = 0.0;
  double B = 0.5;
  std::string lambda = "0";
  std::string z0 = "0.5,0";
  int theta_samples = 256;
  int mc_samples = 1000;
  std::uint64_t seed = 0;
  double tol = kDefaultMembershipTol;
  std::string out;
  std::string format;
};

void add_param_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--A", f.A, "parameter A (-1 <= A < B)")->capture_default_str();
  cmd->add_option("--B", f.B, "parameter B (A < B <= 1, B != 0)")->capture_default_str();
  cmd->add_option("--lambda", f.lambda, "second-coefficient parameter, 're,im' or real")->capture_default_str();
}

void add_region_flags(CLI::App* cmd, CommonFlags& f) {
  add_param_flags(cmd, f);
  cmd->add_option("--z0", f.z0, "evaluation point 're,im' with |z0| < 1")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out, "output file (stdout when omitted)");
  cmd->add_option("--format", f.format, "csv, svg or json (default: from --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "svg", "json"}));
}

cplx complex_flag(const std::string& text, const char* name) {
  try {
    return parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitUsage, std::string("--") + name + ": " + e.what()};
  }
}

JanowskiParams make_params(double A, double B) {
  try {
    return JanowskiParams(A, B);
  } catch (const std::domain_error& e) {
    throw CliFailure{kExitUsage, std::string("invalid parameters: ") + e.what()};
  }
}

EvalPoint make_point(const CommonFlags& f) {
  try {
    return EvalPoint(complex_flag(f.z0, "z0"), complex_flag(f.lambda, "lambda"));
  } catch (const std::domain_error& e) {
    throw CliFailure{kExitUsage, std::string("invalid point: ") + e.what()};
  }
}

std::string output_format(const CommonFlags& f) {
  if (!f.format.empty()) return f.format;
  const std::string ext = fs::path(f.out).extension().string();
  if (ext == ".svg") return "svg";
  if (ext == ".json") return "json";
  return "csv";
}

void emit(const CommonFlags& f, const std::string& content, std::ostream& out) {
  if (f.out.empty()) {
    out << content;
    return;
  }
  write_file_atomic(resolve_output(f.out), content);
}

// Adding 0.0 turns -0 into +0.
std::string pair_text(cplx z) { return format_number(z.real() + 0.0, 15) + " " + format_number(z.imag() + 0.0, 15); }

int cmd_region(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  if (f.theta_samples < 3) throw CliFailure{kExitUsage, "--theta-samples must be >= 3"};
  const JanowskiParams params = make_params(f.A, f.B);
  const EvalPoint point = make_point(f);
  const RegionRecord rec = compute_region(params, point, f.theta_samples);
  if (rec.singleton) {
    err << "note: the region is the single point " << pair_text(rec.boundary.samples.front().value)
        << (point.z0() == 0.0 ? " (z0 = 0)" : " (|lambda| = 1)") << "\n";
  }
  const std::string fmt = output_format(f);
  if (fmt == "json") {
    emit(f, to_json(rec).dump(2) + "\n", out);
  } else if (fmt == "svg") {
    emit(f, region_svg(rec), out);
  } else {
    emit(f, region_csv(rec), out);
  }
  return kExitOk;
}

struct ExtremalFlags {
  std::string a = "1,0";
  std::string z = "0.5,0";
  int nodes = 16;
  int max_panels = 4096;
  double quad_tol = 1e-12;
};

int cmd_extremal(const CommonFlags& f, const ExtremalFlags& x, std::ostream& out) {
  const JanowskiParams params = make_params(f.A, f.B);
  const cplx lambda = complex_flag(f.lambda, "lambda");
  const cplx a = complex_flag(x.a, "a");
  const cplx z = complex_flag(x.z, "z");
  if (!(std::abs(z) < 1.0)) throw CliFailure{kExitUsage, "invalid point: constraint |z| < 1 violated"};
  QuadratureConfig cfg{x.nodes, x.max_panels, x.quad_tol};
  try {
    cfg.validate();
  } catch (const std::domain_error& e) {
    throw CliFailure{kExitUsage, e.what()};
  }
  std::optional<ExtremalSpec> spec;
  try {
    spec.emplace(a, lambda, params);
  } catch (const std::domain_error& e) {
    throw CliFailure{kExitUsage, std::string("invalid extremal: ") + e.what()};
  }
  const cplx value = extremal_value(*spec, z, cfg);
  out << pair_text(value) << "\n" << pair_text(extremal_fprime(*spec, z)) << "\n";
  return kExitOk;
}

int cmd_sample(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  if (f.mc_samples < 1) throw CliFailure{kExitUsage, "--mc-samples must be >= 1"};
  if (f.theta_samples < 3) throw CliFailure{kExitUsage, "--theta-samples must be >= 3"};
  if (!(f.tol > 0.0)) throw CliFailure{kExitUsage, "--tol must be positive"};
  const JanowskiParams params = make_params(f.A, f.B);
  const EvalPoint point = make_point(f);

  std::vector<CloudPoint> cloud;
  cloud.reserve(static_cast<std::size_t>(f.mc_samples));
  for (int i = 0; i < f.mc_samples; ++i) {
    if (point.is_singleton()) {
      cloud.push_back({singleton_value(point, params), Verdict::Boundary});
      continue;
    }
    const auto idx = static_cast<std::uint64_t>(i);
    const ConstrainedSchwarz member(sample_inner(mix_seed(f.seed, idx), i % 5), point.lambda());
    const cplx w = member_log_fprime(member, params, point.z0());
    cloud.push_back({w, contains(w, point, params, f.tol).status});
  }
  if (point.is_singleton()) err << "note: the region is a single point; every member takes its value\n";

  const RegionRecord rec = compute_region(params, point, f.theta_samples);
  const std::string fmt = output_format(f);
  if (fmt == "svg") {
    emit(f, region_svg(rec, cloud), out);
  } else if (fmt == "json") {
    ordered_json j;
    j["region"] = to_json(rec);
    j["seed"] = f.seed;
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      samples.push_back({{"seed_index", i},
                         {"re", cloud[i].value.real()},
                         {"im", cloud[i].value.imag()},
                         {"verdict", to_string(cloud[i].verdict)}});
    }
    j["samples"] = std::move(samples);
    emit(f, j.dump(2) + "\n", out);
  } else {
    std::string csv = "seed_index,re,im,verdict\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      csv += std::to_string(i) + "," + format_number(cloud[i].value.real()) + "," +
             format_number(cloud[i].value.imag()) + "," + to_string(cloud[i].verdict) + "\n";
    }
    emit(f, csv, out);
  }

  int outside = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud[i].verdict != Verdict::Outside) continue;
    if (++outside <= 10) err << "containment breach: seed_index=" << i << " value=" << pair_text(cloud[i].value) << "\n";
  }
  if (outside > 0) {
    err << outside << " sample(s) fell outside the region\n";
    return kExitContainment;
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const CommonFlags& f, std::ostream& out, std::ostream& err) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw CliFailure{kExitUsage, "unknown suite '" + suite + "'"};
  }
  if (!(f.tol > 0.0)) throw CliFailure{kExitUsage, "--tol must be positive"};
  const std::vector<VerificationReport> reports = run_suite(suite, {f.seed, f.tol});
  ordered_json arr = ordered_json::array();
  bool ok = true;
  for (const VerificationReport& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.passed;
    err << (r.passed ? "PASS " : "FAIL ") << r.suite_name << " max_violation=" << format_number(r.max_violation, 6)
        << " tol=" << format_number(r.tolerance, 6) << " samples=" << r.samples << "\n";
  }
  emit(f, arr.dump(2) + "\n", out);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const std::string& grid_path, const std::string& out_dir_flag, int theta_samples,
              std::ostream& err) {
  if (theta_samples < 3) throw CliFailure{kExitUsage, "--theta-samples must be >= 3"};
  std::vector<GridBlock> blocks;
  try {
    blocks = parse_grid(read_file(grid_path));
  } catch (const GridParseError& e) {
    throw CliFailure{kExitUsage, std::string("grid parse error: ") + e.what()};
  }
  const fs::path out_dir = resolve_output(out_dir_flag);

  ordered_json index;
  ordered_json entries = ordered_json::array();
  std::map<std::string, std::size_t> first_block;
  std::size_t rejected = 0;
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const GridBlock& b = blocks[i];
    const std::string hash = stable_hash(b.canonical());
    const std::string file = hash + ".json";
    ordered_json entry = {{"block", i}, {"line", b.first_line}, {"hash", hash}, {"file", file}};

    if (auto seen = first_block.find(hash); seen != first_block.end()) {
      ++duplicates;
      entry["status"] = "duplicate";
      entry["duplicate_of"] = seen->second;
      entries.push_back(std::move(entry));
      continue;
    }
    first_block.emplace(hash, i);

    ordered_json record;
    try {
      const JanowskiParams params(b.values.at("A"), b.values.at("B"));
      const EvalPoint point({b.values.at("z0_re"), b.values.at("z0_im")},
                            {b.values.at("lambda_re"), b.values.at("lambda_im")});
      record = to_json(compute_region(params, point, theta_samples));
      record["status"] = "ok";
      entry["status"] = "ok";
    } catch (const std::domain_error& e) {
      ++rejected;
      record = ordered_json::object();
      ordered_json vals = ordered_json::object();
      for (const auto& [k, v] : b.values) vals[k] = v;
      record["block"] = std::move(vals);
      record["status"] = "rejected";
      record["reason"] = e.what();
      entry["status"] = "rejected";
      entry["reason"] = e.what();
    }
    write_file_atomic(out_dir / file, record.dump(2) + "\n");
    entries.push_back(std::move(entry));
  }
  index["records"] = std::move(entries);
  index["blocks"] = blocks.size();
  index["unique"] = first_block.size();
  index["deduplicated"] = duplicates;
  index["rejected"] = rejected;
  write_file_atomic(out_dir / "index.json", index.dump(2) + "\n");
  err << blocks.size() << " block(s), " << first_block.size() << " record(s), " << duplicates
      << " duplicate(s), " << rejected << " rejected\n";
  return kExitOk;
}

int cmd_inspect(const std::string& path, std::ostream& out) {
  RegionRecord rec = [&] {
    try {
      return region_from_json(nlohmann::json::parse(read_file(path)));
    } catch (const nlohmann::json::parse_error& e) {
      throw CliFailure{kExitUsage, std::string("not JSON: ") + e.what()};
    } catch (const std::invalid_argument& e) {
      throw CliFailure{kExitUsage, e.what()};
    }
  }();
  // Recompute and compare, so a stale or edited record is caught.
  const int n = rec.singleton ? 3 : static_cast<int>(rec.boundary.size());
  const RegionRecord fresh = compute_region(rec.params, rec.point, n);
  double gap = std::abs(fresh.disk.center - rec.disk.center) + std::abs(fresh.disk.radius - rec.disk.radius);
  if (fresh.boundary.size() != rec.boundary.size()) gap = INFINITY;
  for (std::size_t i = 0; i < rec.boundary.size() && std::isfinite(gap); ++i) {
    gap = std::max(gap, std::abs(fresh.boundary.samples[i].value - rec.boundary.samples[i].value));
  }
  out << "A=" << format_number(rec.params.A()) << " B=" << format_number(rec.params.B())
      << " z0=" << pair_text(rec.point.z0()) << " lambda=" << pair_text(rec.point.lambda()) << "\n"
      << "center=" << pair_text(rec.disk.center) << " radius=" << format_number(rec.disk.radius, 15)
      << " samples=" << rec.boundary.size() << (rec.singleton ? " singleton" : "") << "\n"
      << "recompute_gap=" << format_number(gap, 6) << "\n";
  return gap <= 1e-12 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regions of variability of log f'(z0) over C_lambda(A,B)", "varregion"};
  app.require_subcommand(1);

  CommonFlags flags;
  ExtremalFlags xflags;
  std::string suite = "all";
  std::string grid_path;
  std::string sweep_out;
  std::string inspect_path;

  auto* region = app.add_subcommand("region", "boundary curve of the region (csv, svg, json)");
  add_region_flags(region, flags);
  region->add_option("--theta-samples", flags.theta_samples, "boundary samples (>= 3)")->capture_default_str();
  add_output_flags(region, flags);

  auto* extremal = app.add_subcommand("extremal", "print F_{a,lambda}(z) and F'_{a,lambda}(z) as 're im' lines");
  add_param_flags(extremal, flags);
  extremal->add_option("--a", xflags.a, "extremal parameter 're,im' with |a| <= 1")->capture_default_str();
  extremal->add_option("--z", xflags.z, "evaluation point 're,im' with |z| < 1")->capture_default_str();
  extremal->add_option("--nodes", xflags.nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
  extremal->add_option("--max-panels", xflags.max_panels, "panel budget")->capture_default_str();
  extremal->add_option("--quad-tol", xflags.quad_tol, "absolute quadrature tolerance")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "log f'(z0) for seeded random members, with verdicts");
  add_region_flags(sample, flags);
  sample->add_option("--mc-samples", flags.mc_samples, "number of members")->capture_default_str();
  sample->add_option("--theta-samples", flags.theta_samples, "boundary samples for svg/json")->capture_default_str();
  sample->add_option("--seed", flags.seed, "generator seed")->capture_default_str();
  sample->add_option("--tol", flags.tol, "membership tolerance")->capture_default_str();
  add_output_flags(sample, flags);

  auto* verify = app.add_subcommand("verify", "run verification suites, JSON report");
  verify->add_option("--suite", suite, "prop1|corollary0|unit-lambda|rotation|coverage|convexity|inclusion|halfplane|all")
      ->capture_default_str();
  verify->add_option("--seed", flags.seed, "generator seed")->capture_default_str();
  verify->add_option("--tol", flags.tol, "membership tolerance")->capture_default_str();
  verify->add_option("--out", flags.out, "report file (stdout when omitted)");

  auto* sweep = app.add_subcommand("sweep", "region records for every block of a grid file");
  sweep->add_option("--grid", grid_path, "grid file")->required();
  sweep->add_option("--out", sweep_out, "output directory")->required();
  sweep->add_option("--theta-samples", flags.theta_samples, "boundary samples")->capture_default_str();

  auto* inspect = app.add_subcommand("inspect", "re-read a region JSON record and recompute it");
  inspect->add_option("file", inspect_path, "region record")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("varregion");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (region->parsed()) return cmd_region(flags, out, err);
    if (extremal->parsed()) return cmd_extremal(flags, xflags, out);
    if (sample->parsed()) return cmd_sample(flags, out, err);
    if (verify->parsed()) return cmd_verify(suite, flags, out, err);
    if (sweep->parsed()) return cmd_sweep(grid_path, sweep_out, flags.theta_samples, err);
    if (inspect->parsed()) return cmd_inspect(inspect_path, out);
  } catch (const CliFailure& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "; last estimate " << pair_text(e.estimate()) << "\n";
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace varregion
