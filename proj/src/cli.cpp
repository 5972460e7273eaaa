#include "lrpossib/cli.hpp"

#include "lrpossib/report.hpp"
#include "lrpossib/spec_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lrpossib {

namespace {

using nlohmann::json;

struct Flags {
  std::string spec_file;
  std::string model;
  std::string params;
  std::string sample;
  std::vector<std::string> regions;
  std::string prior;
  std::optional<double> a_star, b_star;
  std::string philosophy, regime, format;
  std::optional<double> tol;
  std::optional<int> grid, multistarts;
  std::optional<long long> seed;
  std::optional<double> alpha;
  std::optional<int> resolution;
};

json parse_flag_json(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(flag, std::string("invalid JSON at byte ") + std::to_string(e.byte));
  }
}

json sample_json(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return parse_flag_json(text, "--sample");
  json arr = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      arr.push_back(v);
    } catch (const std::exception&) {
      throw SpecError("--sample", "'" + item + "' is not a number");
    }
  }
  if (arr.empty()) throw SpecError("--sample", "empty sample");
  return arr.size() == 1 ? arr[0] : arr;
}

AnalysisSpec build_spec(const Flags& f) {
  json j = json::object();
  if (!f.spec_file.empty()) {
    std::ifstream in(f.spec_file);
    if (!in) throw InputError("cannot read spec file '" + f.spec_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
      throw SpecError(f.spec_file, std::string("invalid JSON at byte ") + std::to_string(e.byte));
    }
    if (!j.is_object()) throw SpecError(f.spec_file, "expected a JSON object");
  }
  if (!f.model.empty()) {
    j["model"] = json{{"name", f.model}};
    if (!f.params.empty()) j["model"]["params"] = parse_flag_json(f.params, "--params");
  } else if (!f.params.empty()) {
    if (!j.contains("model")) throw SpecError("--params", "needs --model");
    j["model"]["params"] = parse_flag_json(f.params, "--params");
  }
  if (!f.sample.empty()) j["sample"] = sample_json(f.sample);
  if (!f.regions.empty()) {
    json rs = json::array();
    for (std::size_t i = 0; i < f.regions.size(); ++i) {
      rs.push_back({{"name", "region" + std::to_string(i + 1)}, {"region", parse_flag_json(f.regions[i], "--region")}});
    }
    j["regions"] = rs;
  }
  if (!f.prior.empty()) j["prior"] = parse_flag_json(f.prior, "--prior");
  if (f.a_star || f.b_star) {
    if (!j.contains("thresholds")) j["thresholds"] = json::object();
    if (f.a_star) j["thresholds"]["a_star"] = *f.a_star;
    if (f.b_star) j["thresholds"]["b_star"] = *f.b_star;
  }
  if (!f.philosophy.empty()) j["philosophy"] = f.philosophy;
  if (!f.regime.empty()) j["regime"] = f.regime;
  if (!f.format.empty()) j["format"] = f.format;
  if (f.tol || f.grid || f.multistarts || f.seed) {
    if (!j.contains("optimizer")) j["optimizer"] = json::object();
    if (f.tol) j["optimizer"]["tol"] = *f.tol;
    if (f.grid) j["optimizer"]["grid"] = *f.grid;
    if (f.multistarts) j["optimizer"]["multistarts"] = *f.multistarts;
    if (f.seed) j["optimizer"]["seed"] = *f.seed;
  }
  if (f.alpha || f.resolution) {
    if (!j.contains("contour")) j["contour"] = json::object();
    if (f.alpha) j["contour"]["alpha"] = *f.alpha;
    if (f.resolution) j["contour"]["resolution"] = *f.resolution;
  }
  if (!j.contains("model")) throw SpecError("model", "missing (use --spec or --model)");
  if (!j.contains("sample")) throw SpecError("sample", "missing (use --spec or --sample)");
  return parse_spec(j);
}

Json header(const std::string& command, const AnalysisSpec& spec) {
  Json j;
  j["command"] = command;
  j["model"] = spec.model_name;
  Json s = Json::array();
  for (Eigen::Index i = 0; i < spec.sample.values.size(); ++i) s.push_back(real(spec.sample.values[i]));
  j["sample"] = std::move(s);
  j["optimizer"] = to_json(spec.optimizer);
  return j;
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  int evidence(const AnalysisSpec& spec) {
    const auto& sp = spec.model->space();
    const SupResult g = global_sup(*spec.model, spec.sample, spec.optimizer);
    note(g);
    Json j = header("evidence", spec);
    j["global"] = to_json(g, sp);
    Json rows = Json::array();
    spec.region(0);
    for (const auto& nr : spec.regions) {
      const EvidenceValue a = nu(*spec.model, spec.sample, nr.region, spec.optimizer, &g);
      const EvidenceValue b = nu(*spec.model, spec.sample, ParamRegion::complement(nr.region), spec.optimizer, &g);
      note(a.sup);
      note(b.sup);
      Json r;
      r["name"] = nr.name;
      r["nu0"] = real(a.nu);
      r["nu0c"] = real(b.nu);
      r["null"] = to_json(a, sp);
      r["complement"] = to_json(b, sp);
      rows.push_back(std::move(r));
    }
    j["regions"] = std::move(rows);
    return emit(j);
  }

  int phi_cmd(const AnalysisSpec& spec) {
    const auto& nr = spec.region(0);
    const PhiVerdict v = phi(*spec.model, spec.sample, nr.region, spec.phi, spec.optimizer);
    note(v.null_value.sup);
    note(v.complement_value.sup);
    Json j = header("phi", spec);
    j["region"] = nr.name;
    j["verdict"] = to_json(v, spec.model->space());
    return emit(j);
  }

  int ratio(const AnalysisSpec& spec) {
    const auto& r1 = spec.region(0);
    const auto& r2 = spec.region(1);
    const RatioResult r = likelihood_ratio_R(*spec.model, spec.sample, r1.region, r2.region, spec.optimizer);
    Json j = header("ratio", spec);
    j["r1"] = r1.name;
    j["r2"] = r2.name;
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return emit(j);
  }

  int contour_cmd(const AnalysisSpec& spec) {
    double alpha = 1.0;
    std::string source = "alpha";
    if (spec.contour.alpha) {
      alpha = *spec.contour.alpha;
    } else {
      const ParamRegion* region = nullptr;
      if (spec.contour.region) {
        for (const auto& nr : spec.regions) {
          if (nr.name == *spec.contour.region) region = &nr.region;
        }
        if (!region) throw SpecError("contour.region", "no region named '" + *spec.contour.region + "'");
        source = *spec.contour.region;
      } else {
        region = &spec.region(0).region;
        source = spec.region(0).name;
      }
      const EvidenceValue ev = nu(*spec.model, spec.sample, *region, spec.optimizer);
      note(ev.sup);
      alpha = ev.nu;
      if (!(alpha > 0.0)) throw InputError("the region has nu = 0; no contour level to draw");
    }
    ContourGrid grid;
    grid.resolution = spec.contour.resolution;
    const ContourResult c = contour(*spec.model, spec.sample, alpha, grid, spec.optimizer);
    const auto& sp = spec.model->space();
    if (spec.format == "csv") {
      out_ << contour_csv(c, sp);
      return status();
    }
    Json j = header("contour", spec);
    j["alpha"] = real(alpha);
    j["alpha_source"] = source;
    Json pts = Json::array();
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      Json p;
      Json coords = Json::array();
      for (Eigen::Index i = 0; i < c.points[k].size(); ++i) coords.push_back(real(c.points[k][i]));
      p["coords"] = std::move(coords);
      p["lambda"] = real(c.lambda[k]);
      p["inside"] = static_cast<bool>(c.inside[k]);
      pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    Json lines = Json::array();
    for (const auto& line : c.boundary) {
      Json l = Json::array();
      for (const auto& v : line) l.push_back(Json::array({real(v[0]), real(v[1])}));
      lines.push_back(std::move(l));
    }
    j["boundary"] = std::move(lines);
    return emit(j);
  }

  int bayes(const AnalysisSpec& spec) {
    if (!spec.prior) throw SpecError("prior", "bayes-bound needs a prior (use --prior or the spec's \"prior\")");
    const auto& nr = spec.region(0);
    const ConsistencyCheck cc =
        probability_possibility_check(*spec.model, spec.sample, *spec.prior, nr.region, spec.optimizer);
    Json j = header("bayes-bound", spec);
    j["region"] = nr.name;
    j["nu"] = real(cc.nu);
    const Json post = to_json(cc.posterior);
    for (const auto& [k, v] : post.items()) j[k] = v;
    if (cc.posterior.bound) {
      j["bound_holds"] = cc.nu >= *cc.posterior.bound - 1e-9;
    } else {
      j["bound_holds"] = nullptr;
    }
    j["consistency_applicable"] = cc.applicable;
    j["consistency_holds"] = cc.holds;
    return emit(j);
  }

  void set_format(const std::string& f) { format_ = f; }

 private:
  std::ostream& out_;
  std::string format_ = "json";
  bool unconverged_ = false;

  void note(const SupResult& r) { unconverged_ = unconverged_ || !r.converged; }
  int status() const { return unconverged_ ? kExitNumerical : kExitOk; }
  int emit(const Json& j) {
    if (format_ == "csv") throw SpecError("format", "csv output is only available for contour and hwe --grid");
    out_ << dump_json(j);
    return status();
  }
};

std::vector<HweSample> read_counts_csv(std::istream& in, const std::string& name) {
  std::vector<HweSample> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<long long> v;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(cell, &used));
        if (used != cell.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric && lineno == 1) continue;  // header
    if (!numeric || v.size() < 3) {
      throw InputError(name + ":" + std::to_string(lineno) + ": expected y1,y2,y3");
    }
    out.emplace_back(v[0], v[1], v[2]);
  }
  return out;
}

HweSample parse_counts(const std::string& text) {
  std::stringstream ss(text);
  std::string cell;
  std::vector<long long> v;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw SpecError("--counts", "'" + cell + "' is not an integer");
    }
  }
  if (v.size() != 3) throw SpecError("--counts", "expected y1,y2,y3");
  return HweSample(v[0], v[1], v[2]);
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--spec", f.spec_file, "JSON analysis spec file");
  cmd->add_option("--model", f.model, "model name");
  cmd->add_option("--params", f.params, "model parameters as JSON, e.g. {\"n\":8}");
  cmd->add_option("--sample", f.sample, "sample: number, comma list or JSON");
  cmd->add_option("--region", f.regions, "region as JSON (repeatable)");
  cmd->add_option("--a-star", f.a_star, "rejection threshold");
  cmd->add_option("--b-star", f.b_star, "acceptance threshold");
  cmd->add_option("--philosophy", f.philosophy, "fisherian or neyman_pearson");
  cmd->add_option("--regime", f.regime, "both_nonsharp, sharp_null or sharp_alternative");
  cmd->add_option("--tol", f.tol, "relative tolerance on the log-likelihood supremum");
  cmd->add_option("--grid", f.grid, "coarse grid points per dimension");
  cmd->add_option("--multistarts", f.multistarts, "local searches per problem");
  cmd->add_option("--seed", f.seed, "random start seed");
  cmd->add_option("--format", f.format, "json or csv");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likelihood-ratio possibility measures", "lrpossib"};
  app.require_subcommand(1);
  Flags f;
  std::map<std::string, CLI::App*> cmds;
  for (const char* name : {"evidence", "phi", "contour", "ratio", "bayes-bound"}) {
    cmds[name] = app.add_subcommand(name);
    add_common(cmds[name], f);
  }
  cmds["evidence"]->description("nu of each region and of its complement");
  cmds["phi"]->description("accept / reject / maintain verdict for the first region");
  cmds["contour"]->description("grid of the likelihood level set (JSON or long-format CSV)");
  cmds["ratio"]->description("nu(region1) / nu(region2)");
  cmds["bayes-bound"]->description("posterior probability against nu for the first region");
  cmds["contour"]->add_option("--alpha", f.alpha, "level; defaults to nu of the first region");
  cmds["contour"]->add_option("--resolution", f.resolution, "grid nodes per axis");
  cmds["bayes-bound"]->add_option("--prior", f.prior, "prior as JSON");

  auto* hwe = app.add_subcommand("hwe", "Hardy-Weinberg equilibrium report");
  std::string counts, grid_file, hwe_format = "json";
  int hwe_resolution = 201;
  hwe->add_option("--counts", counts, "genotype counts y1,y2,y3");
  hwe->add_option("--grid", grid_file, "CSV of counts (y1,y2,y3 per line, '-' for stdin)");
  hwe->add_option("--format", hwe_format, "json or csv (for --grid)");
  hwe->add_option("--resolution", hwe_resolution, "contour grid nodes per axis (JSON --grid output)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (hwe->parsed()) {
      if (counts.empty() == grid_file.empty()) throw InputError("hwe needs exactly one of --counts or --grid");
      if (!counts.empty()) {
        const HweReport r = hwe_report(parse_counts(counts));
        out << dump_json(to_json(r));
        return kExitOk;
      }
      std::vector<HweSample> samples;
      if (grid_file == "-") {
        samples = read_counts_csv(std::cin, "<stdin>");
      } else {
        std::ifstream in(grid_file);
        if (!in) throw InputError("cannot read '" + grid_file + "'");
        samples = read_counts_csv(in, grid_file);
      }
      if (hwe_format == "csv") {
        const auto rows = hwe_figure_data(samples, {}, 3);
        out << hwe_csv(rows);
        return kExitOk;
      }
      if (hwe_format != "json") throw SpecError("--format", "expected json or csv");
      const auto rows = hwe_figure_data(samples, {}, hwe_resolution);
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json j;
        j["counts"] = Json::array({row.sample.y1, row.sample.y2, row.sample.y3});
        j["report"] = to_json(row.report);
        Json lines = Json::array();
        for (const auto& line : row.contour) {
          Json l = Json::array();
          for (const auto& v : line) l.push_back(Json::array({real(v[0]), real(v[1])}));
          lines.push_back(std::move(l));
        }
        j["contour"] = std::move(lines);
        arr.push_back(std::move(j));
      }
      out << dump_json(arr);
      return kExitOk;
    }

    const AnalysisSpec spec = build_spec(f);
    Runner runner(out);
    runner.set_format(spec.format);
    if (cmds["evidence"]->parsed()) return runner.evidence(spec);
    if (cmds["phi"]->parsed()) return runner.phi_cmd(spec);
    if (cmds["contour"]->parsed()) return runner.contour_cmd(spec);
    if (cmds["ratio"]->parsed()) return runner.ratio(spec);
    return runner.bayes(spec);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace lrpossib
