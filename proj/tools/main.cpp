// fieldent command line tool: configures models, runs entropy computations
// and sweeps through the C API, and emits JSON or CSV result records.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fieldent/fieldent.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

int exit_code_for(fe_status status) {
  switch (status) {
    case FE_OK:
      return 0;
    case FE_ERR_DOMAIN:
      return kExitDomain;
    case FE_ERR_PRECISION:
    case FE_ERR_INTEGRATION:
      return kExitNumerical;
    case FE_ERR_INVALID:
      return kExitConfig;
    default:
      return 1;
  }
}

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(fe_status status, const std::string& message) {
  throw CliError{exit_code_for(status), message};
}

// Guard for C API calls: raises CliError carrying the diagnostic on failure.
class Api {
 public:
  fe_status check(fe_status status) {
    if (status != FE_OK) fail(status, err_);
    return status;
  }
  char* buf() { return err_; }
  size_t len() const { return sizeof(err_); }

 private:
  char err_[512] = {0};
};

struct CsvRow {
  std::string command;
  std::optional<int> alpha;
  std::optional<int> n;
  std::optional<double> lambda;
  std::optional<double> mass;
  std::optional<double> cutoff;
  std::optional<double> value;
  std::optional<double> error;
  std::optional<double> dkk;
  std::optional<double> ddkk;
  std::optional<std::uint64_t> seed;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_encode(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "command,alpha,N,lambda,mass,cutoff,value,error,contribution_DKK,"
        "contribution_DDKK,seed\n";
  for (const auto& r : rows) {
    os << r.command << ',';
    if (r.alpha) os << *r.alpha;
    os << ',';
    if (r.n) os << *r.n;
    os << ',';
    if (r.lambda) os << fmt(*r.lambda);
    os << ',';
    if (r.mass) os << fmt(*r.mass);
    os << ',';
    if (r.cutoff) os << fmt(*r.cutoff);
    os << ',';
    if (r.value) os << fmt(*r.value);
    os << ',';
    if (r.error) os << fmt(*r.error);
    os << ',';
    if (r.dkk) os << fmt(*r.dkk);
    os << ',';
    if (r.ddkk) os << fmt(*r.ddkk);
    os << ',';
    if (r.seed) os << *r.seed;
    os << '\n';
  }
  return os.str();
}

struct Emitter {
  std::string format = "json";
  std::string output_path;

  void write(const ordered_json& record, const std::vector<CsvRow>& rows) {
    std::string payload =
        format == "csv" ? csv_encode(rows) : record.dump(2) + "\n";
    if (output_path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream out(output_path);
    if (!out) fail(FE_ERR_INVALID, "cannot open output file: " + output_path);
    out << payload;
  }
};

// Scaling of reported energies: by default everything is expressed in units
// of the input mass scale; energies divide by `scale`, densities (energy^3)
// by scale^3.
struct Units {
  std::string label = "raw";
  double scale = 1.0;

  static Units make(const std::string& mode, double mass_scale) {
    Units u;
    if (mode == "raw" || mass_scale <= 0.0) {
      u.label = "raw";
      u.scale = 1.0;
    } else {
      u.label = "mass";
      u.scale = mass_scale;
    }
    return u;
  }
  double energy(double v) const { return v / scale; }
  double density(double v) const { return v / (scale * scale * scale); }
};

struct ResultView {
  double value = 0.0;
  double error = 0.0;
  std::optional<double> dkk_value, dkk_error;
  std::optional<double> ddkk_value, ddkk_error;
};

ResultView read_result(fe_result* result, const Units& units) {
  ResultView view;
  view.value = units.density(fe_result_value(result));
  view.error = units.density(fe_result_error(result));
  const size_t n = fe_result_contribution_count(result);
  for (size_t i = 0; i < n; ++i) {
    const char* label = nullptr;
    double v = 0.0, e = 0.0;
    if (fe_result_contribution(result, i, &label, &v, &e) != FE_OK) continue;
    if (std::string(label) == "DKK") {
      view.dkk_value = units.density(v);
      view.dkk_error = units.density(e);
    } else if (std::string(label) == "DDKK") {
      view.ddkk_value = units.density(v);
      view.ddkk_error = units.density(e);
    }
  }
  return view;
}

ordered_json contributions_json(const ResultView& view) {
  ordered_json c = ordered_json::object();
  if (view.ddkk_value)
    c["DDKK"] = {{"value", *view.ddkk_value}, {"error", *view.ddkk_error}};
  if (view.dkk_value)
    c["DKK"] = {{"value", *view.dkk_value}, {"error", *view.dkk_error}};
  return c;
}

ordered_json base_record(const std::string& command, const Units& units) {
  ordered_json record;
  record["tool"] = "fieldent";
  record["version"] = fe_version();
  record["command"] = command;
  record["units"] = units.label;
  return record;
}

// ---------------------------------------------------------------------------
// Flat key=value config files: keys are long option names without the
// leading dashes; command-line flags override file values.
// ---------------------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitConfig, "cannot read config file: " + path};
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CliError{kExitConfig, "config line " + std::to_string(lineno) +
                                      " is not of the form key = value"};
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw CliError{kExitConfig,
                     "config line " + std::to_string(lineno) + ": empty key"};
    tokens.push_back("--" + key);
    if (!value.empty()) tokens.push_back(value);
  }
  return tokens;
}

// Expands `--config FILE` in place: file tokens are inserted directly after
// the subcommand name so that explicit flags, parsed later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw CliError{kExitConfig, "--config needs a file argument"};
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;
  if (rest.empty())
    throw CliError{kExitConfig, "--config requires a subcommand"};
  std::vector<std::string> expanded;
  expanded.push_back(rest[0]);  // subcommand
  for (auto& t : config_tokens(config_path)) expanded.push_back(t);
  for (size_t i = 1; i < rest.size(); ++i) expanded.push_back(rest[i]);
  return expanded;
}

// ---------------------------------------------------------------------------

struct CommonOpts {
  int alpha = 2;
  double tolerance = 1e-8;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string units = "mass";
  Emitter emitter;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_alpha = true) {
  if (with_alpha) cmd->add_option("--alpha", c.alpha, "Renyi index (>= 2)");
  cmd->add_option("--tolerance", c.tolerance,
                  "relative tolerance of the radial quadrature");
  cmd->add_option("--seed", c.seed, "random seed for Monte Carlo estimators")
      ->envname("FIELD_ENTANGLE_SEED");
  cmd->add_option("--threads", c.threads, "worker threads for Monte Carlo");
  cmd->add_option("--units", c.units,
                  "'mass' (energies in units of the input mass scale) or "
                  "'raw'")
      ->check(CLI::IsMember({"mass", "raw"}));
  cmd->add_option("--format", c.emitter.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", c.emitter.output_path,
                  "write the record to this file instead of stdout");
}

int run_cli(std::vector<std::string> args);

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(std::move(args));
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run_cli(std::vector<std::string> args) {
  args = expand_config(args);

  CLI::App app{"Renyi entanglement entropy between interacting scalar "
               "fields, with an exact Gaussian-lattice cross-check"};
  app.require_subcommand(1);
  // Config-file tokens are injected ahead of explicit flags; the last
  // occurrence of an option wins.
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.footer("Any subcommand also accepts --config FILE, a flat key=value "
             "file whose keys are long option names; explicit flags "
             "override file values.");

  // ---- cubic ----
  auto* cubic = app.add_subcommand(
      "cubic", "two-field cubic model entropy per volume");
  CommonOpts cubic_c;
  double cubic_lambda = 0.1, cubic_vev = 1.0, cubic_mass = 1.0,
         cubic_cutoff = 20.0;
  cubic->add_option("--lambda", cubic_lambda, "coupling")->required();
  cubic->add_option("--vev", cubic_vev, "vacuum scale v")->required();
  cubic->add_option("--mass", cubic_mass, "field mass");
  cubic->add_option("--cutoff", cubic_cutoff, "regulator scale")->required();
  add_common(cubic, cubic_c);

  // ---- unbroken ----
  auto* unbroken = app.add_subcommand(
      "unbroken", "unbroken-phase entropy per volume");
  CommonOpts unb_c;
  int unb_n = 2;
  double unb_lambda = 0.1, unb_mass = 1.0, unb_cutoff = 20.0;
  unbroken->add_option("--n", unb_n, "number of fields N")->required();
  unbroken->add_option("--lambda", unb_lambda, "quartic coupling")->required();
  unbroken->add_option("--mass", unb_mass, "common field mass");
  unbroken->add_option("--cutoff", unb_cutoff, "regulator scale")->required();
  add_common(unbroken, unb_c);

  // ---- ssb / ssb-pi ----
  auto* ssb = app.add_subcommand(
      "ssb", "broken-phase entropy of the focused field");
  auto* ssb_pi = app.add_subcommand(
      "ssb-pi", "broken-phase entropy of a single traced-species field");
  struct SsbOpts {
    CommonOpts common;
    int n = 2;
    double lambda_u = 0.01, cutoff = 20.0, ct = 1.0, mu = 1.0;
  };
  SsbOpts ssb_o, ssbpi_o;
  for (auto [cmd, o] : {std::pair{ssb, &ssb_o}, std::pair{ssb_pi, &ssbpi_o}}) {
    cmd->add_option("--n", o->n, "number of fields N")->required();
    cmd->add_option("--lambda-u", o->lambda_u,
                    "physical coupling at the shift scale")->required();
    cmd->add_option("--cutoff", o->cutoff, "regulator scale")->required();
    cmd->add_option("--ct", o->ct, "tadpole constant C_t");
    cmd->add_option("--mu", o->mu, "tachyonic mass magnitude mu");
    add_common(cmd, o->common);
  }

  // ---- scaling-fit ----
  auto* scaling = app.add_subcommand(
      "scaling-fit", "sweep the cutoff and fit S/V = C * cutoff^p");
  CommonOpts scal_c;
  int scal_n = 2;
  double scal_lambda = 0.1, scal_mass = 1.0;
  std::vector<double> scal_sweep;
  scaling->add_option("--n", scal_n, "number of fields N")->required();
  scaling->add_option("--lambda", scal_lambda, "quartic coupling")->required();
  scaling->add_option("--mass", scal_mass, "common field mass");
  scaling->add_option("--sweep", scal_sweep, "cutoff values (>= 4)")
      ->required()
      ->delimiter(',');
  add_common(scaling, scal_c);

  // ---- xcheck ----
  auto* xcheck = app.add_subcommand(
      "xcheck", "momentum-space Monte Carlo check of the unbroken entropy");
  CommonOpts xch_c;
  int xch_n = 2;
  double xch_lambda = 0.1, xch_mass = 1.0, xch_cutoff = 20.0,
         xch_mc_tol = 0.1;
  long long xch_samples = 1000000;
  xcheck->add_option("--n", xch_n, "number of fields N")->required();
  xcheck->add_option("--lambda", xch_lambda, "quartic coupling")->required();
  xcheck->add_option("--mass", xch_mass, "common field mass");
  xcheck->add_option("--cutoff", xch_cutoff, "regulator scale")->required();
  xcheck->add_option("--samples", xch_samples, "Monte Carlo samples (>= 1e5)");
  xcheck->add_option("--mc-tol", xch_mc_tol,
                     "required relative statistical precision");
  add_common(xcheck, xch_c);

  // ---- oracle ----
  auto* oracle = app.add_subcommand(
      "oracle", "exact entanglement entropy of two coupled lattice fields");
  CommonOpts ora_c;
  int ora_dims = 1, ora_sites = 32;
  double ora_mphi = 1.0, ora_mchi = 1.0, ora_g = 0.3;
  std::vector<double> ora_sweep;
  oracle->add_option("--dims", ora_dims, "lattice dimensions (1-3)");
  oracle->add_option("--sites", ora_sites, "sites per dimension");
  oracle->add_option("--m-phi", ora_mphi, "mass of the kept field");
  oracle->add_option("--m-chi", ora_mchi, "mass of the traced field");
  oracle->add_option("--g", ora_g, "bilinear coupling");
  oracle->add_option("--sweep", ora_sweep,
                     "coupling sweep for the perturbative report")
      ->delimiter(',');
  add_common(oracle, ora_c);

  // ---- short-range ----
  auto* shortr = app.add_subcommand(
      "short-range", "fraction of a diagram integral beyond a separation");
  CommonOpts sr_c;
  std::string sr_diagram = "ddkk";
  double sr_mass = 1.0, sr_cutoff = 20.0, sr_range = 0.5;
  shortr->add_option("--diagram", sr_diagram, "diagram family")
      ->check(CLI::IsMember({"ddkk", "dkk"}));
  shortr->add_option("--mass", sr_mass, "common line mass");
  shortr->add_option("--cutoff", sr_cutoff, "regulator scale")->required();
  shortr->add_option("--range", sr_range, "separation threshold")->required();
  add_common(shortr, sr_c, /*with_alpha=*/false);

  std::vector<const char*> argv_c;
  argv_c.push_back("fieldent");
  for (const auto& a : args) argv_c.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv_c.size()), argv_c.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  Api api;

  if (cubic->parsed()) {
    Units units = Units::make(cubic_c.units, cubic_mass);
    fe_result* result = nullptr;
    api.check(fe_renyi_cubic(cubic_c.alpha, cubic_lambda, cubic_vev,
                             cubic_mass, cubic_cutoff, cubic_c.tolerance,
                             &result, api.buf(), api.len()));
    ResultView view = read_result(result, units);
    fe_result_free(result);

    ordered_json record = base_record("cubic", units);
    record["inputs"] = {{"alpha", cubic_c.alpha},   {"lambda", cubic_lambda},
                        {"vev", cubic_vev},         {"mass", cubic_mass},
                        {"cutoff", cubic_cutoff},   {"tolerance", cubic_c.tolerance},
                        {"units", cubic_c.units}};
    record["threads"] = cubic_c.threads;
    record["value"] = view.value;
    record["error"] = view.error;
    record["contributions"] = contributions_json(view);
    CsvRow row{"cubic", cubic_c.alpha, std::nullopt, cubic_lambda,
               units.energy(cubic_mass), units.energy(cubic_cutoff),
               view.value, view.error, view.dkk_value, view.ddkk_value,
               std::nullopt};
    cubic_c.emitter.write(record, {row});
    return 0;
  }

  if (unbroken->parsed()) {
    Units units = Units::make(unb_c.units, unb_mass);
    fe_model* model = fe_model_unbroken(unb_n, unb_lambda, unb_mass,
                                        unb_cutoff, api.buf(), api.len());
    if (model == nullptr) fail(FE_ERR_DOMAIN, api.buf());
    fe_result* result = nullptr;
    fe_status st = fe_renyi_unbroken(model, unb_c.alpha, unb_c.tolerance,
                                     &result, api.buf(), api.len());
    fe_model_free(model);
    api.check(st);
    ResultView view = read_result(result, units);
    fe_result_free(result);

    ordered_json record = base_record("unbroken", units);
    record["inputs"] = {{"alpha", unb_c.alpha},   {"n", unb_n},
                        {"lambda", unb_lambda},   {"mass", unb_mass},
                        {"cutoff", unb_cutoff},   {"tolerance", unb_c.tolerance},
                        {"units", unb_c.units}};
    record["threads"] = unb_c.threads;
    record["value"] = view.value;
    record["error"] = view.error;
    record["contributions"] = contributions_json(view);
    CsvRow row{"unbroken", unb_c.alpha, unb_n, unb_lambda,
               units.energy(unb_mass), units.energy(unb_cutoff), view.value,
               view.error, view.dkk_value, view.ddkk_value, std::nullopt};
    unb_c.emitter.write(record, {row});
    return 0;
  }

  for (auto [cmd, o, name] :
       {std::tuple{ssb, &ssb_o, "ssb"}, std::tuple{ssb_pi, &ssbpi_o, "ssb-pi"}}) {
    if (!cmd->parsed()) continue;
    // Validate the coupling against the shift-scale bound first so the
    // diagnostic names the lambda_u admissibility condition.
    double shift = 0.0;
    api.check(fe_ssb_shift_scale(o->lambda_u, o->n, o->cutoff, o->ct, &shift,
                                 api.buf(), api.len()));
    double m_sigma = 0.0, m_pi = 0.0;
    api.check(fe_effective_masses(o->lambda_u, shift, &m_sigma, &m_pi,
                                  api.buf(), api.len()));

    Units units = Units::make(o->common.units, o->mu);
    fe_model* model = fe_model_broken(o->n, o->lambda_u, o->mu, o->cutoff,
                                      api.buf(), api.len());
    if (model == nullptr) fail(FE_ERR_DOMAIN, api.buf());
    fe_result* result = nullptr;
    fe_status st;
    if (std::string(name) == "ssb")
      st = fe_renyi_ssb(model, o->common.alpha, o->lambda_u, o->ct,
                        o->common.tolerance, &result, api.buf(), api.len());
    else
      st = fe_renyi_ssb_pi(model, o->common.alpha, o->lambda_u, o->ct,
                           o->common.tolerance, &result, api.buf(), api.len());
    fe_model_free(model);
    api.check(st);
    ResultView view = read_result(result, units);
    fe_result_free(result);

    ordered_json record = base_record(name, units);
    record["inputs"] = {{"alpha", o->common.alpha}, {"n", o->n},
                        {"lambda_u", o->lambda_u},  {"mu", o->mu},
                        {"cutoff", o->cutoff},      {"ct", o->ct},
                        {"tolerance", o->common.tolerance},
                        {"units", o->common.units}};
    record["threads"] = o->common.threads;
    record["shift_scale"] = units.energy(shift);
    record["m_sigma_eff"] = units.energy(m_sigma);
    record["m_pi_eff"] = units.energy(m_pi);
    record["value"] = view.value;
    record["error"] = view.error;
    record["contributions"] = contributions_json(view);
    CsvRow row{name, o->common.alpha, o->n, o->lambda_u,
               units.energy(o->mu), units.energy(o->cutoff), view.value,
               view.error, view.dkk_value, view.ddkk_value, std::nullopt};
    o->common.emitter.write(record, {row});
    return 0;
  }

  if (scaling->parsed()) {
    if (scal_sweep.size() < 4)
      fail(FE_ERR_INVALID, "scaling-fit needs at least 4 sweep values");
    Units units = Units::make(scal_c.units, scal_mass);

    std::vector<double> xs, ys;
    std::vector<CsvRow> rows;
    ordered_json points = ordered_json::array();
    for (double cutoff : scal_sweep) {
      fe_model* model = fe_model_unbroken(scal_n, scal_lambda, scal_mass,
                                          cutoff, api.buf(), api.len());
      if (model == nullptr) fail(FE_ERR_DOMAIN, api.buf());
      fe_result* result = nullptr;
      fe_status st = fe_renyi_unbroken(model, scal_c.alpha, scal_c.tolerance,
                                       &result, api.buf(), api.len());
      fe_model_free(model);
      api.check(st);
      ResultView view = read_result(result, units);
      fe_result_free(result);

      xs.push_back(units.energy(cutoff));
      ys.push_back(view.value);
      points.push_back({{"cutoff", units.energy(cutoff)},
                        {"value", view.value},
                        {"error", view.error}});
      rows.push_back({"scaling-fit", scal_c.alpha, scal_n, scal_lambda,
                      units.energy(scal_mass), units.energy(cutoff),
                      view.value, view.error, view.dkk_value, view.ddkk_value,
                      std::nullopt});
    }
    double prefactor = 0.0, exponent = 0.0, residual = 0.0;
    api.check(fe_fit_power_law(xs.data(), ys.data(), xs.size(), &prefactor,
                               &exponent, &residual, api.buf(), api.len()));

    ordered_json record = base_record("scaling-fit", units);
    record["inputs"] = {{"alpha", scal_c.alpha},   {"n", scal_n},
                        {"lambda", scal_lambda},   {"mass", scal_mass},
                        {"sweep", scal_sweep},     {"tolerance", scal_c.tolerance},
                        {"units", scal_c.units}};
    record["threads"] = scal_c.threads;
    record["points"] = points;
    record["fit"] = {{"prefactor", prefactor},
                     {"exponent", exponent},
                     {"residual", residual}};
    scal_c.emitter.write(record, rows);
    return 0;
  }

  if (xcheck->parsed()) {
    Units units = Units::make(xch_c.units, xch_mass);
    fe_model* model = fe_model_unbroken(xch_n, xch_lambda, xch_mass,
                                        xch_cutoff, api.buf(), api.len());
    if (model == nullptr) fail(FE_ERR_DOMAIN, api.buf());

    fe_result* reference = nullptr;
    fe_status st = fe_renyi_unbroken(model, xch_c.alpha, xch_c.tolerance,
                                     &reference, api.buf(), api.len());
    if (st != FE_OK) fe_model_free(model);
    api.check(st);

    fe_result* mc = nullptr;
    st = fe_xcheck_momentum(model, xch_c.alpha, xch_samples, xch_c.seed,
                            xch_c.threads, xch_mc_tol, &mc, api.buf(),
                            api.len());
    fe_model_free(model);
    if (st != FE_OK) fe_result_free(reference);
    api.check(st);

    ResultView ref_view = read_result(reference, units);
    ResultView mc_view = read_result(mc, units);
    fe_result_free(reference);
    fe_result_free(mc);

    const double combined = std::sqrt(mc_view.error * mc_view.error +
                                      ref_view.error * ref_view.error);
    const double sigma_distance =
        combined > 0.0 ? std::abs(mc_view.value - ref_view.value) / combined
                       : 0.0;

    ordered_json record = base_record("xcheck", units);
    record["inputs"] = {{"alpha", xch_c.alpha},     {"n", xch_n},
                        {"lambda", xch_lambda},     {"mass", xch_mass},
                        {"cutoff", xch_cutoff},     {"samples", xch_samples},
                        {"seed", xch_c.seed},       {"mc_tol", xch_mc_tol},
                        {"tolerance", xch_c.tolerance},
                        {"units", xch_c.units}};
    record["threads"] = xch_c.threads;
    record["seed"] = xch_c.seed;
    record["value"] = mc_view.value;
    record["error"] = mc_view.error;
    record["contributions"] = contributions_json(mc_view);
    record["reference"] = {{"value", ref_view.value},
                           {"error", ref_view.error}};
    record["sigma_distance"] = sigma_distance;
    CsvRow row{"xcheck", xch_c.alpha, xch_n, xch_lambda,
               units.energy(xch_mass), units.energy(xch_cutoff),
               mc_view.value, mc_view.error, mc_view.dkk_value,
               mc_view.ddkk_value, xch_c.seed};
    xch_c.emitter.write(record, {row});
    return 0;
  }

  if (oracle->parsed()) {
    Units units;  // lattice units, spacing = 1
    units.label = "lattice";

    ordered_json record = base_record("oracle", units);
    record["inputs"] = {{"alpha", ora_c.alpha}, {"dims", ora_dims},
                        {"sites", ora_sites},   {"m_phi", ora_mphi},
                        {"m_chi", ora_mchi},    {"g", ora_g},
                        {"sweep", ora_sweep}};
    record["threads"] = ora_c.threads;
    std::vector<CsvRow> rows;

    if (ora_sweep.empty()) {
      double value = 0.0;
      api.check(fe_oracle_entropy(ora_dims, ora_sites, ora_mphi, ora_mchi,
                                  ora_g, ora_c.alpha, &value, api.buf(),
                                  api.len()));
      record["value"] = value;
      record["error"] = 0.0;
      rows.push_back({"oracle", ora_c.alpha, std::nullopt, std::nullopt,
                      std::nullopt, std::nullopt, value, 0.0, std::nullopt,
                      std::nullopt, std::nullopt});
    } else {
      fe_oracle_report report{};
      api.check(fe_oracle_check(ora_dims, ora_sites, ora_mphi, ora_mchi,
                                ora_sweep.data(), ora_sweep.size(),
                                ora_c.alpha, &report, api.buf(), api.len()));
      ordered_json points = ordered_json::array();
      for (double g : ora_sweep) {
        double value = 0.0;
        api.check(fe_oracle_entropy(ora_dims, ora_sites, ora_mphi, ora_mchi,
                                    g, ora_c.alpha, &value, api.buf(),
                                    api.len()));
        points.push_back({{"g", g}, {"value", value}});
        rows.push_back({"oracle", ora_c.alpha, std::nullopt, g, std::nullopt,
                        std::nullopt, value, 0.0, std::nullopt, std::nullopt,
                        std::nullopt});
      }
      record["points"] = points;
      record["report"] = {
          {"coupling_exponent", report.coupling_exponent},
          {"exponent_residual", report.exponent_residual},
          {"s3_over_s2", report.s3_over_s2},
          {"volume_law_gap", report.volume_law_gap},
          {"per_site_entropy",
           {{"L", report.per_site_entropy_l},
            {"2L", report.per_site_entropy_2l},
            {"4L", report.per_site_entropy_4l}}}};
    }
    ora_c.emitter.write(record, rows);
    return 0;
  }

  if (shortr->parsed()) {
    Units units = Units::make(sr_c.units, sr_mass);
    const size_t n_lines = sr_diagram == "ddkk" ? 4 : 3;
    std::vector<double> masses(n_lines, sr_mass);
    std::vector<double> regulators(n_lines, sr_cutoff);
    double fraction = 0.0;
    api.check(fe_short_range_fraction(masses.data(), regulators.data(),
                                      n_lines, sr_range, &fraction, api.buf(),
                                      api.len()));

    ordered_json record = base_record("short-range", units);
    record["inputs"] = {{"diagram", sr_diagram}, {"mass", sr_mass},
                        {"cutoff", sr_cutoff},   {"range", sr_range},
                        {"units", sr_c.units}};
    record["threads"] = sr_c.threads;
    record["value"] = fraction;
    record["error"] = 0.0;
    CsvRow row{"short-range", std::nullopt, std::nullopt, std::nullopt,
               units.energy(sr_mass), units.energy(sr_cutoff), fraction, 0.0,
               std::nullopt, std::nullopt, std::nullopt};
    sr_c.emitter.write(record, {row});
    return 0;
  }

  return kExitConfig;
}

}  // namespace
