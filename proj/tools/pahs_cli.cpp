// pahs-cli: construct photon-added hypergeometric states and their limiting
// cases, evaluate nonclassicality measures, sweep parameters and sample the
// Wigner function. Talks to the library only through the C interface.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pahs/pahs.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

// Failure raised inside the CLI, carrying the process exit code.
struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(pahs_status status) {
  switch (status) {
    case PAHS_OK: return kExitOk;
    case PAHS_ERR_NOT_CONVERGED: return kExitConvergence;
    case PAHS_ERR_INTERNAL: return 1;
    default: return kExitInvalid;
  }
}

void check(pahs_status status, const std::string& context) {
  if (status != PAHS_OK) {
    throw CliError{exit_code_for(status),
                   context + ": " + pahs_status_name(status) + ": " + pahs_last_error()};
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct StateDeleter {
  void operator()(pahs_state* s) const { pahs_state_free(s); }
};
using StatePtr = std::unique_ptr<pahs_state, StateDeleter>;

// ---------------------------------------------------------------------------
// State selection

enum class Family { Pahs, Hypergeometric, Binomial, Coherent, Fock };

const std::map<std::string, Family> kFamilies = {
    {"pahs", Family::Pahs},         {"hypergeometric", Family::Hypergeometric},
    {"binomial", Family::Binomial}, {"coherent", Family::Coherent},
    {"fock", Family::Fock},
};

std::string family_name(Family f) {
  for (const auto& [name, value] : kFamilies) {
    if (value == f) return name;
  }
  return "?";
}

struct StateArgs {
  std::string family = "pahs";
  std::optional<double> L;
  double c = 2.0;
  int M = 5;
  double eta = 0.5;
  int k = 0;
  double alpha = 1.0;
  int dim = 40;
  int n = 0;
  std::optional<int> fock_dim;

  Family kind() const {
    auto it = kFamilies.find(family);
    if (it == kFamilies.end()) throw CliError{kExitInvalid, "unknown state family '" + family + "'"};
    return it->second;
  }

  double population() const { return L ? *L : pahs_pinned_population(M, eta, c); }

  // Parameters that define the state, keyed by column name.
  std::vector<std::pair<std::string, double>> params() const {
    std::vector<std::pair<std::string, double>> out;
    switch (kind()) {
      case Family::Pahs:
        out = {{"L", population()}, {"M", M}, {"eta", eta}, {"k", k}};
        break;
      case Family::Hypergeometric:
        out = {{"L", population()}, {"M", M}, {"eta", eta}};
        break;
      case Family::Binomial:
        out = {{"M", M}, {"eta", eta}};
        break;
      case Family::Coherent:
        out = {{"alpha", alpha}, {"dim", dim}};
        break;
      case Family::Fock:
        out = {{"dim", fock_dim.value_or(n + 1)}, {"n", n}};
        break;
    }
    // Case-insensitive alphabetical column order.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      std::string x = a.first;
      std::string y = b.first;
      for (auto& ch : x) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      for (auto& ch : y) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      return x < y;
    });
    return out;
  }

  json params_json() const {
    json out = json::object();
    for (const auto& [name, value] : params()) {
      if (name == "M" || name == "k" || name == "n" || name == "dim") {
        out[name] = static_cast<long long>(value);
      } else {
        out[name] = value;
      }
    }
    return out;
  }

  StatePtr build() const {
    pahs_state* raw = nullptr;
    pahs_status st = PAHS_OK;
    switch (kind()) {
      case Family::Pahs: st = pahs_state_photon_added(population(), M, eta, k, &raw); break;
      case Family::Hypergeometric: st = pahs_state_hypergeometric(population(), M, eta, &raw); break;
      case Family::Binomial: st = pahs_state_binomial(M, eta, &raw); break;
      case Family::Coherent: st = pahs_state_coherent(alpha, dim, &raw); break;
      case Family::Fock: st = pahs_state_fock(n, fock_dim.value_or(n + 1), &raw); break;
    }
    check(st, "constructing " + family + " state");
    return StatePtr(raw);
  }

  // Sets a sweepable parameter by name.
  void set(const std::string& name, double value) {
    auto as_int = [&](int& field) {
      if (value != std::floor(value) || std::abs(value) > 1e9) {
        throw CliError{kExitInvalid, name + " must be an integer, got " + format_double(value)};
      }
      field = static_cast<int>(value);
    };
    if (name == "L") {
      L = value;
    } else if (name == "c") {
      c = value;
    } else if (name == "M") {
      as_int(M);
    } else if (name == "eta") {
      eta = value;
    } else if (name == "k") {
      as_int(k);
    } else if (name == "alpha") {
      alpha = value;
    } else if (name == "dim") {
      if (kind() == Family::Fock) {
        int d = 0;
        as_int(d);
        fock_dim = d;
      } else {
        as_int(dim);
      }
    } else if (name == "n") {
      as_int(n);
    } else {
      throw CliError{kExitInvalid, "cannot sweep unknown parameter '" + name + "'"};
    }
  }
};

void add_state_options(CLI::App* app, StateArgs& args) {
  app->add_option("family", args.family, "pahs | hypergeometric | binomial | coherent | fock")
      ->required();
  app->add_option("--L", args.L, "population parameter L (default: c * max{M/eta, M/(1-eta)})");
  app->add_option("--c", args.c, "L-pinning coefficient used when --L is absent")
      ->capture_default_str();
  app->add_option("--M", args.M, "dimension parameter M")->capture_default_str();
  app->add_option("--eta", args.eta, "probability eta in [0, 1]")->capture_default_str();
  app->add_option("--k", args.k, "number of added photons")->capture_default_str();
  app->add_option("--alpha", args.alpha, "real coherent amplitude")->capture_default_str();
  app->add_option("--n", args.n, "Fock level")->capture_default_str();
  app->add_option_function<int>(
      "--dim",
      [&args](int d) {
        args.dim = d;
        args.fock_dim = d;
      },
      "truncation dimension (coherent, fock)");
}

// ---------------------------------------------------------------------------
// Measures

struct MeasureFlags {
  bool mu = true;
  bool a = true;
  bool c = true;
  bool wln = true;
};

MeasureFlags parse_measures(const std::vector<std::string>& names) {
  if (names.empty()) return {};
  MeasureFlags f{false, false, false, false};
  for (const auto& raw : names) {
    std::string n = raw;
    for (auto& ch : n) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (n == "mu") f.mu = true;
    else if (n == "a" || n == "anticlassicality") f.a = true;
    else if (n == "c" || n == "concurrence") f.c = true;
    else if (n == "wln") f.wln = true;
    else if (n == "all") f = {};
    else throw CliError{kExitInvalid, "unknown measure '" + raw + "'"};
  }
  return f;
}

struct QuadArgs {
  std::size_t nodes = 0;
  double tolerance = 0.0;
  double cutoff = 0.0;
  unsigned threads = 0;

  pahs_quadrature_spec spec() const { return {cutoff, nodes, 0, tolerance, threads}; }
};

void add_quad_options(CLI::App* app, QuadArgs& q) {
  app->add_option("--nodes", q.nodes, "WLN quadrature nodes per axis (default 256)");
  app->add_option("--tol", q.tolerance, "WLN node-doubling tolerance (default 1e-4)");
  app->add_option("--cutoff", q.cutoff, "WLN integration radius (default from <n>)");
}

// One evaluated row: ordered (column, text) cells plus JSON payload.
struct Row {
  std::vector<std::pair<std::string, std::string>> cells;
  json doc;
  int exit_code = kExitOk;
  std::string error;
};

Row measure_row(const StateArgs& args, const MeasureFlags& which, const QuadArgs& quad) {
  Row row;
  for (const auto& [name, value] : args.params()) {
    row.cells.emplace_back(name, format_double(value));
  }
  row.doc["family"] = family_name(args.kind());
  row.doc["params"] = args.params_json();

  std::map<std::string, std::string> cols;  // sorted measure + metadata columns
  json measures = json::object();
  json meta = json::object();
  try {
    const StatePtr s = args.build();
    double mean = 0.0;
    check(pahs_mean_photon_number(s.get(), &mean), "mean photon number");
    cols["mean_n"] = format_double(mean);
    measures["mean_n"] = mean;

    if (which.mu) {
      pahs_mu_kind kind = PAHS_MU_FINITE;
      double value = 0.0;
      check(pahs_sps_quality(s.get(), &kind, &value), "mu");
      const std::string text = kind == PAHS_MU_INFINITE    ? "inf"
                               : kind == PAHS_MU_UNDEFINED ? "undefined"
                                                           : format_double(value);
      cols["mu"] = text;
      measures["mu"] = kind == PAHS_MU_FINITE ? json(value) : json(text);
    }
    if (which.a) {
      double a = 0.0;
      double av = 0.0;
      check(pahs_anticlassicality(s.get(), 0, &a), "anticlassicality");
      check(pahs_anticlassicality(s.get(), 1, &av), "anticlassicality");
      cols["anticlassicality"] = format_double(a);
      cols["anticlassicality_with_vacuum"] = format_double(av);
      measures["anticlassicality"] = a;
      measures["anticlassicality_with_vacuum"] = av;
    }
    if (which.c) {
      double conc = 0.0;
      const Family f = args.kind();
      if (f == Family::Pahs || f == Family::Hypergeometric) {
        check(pahs_concurrence_closed_form(args.population(), args.M, args.eta,
                                           f == Family::Pahs ? args.k : 0, &conc),
              "concurrence");
        meta["concurrence_method"] = "closed_form";
      } else {
        check(pahs_concurrence_potential(s.get(), &conc), "concurrence");
        meta["concurrence_method"] = "beamsplitter";
      }
      cols["concurrence"] = format_double(conc);
      measures["concurrence"] = conc;
    }
    if (which.wln) {
      pahs_integral_result r{};
      const pahs_quadrature_spec spec = quad.spec();
      const pahs_status st = pahs_wigner_log_negativity(s.get(), &spec, &r);
      if (st != PAHS_OK && st != PAHS_ERR_NOT_CONVERGED) check(st, "wln");
      cols["wln"] = format_double(r.value);
      cols["wln_converged"] = r.converged ? "1" : "0";
      cols["wln_cutoff"] = format_double(r.cutoff);
      cols["wln_delta"] = format_double(r.delta);
      cols["wln_nodes"] = std::to_string(r.nodes);
      measures["wln"] = r.value;
      meta["wln_converged"] = r.converged != 0;
      meta["wln_cutoff"] = r.cutoff;
      meta["wln_delta"] = r.delta;
      meta["wln_nodes"] = r.nodes;
      meta["wln_log_base"] = "e";
      if (!r.converged) {
        row.exit_code = kExitConvergence;
        row.error = "wln not converged (delta " + format_double(r.delta) + ")";
      }
    }
  } catch (const CliError& e) {
    row.exit_code = e.exit_code;
    row.error = e.message;
  }

  // Fixed measure layout so every row of a sweep has the same columns.
  std::vector<std::string> names = {"anticlassicality", "anticlassicality_with_vacuum",
                                    "concurrence",      "mean_n",
                                    "mu",               "wln",
                                    "wln_converged",    "wln_cutoff",
                                    "wln_delta",        "wln_nodes"};
  for (const auto& name : names) {
    const bool wanted = name == "mean_n" || (name == "mu" && which.mu) ||
                        (name.rfind("anticlass", 0) == 0 && which.a) ||
                        (name == "concurrence" && which.c) ||
                        (name.rfind("wln", 0) == 0 && which.wln);
    if (!wanted) continue;
    auto it = cols.find(name);
    row.cells.emplace_back(name, it == cols.end() ? "" : it->second);
  }
  row.cells.emplace_back("error", row.error);
  row.doc["measures"] = measures;
  row.doc["metadata"] = meta;
  if (!row.error.empty()) row.doc["error"] = row.error;
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  return line + '\n';
}

// ---------------------------------------------------------------------------
// Output

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("PAHS_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitIo, "cannot open '" + path.string() + "' for writing"};
  out << content;
  if (!out) throw CliError{kExitIo, "failed writing '" + path.string() + "'"};
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file(resolve_output(out_path), content);
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_state(const StateArgs& args, const std::string& out_path) {
  const StatePtr s = args.build();
  const std::size_t dim = pahs_state_dim(s.get());
  std::vector<double> re(dim), im(dim), pnd(dim);
  check(pahs_state_amplitudes(s.get(), re.data(), im.data(), dim), "amplitudes");
  check(pahs_photon_distribution(s.get(), pnd.data(), dim), "photon distribution");
  double mean = 0.0;
  check(pahs_mean_photon_number(s.get(), &mean), "mean photon number");

  json doc;
  doc["family"] = family_name(args.kind());
  doc["params"] = args.params_json();
  doc["dim"] = dim;
  doc["amplitudes"] = re;
  if (std::any_of(im.begin(), im.end(), [](double v) { return v != 0.0; })) {
    doc["amplitudes_imag"] = im;
  }
  doc["pnd"] = pnd;
  doc["mean_n"] = mean;
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_measures(const StateArgs& args, const MeasureFlags& which, const QuadArgs& quad,
                 const std::string& format, const std::string& out_path) {
  const Row row = measure_row(args, which, quad);
  if (format == "csv") {
    std::vector<std::string> head, vals;
    for (const auto& [k, v] : row.cells) {
      head.push_back(k);
      vals.push_back(v);
    }
    emit(out_path, csv_line(head) + csv_line(vals));
  } else {
    emit(out_path, row.doc.dump(2) + "\n");
  }
  if (!row.error.empty()) std::cerr << "pahs-cli: " << row.error << "\n";
  return row.exit_code;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // a:b:step expands to an inclusive range
    if (auto colon = item.find(':'); colon != std::string::npos) {
      const auto second = item.find(':', colon + 1);
      if (second == std::string::npos) throw CliError{kExitInvalid, "range needs a:b:step"};
      const double a = std::stod(item.substr(0, colon));
      const double b = std::stod(item.substr(colon + 1, second - colon - 1));
      const double step = std::stod(item.substr(second + 1));
      if (!(step > 0.0)) throw CliError{kExitInvalid, "range step must be positive"};
      const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
      for (long i = 0; i <= count; ++i) out.push_back(a + step * static_cast<double>(i));
    } else if (!item.empty()) {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw CliError{kExitInvalid, "bad sweep value '" + item + "'"};
      out.push_back(v);
    }
  }
  if (out.empty()) throw CliError{kExitInvalid, "sweep needs at least one value"};
  return out;
}

int cmd_sweep(const StateArgs& base, const std::string& param, const std::string& values_text,
              const MeasureFlags& which, QuadArgs quad, unsigned jobs,
              const std::string& out_path) {
  std::vector<double> values;
  try {
    values = parse_values(values_text);
  } catch (const std::invalid_argument&) {
    throw CliError{kExitInvalid, "could not parse --values '" + values_text + "'"};
  }
  base.kind();  // validates the family up front
  std::vector<Row> rows(values.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(values.size())));
  if (workers > 1) quad.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      StateArgs args = base;
      try {
        args.set(param, values[i]);
        rows[i] = measure_row(args, which, quad);
      } catch (const CliError& e) {
        rows[i].exit_code = e.exit_code;
        rows[i].error = e.message;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  // Header from the first row that produced a full column set.
  std::vector<std::string> header = {"sweep_value"};
  const Row* templ = nullptr;
  for (const auto& r : rows) {
    if (!r.cells.empty()) {
      templ = &r;
      break;
    }
  }
  if (templ != nullptr) {
    for (const auto& [k, v] : templ->cells) header.push_back(k);
  } else {
    header.push_back("error");
  }
  std::string csv = csv_line(header);
  int exit_code = kExitOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> line = {format_double(values[i])};
    if (!rows[i].cells.empty()) {
      for (const auto& [k, v] : rows[i].cells) line.push_back(v);
    } else {
      line.resize(header.size());
      line.back() = rows[i].error;
    }
    csv += csv_line(line);
    // Invalid rows dominate convergence failures; all other rows are still written.
    if (rows[i].exit_code != kExitOk && exit_code != kExitInvalid) exit_code = rows[i].exit_code;
    if (!rows[i].error.empty()) {
      std::cerr << "pahs-cli: row " << i << " (" << param << "=" << format_double(values[i])
                << "): " << rows[i].error << "\n";
    }
  }
  emit(out_path, csv);
  return exit_code;
}

struct GridArgs {
  double x_min = -4.0, x_max = 4.0, p_min = -4.0, p_max = 4.0;
  std::size_t nx = 101, np = 101;
  std::string format = "csv";
};

int cmd_wigner(const StateArgs& args, const GridArgs& g, const QuadArgs& quad,
               const std::string& out_path) {
  if (g.nx < 2 || g.np < 2 || !(g.x_max > g.x_min) || !(g.p_max > g.p_min)) {
    throw CliError{kExitInvalid, "grid needs nx, np >= 2 and increasing bounds"};
  }
  const StatePtr s = args.build();
  std::vector<double> values(g.nx * g.np);
  check(pahs_wigner_grid(s.get(), g.x_min, g.x_max, g.nx, g.p_min, g.p_max, g.np, values.data()),
        "wigner grid");
  auto xs = [&](std::size_t i) { return g.x_min + (g.x_max - g.x_min) * double(i) / double(g.nx - 1); };
  auto ps = [&](std::size_t j) { return g.p_min + (g.p_max - g.p_min) * double(j) / double(g.np - 1); };

  // Trapezoid estimate of the integral over the sampled window.
  const double dx = (g.x_max - g.x_min) / double(g.nx - 1);
  const double dp = (g.p_max - g.p_min) / double(g.np - 1);
  double grid_integral = 0.0;
  for (std::size_t i = 0; i < g.nx; ++i) {
    const double wx = (i == 0 || i + 1 == g.nx) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < g.np; ++j) {
      const double wp = (j == 0 || j + 1 == g.np) ? 0.5 : 1.0;
      grid_integral += wx * wp * values[i * g.np + j];
    }
  }
  grid_integral *= dx * dp;

  pahs_integral_result full{};
  const pahs_quadrature_spec spec = quad.spec();
  const pahs_status st = pahs_wigner_integral(s.get(), &spec, &full);
  if (st != PAHS_OK && st != PAHS_ERR_NOT_CONVERGED) check(st, "wigner integral");

  json header;
  header["family"] = family_name(args.kind());
  header["params"] = args.params_json();
  header["x_min"] = g.x_min;
  header["x_max"] = g.x_max;
  header["p_min"] = g.p_min;
  header["p_max"] = g.p_max;
  header["nx"] = g.nx;
  header["np"] = g.np;
  header["layout"] = "row-major, index ix * np + ip";
  header["min"] = *std::min_element(values.begin(), values.end());
  header["max"] = *std::max_element(values.begin(), values.end());
  header["integral_grid"] = grid_integral;
  header["integral_quadrature"] = full.value;
  header["integral_quadrature_delta"] = full.delta;
  header["integral_quadrature_converged"] = full.converged != 0;

  if (g.format == "json") {
    json doc = header;
    doc["values"] = values;
    emit(out_path, doc.dump() + "\n");
  } else {
    std::string csv = "x,p,W\n";
    csv.reserve(values.size() * 64);
    for (std::size_t i = 0; i < g.nx; ++i) {
      for (std::size_t j = 0; j < g.np; ++j) {
        csv += format_double(xs(i));
        csv += ',';
        csv += format_double(ps(j));
        csv += ',';
        csv += format_double(values[i * g.np + j]);
        csv += '\n';
      }
    }
    emit(out_path, csv);
    if (!out_path.empty() && out_path != "-") {
      write_file(resolve_output(out_path + ".json"), header.dump(2) + "\n");
    } else {
      std::cerr << header.dump(2) << "\n";
    }
  }
  return full.converged ? kExitOk : kExitConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-added hypergeometric states: construction and nonclassicality measures"};
  app.require_subcommand(1);

  StateArgs state_args;
  std::string state_out;
  auto* state_cmd = app.add_subcommand("state", "print amplitudes, photon distribution and <n> as JSON");
  add_state_options(state_cmd, state_args);
  state_cmd->add_option("--out", state_out, "output file (default stdout)");

  StateArgs meas_args;
  std::vector<std::string> meas_names;
  QuadArgs meas_quad;
  std::string meas_format = "json";
  std::string meas_out;
  auto* meas_cmd = app.add_subcommand("measures", "evaluate mu, A, C and WLN for one state");
  add_state_options(meas_cmd, meas_args);
  meas_cmd->add_option("--measures", meas_names, "subset of mu,A,C,WLN (default all)")->delimiter(',');
  meas_cmd->add_option("--format", meas_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  meas_cmd->add_option("--out", meas_out, "output file (default stdout)");
  add_quad_options(meas_cmd, meas_quad);

  StateArgs sweep_args;
  std::string sweep_param;
  std::string sweep_values;
  std::vector<std::string> sweep_names;
  QuadArgs sweep_quad;
  unsigned jobs = 1;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate measures over a list of parameter values (CSV)");
  add_state_options(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--param", sweep_param, "swept parameter: L c M eta k alpha dim n")->required();
  sweep_cmd->add_option("--values", sweep_values, "comma list; a:b:step ranges allowed")->required();
  sweep_cmd->add_option("--measures", sweep_names, "subset of mu,A,C,WLN (default all)")->delimiter(',');
  sweep_cmd->add_option("--jobs", jobs, "rows evaluated concurrently")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "output CSV (default stdout)");
  add_quad_options(sweep_cmd, sweep_quad);

  StateArgs wig_args;
  GridArgs grid;
  QuadArgs wig_quad;
  std::string wig_out;
  auto* wig_cmd = app.add_subcommand("wigner", "sample W(x, p) on a grid (CSV x,p,W + JSON sidecar)");
  add_state_options(wig_cmd, wig_args);
  wig_cmd->add_option("--xmin", grid.x_min)->capture_default_str();
  wig_cmd->add_option("--xmax", grid.x_max)->capture_default_str();
  wig_cmd->add_option("--pmin", grid.p_min)->capture_default_str();
  wig_cmd->add_option("--pmax", grid.p_max)->capture_default_str();
  wig_cmd->add_option("--nx", grid.nx)->capture_default_str();
  wig_cmd->add_option("--np", grid.np)->capture_default_str();
  wig_cmd->add_option("--format", grid.format, "csv (with <out>.json sidecar) | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  wig_cmd->add_option("--out", wig_out, "output file (default stdout)");
  add_quad_options(wig_cmd, wig_quad);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*state_cmd) return cmd_state(state_args, state_out);
    if (*meas_cmd) {
      return cmd_measures(meas_args, parse_measures(meas_names), meas_quad, meas_format, meas_out);
    }
    if (*sweep_cmd) {
      return cmd_sweep(sweep_args, sweep_param, sweep_values, parse_measures(sweep_names),
                       sweep_quad, jobs, sweep_out);
    }
    if (*wig_cmd) return cmd_wigner(wig_args, grid, wig_quad, wig_out);
  } catch (const CliError& e) {
    std::cerr << "pahs-cli: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "pahs-cli: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
