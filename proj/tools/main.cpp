// Command-line front end for the virtual-qubit thermal machine library.
// Links only the public C interface (vqtherm.h).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqtherm.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 2 malformed invocation (bad flag or flag value),
// 3 invalid parameters or document content, 4 numerical solver failure.
constexpr int kUsageExit = 2;
constexpr int kValidationExit = 3;
constexpr int kSolverExit = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void check(vqt_status status) {
  if (status == VQT_OK) return;
  die(status == VQT_ERR_SOLVER ? kSolverExit : kValidationExit,
      vqt_last_error());
}

struct Cycle {
  vqt_cycle* ptr = nullptr;
  Cycle() = default;
  Cycle(const Cycle&) = delete;
  Cycle& operator=(const Cycle&) = delete;
  ~Cycle() { vqt_cycle_free(ptr); }
};

struct Multi {
  vqt_multi* ptr = nullptr;
  Multi() = default;
  Multi(const Multi&) = delete;
  Multi& operator=(const Multi&) = delete;
  ~Multi() { vqt_multi_free(ptr); }
};

// 12 significant digits; negative zero normalized away for stable output.
std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string text = buf;
  return text == "-0" ? "0" : text;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render(const Table& table, bool as_json) {
  if (as_json) {
    json out;
    out["columns"] = table.columns;
    out["rows"] = table.rows;
    return out.dump(2) + "\n";
  }
  std::string text;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) text += ',';
    text += table.columns[i];
  }
  text += '\n';
  for (const std::vector<double>& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i != 0) text += ',';
      text += format_number(row[i]);
    }
    text += '\n';
  }
  return text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) die(kValidationExit, "cannot open output file: " + out_path);
  file << text;
  if (!file.good())
    die(kValidationExit, "failed writing output file: " + out_path);
}

// ---- shared flag bundles ----

struct EnvelopeOpts {
  std::string mode = "fridge";
  int n = 3;
  double e_v = 1.0;
  double e_max = 2.0;
  double beta_c = 0.2;
  double beta_h = 0.05;
};

int mode_value(const std::string& mode) {
  return mode == "engine" ? VQT_MODE_ENGINE : VQT_MODE_FRIDGE;
}

vqt_design_params to_params(const EnvelopeOpts& o) {
  return vqt_design_params{o.n,      o.e_v,    o.e_max,
                           o.beta_c, o.beta_h, mode_value(o.mode)};
}

void add_envelope_flags(CLI::App* cmd, EnvelopeOpts& o) {
  cmd->add_option("--mode", o.mode, "machine mode (fridge|engine)")
      ->check(CLI::IsMember({"fridge", "engine"}))
      ->capture_default_str();
  cmd->add_option("--ev", o.e_v, "virtual-qubit gap E_v")
      ->capture_default_str();
  cmd->add_option("--emax", o.e_max, "largest thermally couplable gap E_max")
      ->capture_default_str();
  cmd->add_option("--bc", o.beta_c, "cold bath inverse temperature")
      ->capture_default_str();
  cmd->add_option("--bh", o.beta_h, "hot bath inverse temperature")
      ->capture_default_str();
}

std::pair<int, int> parse_range(const std::string& text) {
  size_t colon = text.find(':');
  auto bad = [&text]() {
    die(kUsageExit, "--range must be a:b with integers a <= b (got \"" + text +
                        "\")");
  };
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    bad();
  int lo = 0, hi = 0;
  try {
    size_t used = 0;
    lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) bad();
    std::string tail = text.substr(colon + 1);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) bad();
  } catch (const std::exception&) {
    bad();
  }
  if (lo > hi) bad();
  return {lo, hi};
}

// ---- design ----

struct DesignOpts {
  EnvelopeOpts env;
  bool as_json = false;
  std::string out_path;
};

void run_design(const DesignOpts& o) {
  vqt_design_params p = to_params(o.env);
  Cycle cycle;
  check(vqt_cycle_optimal(&p, &cycle.ptr));
  int levels = vqt_cycle_levels(cycle.ptr);
  std::vector<double> energies(static_cast<size_t>(levels));
  std::vector<double> betas(static_cast<size_t>(levels) - 1);
  check(vqt_cycle_energies(cycle.ptr, energies.data()));
  check(vqt_cycle_couplings(cycle.ptr, betas.data()));
  double n_v = 0.0, z_v = 0.0, beta_v = 0.0;
  check(vqt_cycle_virtual_qubit(cycle.ptr, nullptr, &n_v, &z_v, &beta_v));
  int mode = 0;
  double eta = 0.0, heat_hot = 0.0, heat_cold = 0.0, work = 0.0;
  check(vqt_cycle_efficiency(cycle.ptr, &mode, &eta, &heat_hot, &heat_cold,
                             &work));

  if (o.as_json) {
    // A machine document, directly consumable by `eval`.
    json doc;
    doc["kind"] = "cycle";
    doc["energies"] = energies;
    json couplings = json::array();
    for (double b : betas)
      couplings.push_back(b == p.beta_c ? "cold" : "hot");
    doc["couplings"] = couplings;
    doc["baths"] = {{"cold", p.beta_c}, {"hot", p.beta_h}};
    doc["design"] = {{"n", p.n},           {"e_v", p.e_v},
                     {"e_max", p.e_max},   {"beta_c", p.beta_c},
                     {"beta_h", p.beta_h}, {"mode", o.env.mode}};
    doc["result"] = {{"beta_v", beta_v},       {"z_v", z_v},
                     {"n_v", n_v},             {"eta", eta},
                     {"heat_hot", heat_hot},   {"heat_cold", heat_cold},
                     {"work_or_cool", work}};
    emit(doc.dump(2) + "\n", o.out_path);
    return;
  }

  Table table;
  table.columns = {"transition", "gap", "bath_beta", "beta_v",
                   "z_v",        "n_v", "eta"};
  for (int j = 0; j + 1 < levels; ++j)
    table.rows.push_back({static_cast<double>(j + 1),
                          energies[static_cast<size_t>(j) + 1] -
                              energies[static_cast<size_t>(j)],
                          betas[static_cast<size_t>(j)], beta_v, z_v, n_v,
                          eta});
  emit(render(table, false), o.out_path);
}

// ---- scan ----

struct ScanOpts {
  std::string family;
  EnvelopeOpts env;
  std::string range_text;
  int n_point = 0;
  int k_point = 0;
  bool as_json = false;
  std::string out_path;
};

void run_scan(const ScanOpts& o) {
  bool is_concat = o.family == "concat";
  if (o.n_point > 0 && is_concat)
    die(kUsageExit, "--n applies to single/multi scans; use --k for concat");
  if (o.k_point > 0 && !is_concat)
    die(kUsageExit, "--k applies to concat scans; use --n");

  int lo = 0, hi = 0;
  if (!o.range_text.empty()) {
    std::tie(lo, hi) = parse_range(o.range_text);
  } else if (o.n_point > 0 || o.k_point > 0) {
    lo = hi = is_concat ? o.k_point : o.n_point;
  } else if (o.family == "single") {
    lo = 3, hi = 10;
  } else if (o.family == "multi") {
    lo = 4, hi = 20;
  } else {
    lo = 1, hi = 6;
  }

  vqt_design_params p = to_params(o.env);
  Table table;

  if (o.family == "single") {
    if (lo < 3) die(kUsageExit, "single-cycle scan needs n >= 3");
    table.columns = {"n", "beta_v", "z_v", "n_v"};
    for (int n = lo; n <= hi; ++n) {
      p.n = n;
      Cycle cycle;
      check(vqt_cycle_optimal(&p, &cycle.ptr));
      double n_v = 0.0, z_v = 0.0, beta_v = 0.0;
      check(vqt_cycle_virtual_qubit(cycle.ptr, nullptr, &n_v, &z_v, &beta_v));
      table.rows.push_back({static_cast<double>(n), beta_v, z_v, n_v});
    }
  } else if (o.family == "multi") {
    if (lo < 1) die(kUsageExit, "multi-cycle scan needs a positive range");
    table.columns = {"n", "beta_v", "z_v", "n_v"};
    int start = lo + (lo % 2);  // the family lives on even dimensions >= 4
    if (start < 4) start = 4;
    for (int m = start; m <= hi; m += 2) {
      p.n = m / 2 + 1;
      Cycle base;
      check(vqt_cycle_optimal(&p, &base.ptr));
      Multi multi;
      check(vqt_multi_amplify(base.ptr, &multi.ptr));
      double beta_v = 0.0, norm = 0.0, bias = 0.0;
      check(vqt_multi_report(multi.ptr, &beta_v, nullptr, &norm, &bias));
      table.rows.push_back({static_cast<double>(m), beta_v, bias, norm});
    }
    if (table.rows.empty())
      die(kValidationExit, "range contains no even dimension >= 4");
  } else {
    if (lo < 1) die(kUsageExit, "concat scan needs k >= 1");
    table.columns = {"k", "beta_v", "z_v", "n_v"};
    vqt_concat_params cp{0,
                         p.e_v,
                         p.e_max,
                         p.beta_c,
                         p.beta_h,
                         p.mode,
                         p.mode == VQT_MODE_FRIDGE ? VQT_PLACEMENT_UPPER
                                                   : VQT_PLACEMENT_LOWER};
    for (int k = lo; k <= hi; ++k) {
      cp.k = k;
      double beta_v = 0.0, n_v = 0.0, z_v = 0.0;
      check(vqt_concat_beta(&cp, &beta_v));
      check(vqt_concat_norm(&cp, &n_v));
      check(vqt_bias_from_beta(beta_v, cp.e_v, &z_v));
      table.rows.push_back({static_cast<double>(k), beta_v, z_v, n_v});
    }
  }
  emit(render(table, o.as_json), o.out_path);
}

// ---- dynamics ----

struct DynamicsOpts {
  EnvelopeOpts env;
  std::string range_text;
  double tau_s = std::numeric_limits<double>::quiet_NaN();
  double tau_beta = 1.0;
  double tau_swap = 1.0;
  double beta_env = std::numeric_limits<double>::quiet_NaN();
  bool optimal = false;
  bool as_json = false;
  std::string out_path;
};

void run_dynamics(const DynamicsOpts& o) {
  vqt_design_params p = to_params(o.env);
  int lo = 3, hi = 15;
  if (!o.range_text.empty()) std::tie(lo, hi) = parse_range(o.range_text);
  if (lo < 3) die(kUsageExit, "dynamics scan needs n >= 3");

  std::vector<double> taus;
  if (std::isnan(o.tau_s))
    taus = {1.0, 10.0, 100.0};
  else
    taus = {o.tau_s};

  vqt_dynamics_config config;
  vqt_dynamics_config_default(&config, &p);
  config.tau_beta = o.tau_beta;
  config.tau_swap = o.tau_swap;
  if (!std::isnan(o.beta_env)) config.beta_env = o.beta_env;

  Table table;
  if (o.optimal) {
    if (hi < 4) die(kUsageExit, "--optimal needs a range upper bound >= 4");
    table.columns = {"tau_s", "n_star"};
    for (double tau : taus) {
      config.tau_s = tau;
      int n_star = 0;
      vqt_status status = vqt_optimal_length(&config, &p, hi, &n_star);
      if (status != VQT_OK)
        die(status == VQT_ERR_SOLVER ? kSolverExit : kValidationExit,
            "length scan failed at tau_s=" + format_number(tau) + ": " +
                vqt_last_error());
      table.rows.push_back({tau, static_cast<double>(n_star)});
    }
  } else {
    table.columns = {"n", "tau_s", "beta_s", "beta_vq"};
    for (int n = lo; n <= hi; ++n) {
      p.n = n;
      Cycle cycle;
      check(vqt_cycle_optimal(&p, &cycle.ptr));
      for (double tau : taus) {
        config.tau_s = tau;
        double beta_s = 0.0, beta_vq = 0.0;
        vqt_status status =
            vqt_dynamics_steady(cycle.ptr, &config, nullptr, &beta_s, &beta_vq);
        if (status != VQT_OK)
          die(status == VQT_ERR_SOLVER ? kSolverExit : kValidationExit,
              "dynamics solve failed at n=" + std::to_string(n) + ", tau_s=" +
                  format_number(tau) + ": " + vqt_last_error());
        table.rows.push_back(
            {static_cast<double>(n), tau, beta_s, beta_vq});
      }
    }
  }
  emit(render(table, o.as_json), o.out_path);
}

// ---- eval ----

struct EvalOpts {
  std::string path;
  bool as_json = false;
  std::string out_path;
};

json load_document(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) die(kValidationExit, "cannot open document: " + path);
  std::string text((std::istreambuf_iterator<char>(file)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    die(kValidationExit, std::string("document parse error: ") + e.what());
  }
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (item.key() == name) {
        known = true;
        break;
      }
    if (!known)
      die(kValidationExit,
          "unknown field \"" +
              (where.empty() ? item.key() : where + "." + item.key()) + "\"");
  }
}

double field_number(const json& value, const std::string& field) {
  if (!value.is_number())
    die(kValidationExit, "field \"" + field + "\" must be a number");
  return value.get<double>();
}

int field_integer(const json& value, const std::string& field) {
  if (!value.is_number_integer())
    die(kValidationExit, "field \"" + field + "\" must be an integer");
  return value.get<int>();
}

int field_mode(const json& design) {
  if (!design.contains("mode")) return VQT_MODE_FRIDGE;
  const json& value = design["mode"];
  if (!value.is_string() ||
      (value != "fridge" && value != "engine"))
    die(kValidationExit,
        "field \"design.mode\" must be \"fridge\" or \"engine\"");
  return mode_value(value.get<std::string>());
}

vqt_design_params parse_cycle_design(const json& design, int levels) {
  reject_unknown(design, "design",
                 {"n", "e_v", "e_max", "beta_c", "beta_h", "mode"});
  vqt_design_params p;
  vqt_design_params_default(&p);
  p.n = levels;
  if (design.contains("n")) {
    int n = field_integer(design["n"], "design.n");
    if (n != levels)
      die(kValidationExit, "field \"design.n\" (" + std::to_string(n) +
                               ") does not match the number of energies (" +
                               std::to_string(levels) + ")");
  }
  if (design.contains("e_v")) p.e_v = field_number(design["e_v"], "design.e_v");
  if (design.contains("e_max"))
    p.e_max = field_number(design["e_max"], "design.e_max");
  if (design.contains("beta_c"))
    p.beta_c = field_number(design["beta_c"], "design.beta_c");
  if (design.contains("beta_h"))
    p.beta_h = field_number(design["beta_h"], "design.beta_h");
  p.mode = field_mode(design);
  return p;
}

vqt_concat_params parse_concat_design(const json& design) {
  reject_unknown(design, "design",
                 {"k", "e_v", "e_max", "beta_c", "beta_h", "mode",
                  "placement"});
  vqt_concat_params cp;
  vqt_concat_params_default(&cp);
  if (design.contains("k")) cp.k = field_integer(design["k"], "design.k");
  if (design.contains("e_v"))
    cp.e_v = field_number(design["e_v"], "design.e_v");
  if (design.contains("e_max"))
    cp.e_max = field_number(design["e_max"], "design.e_max");
  if (design.contains("beta_c"))
    cp.beta_c = field_number(design["beta_c"], "design.beta_c");
  if (design.contains("beta_h"))
    cp.beta_h = field_number(design["beta_h"], "design.beta_h");
  cp.mode = field_mode(design);
  if (design.contains("placement")) {
    const json& value = design["placement"];
    if (!value.is_string() || (value != "lower" && value != "upper"))
      die(kValidationExit,
          "field \"design.placement\" must be \"lower\" or \"upper\"");
    cp.placement =
        value == "upper" ? VQT_PLACEMENT_UPPER : VQT_PLACEMENT_LOWER;
  } else {
    // Recommended placement: the one whose norm approaches 1 with depth.
    cp.placement = cp.mode == VQT_MODE_FRIDGE ? VQT_PLACEMENT_UPPER
                                              : VQT_PLACEMENT_LOWER;
  }
  return cp;
}

void run_eval(const EvalOpts& o) {
  json doc = load_document(o.path);
  if (!doc.is_object()) die(kValidationExit, "document root must be an object");
  reject_unknown(doc, "",
                 {"kind", "energies", "couplings", "baths", "design",
                  "dynamics", "result"});
  if (!doc.contains("kind") || !doc["kind"].is_string())
    die(kValidationExit,
        "field \"kind\" must be one of \"cycle\", \"multi\", \"concat\"");
  std::string kind = doc["kind"].get<std::string>();
  if (kind != "cycle" && kind != "multi" && kind != "concat")
    die(kValidationExit, "field \"kind\" must be one of \"cycle\", \"multi\", "
                         "\"concat\" (got \"" +
                             kind + "\")");

  // The dynamics block configures time-dependent tooling; eval validates it
  // and reports statics only. "result" blocks (emitted by design --json) are
  // accepted and ignored.
  if (doc.contains("dynamics")) {
    const json& dyn = doc["dynamics"];
    if (!dyn.is_object())
      die(kValidationExit, "field \"dynamics\" must be an object");
    reject_unknown(dyn, "dynamics",
                   {"tau_beta", "tau_s", "tau_swap", "beta_env"});
    for (const auto& item : dyn.items())
      field_number(item.value(), "dynamics." + item.key());
  }

  std::vector<double> populations;
  double beta_v = 0.0, z_v = 0.0, n_v = 0.0;

  if (kind == "concat") {
    for (const char* name : {"energies", "couplings", "baths"})
      if (doc.contains(name))
        die(kValidationExit, "field \"" + std::string(name) +
                                 "\" does not apply to kind \"concat\"");
    if (!doc.contains("design") || !doc["design"].is_object())
      die(kValidationExit,
          "kind \"concat\" requires a \"design\" object with at least k");
    vqt_concat_params cp = parse_concat_design(doc["design"]);
    if (cp.k < 1 || cp.k > 1000000)
      die(kValidationExit, "field \"design.k\" must be in [1, 1000000]");
    populations.resize(3 * static_cast<size_t>(cp.k));
    check(vqt_concat_steady(&cp, populations.data()));
    check(vqt_concat_beta(&cp, &beta_v));
    check(vqt_concat_norm(&cp, &n_v));
    check(vqt_bias_from_beta(beta_v, cp.e_v, &z_v));
  } else {
    for (const char* name : {"energies", "couplings", "baths"})
      if (!doc.contains(name))
        die(kValidationExit, "kind \"" + kind + "\" requires field \"" +
                                 std::string(name) + "\"");
    const json& energies_json = doc["energies"];
    if (!energies_json.is_array() || energies_json.empty())
      die(kValidationExit, "field \"energies\" must be a non-empty array");
    std::vector<double> energies;
    for (size_t i = 0; i < energies_json.size(); ++i)
      energies.push_back(field_number(energies_json[i],
                                      "energies[" + std::to_string(i) + "]"));

    const json& baths = doc["baths"];
    if (!baths.is_object() || baths.empty())
      die(kValidationExit, "field \"baths\" must be a non-empty object");
    for (const auto& item : baths.items())
      field_number(item.value(), "baths." + item.key());

    const json& couplings = doc["couplings"];
    if (!couplings.is_array())
      die(kValidationExit, "field \"couplings\" must be an array");
    if (couplings.size() + 1 != energies.size())
      die(kValidationExit,
          "field \"couplings\" must name one bath per consecutive transition "
          "(" +
              std::to_string(energies.size() - 1) + " expected, got " +
              std::to_string(couplings.size()) + ")");
    std::vector<double> betas;
    for (size_t i = 0; i < couplings.size(); ++i) {
      const std::string field = "couplings[" + std::to_string(i) + "]";
      if (!couplings[i].is_string())
        die(kValidationExit, "field \"" + field + "\" must be a bath name");
      std::string name = couplings[i].get<std::string>();
      if (!baths.contains(name))
        die(kValidationExit,
            "field \"" + field + "\": undefined bath \"" + name + "\"");
      betas.push_back(baths[name].get<double>());
    }

    Cycle cycle;
    check(vqt_cycle_create(energies.data(), static_cast<int>(energies.size()),
                           betas.data(), &cycle.ptr));
    if (doc.contains("design")) {
      if (!doc["design"].is_object())
        die(kValidationExit, "field \"design\" must be an object");
      vqt_design_params p = parse_cycle_design(
          doc["design"], static_cast<int>(energies.size()));
      check(vqt_cycle_check(cycle.ptr, &p));
    }

    if (kind == "cycle") {
      populations.resize(energies.size());
      check(vqt_cycle_steady_state(cycle.ptr, populations.data()));
      check(vqt_cycle_virtual_qubit(cycle.ptr, nullptr, &n_v, &z_v, &beta_v));
    } else {
      Multi multi;
      check(vqt_multi_amplify(cycle.ptr, &multi.ptr));
      populations.resize(static_cast<size_t>(vqt_multi_levels(multi.ptr)));
      check(vqt_multi_steady_state(multi.ptr, populations.data()));
      check(vqt_multi_report(multi.ptr, &beta_v, nullptr, &n_v, &z_v));
    }
  }

  Table table;
  table.columns = {"level", "population", "beta_v", "z_v", "n_v"};
  for (size_t i = 0; i < populations.size(); ++i)
    table.rows.push_back(
        {static_cast<double>(i + 1), populations[i], beta_v, z_v, n_v});
  emit(render(table, o.as_json), o.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilevel autonomous thermal machines via virtual qubits"};
  app.require_subcommand(1);

  DesignOpts design_opts;
  CLI::App* design_cmd = app.add_subcommand(
      "design", "emit the optimal cycle for a resource envelope");
  add_envelope_flags(design_cmd, design_opts.env);
  design_cmd->add_option("--n", design_opts.env.n, "cycle length (levels)")
      ->check(CLI::Range(3, 1000000))
      ->capture_default_str();
  design_cmd->add_flag("--json", design_opts.as_json,
                       "emit a machine document instead of a table");
  design_cmd->add_option("--out", design_opts.out_path,
                         "write output to a file instead of stdout");

  ScanOpts scan_opts;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "sweep a machine family (single | multi | concat)");
  scan_cmd
      ->add_option("family", scan_opts.family,
                   "machine family: single, multi, or concat")
      ->required()
      ->check(CLI::IsMember({"single", "multi", "concat"}));
  add_envelope_flags(scan_cmd, scan_opts.env);
  CLI::Option* scan_range = scan_cmd->add_option(
      "--range", scan_opts.range_text,
      "index range a:b (single/multi: levels; concat: stages)");
  scan_cmd->add_option("--n", scan_opts.n_point, "single point (levels)")
      ->excludes(scan_range);
  scan_cmd->add_option("--k", scan_opts.k_point, "single point (stages)")
      ->excludes(scan_range);
  scan_cmd->add_flag("--json", scan_opts.as_json, "structured output");
  scan_cmd->add_option("--out", scan_opts.out_path,
                       "write output to a file instead of stdout");

  DynamicsOpts dynamics_opts;
  CLI::App* dynamics_cmd = app.add_subcommand(
      "dynamics", "steady-state cooling of an external qubit vs cycle length");
  add_envelope_flags(dynamics_cmd, dynamics_opts.env);
  dynamics_cmd->add_option("--range", dynamics_opts.range_text,
                           "cycle length range a:b (default 3:15)");
  dynamics_cmd->add_option("--tau-s", dynamics_opts.tau_s,
                           "system-environment timescale (default: sweep "
                           "1, 10, 100)");
  dynamics_cmd
      ->add_option("--tau-beta", dynamics_opts.tau_beta,
                   "thermal-coupling timescale")
      ->capture_default_str();
  dynamics_cmd
      ->add_option("--tau-swap", dynamics_opts.tau_swap, "swap timescale")
      ->capture_default_str();
  dynamics_cmd->add_option("--beta-env", dynamics_opts.beta_env,
                           "environment inverse temperature (default: bc)");
  dynamics_cmd->add_flag("--optimal", dynamics_opts.optimal,
                         "report the best cycle length per tau_s");
  dynamics_cmd->add_flag("--json", dynamics_opts.as_json, "structured output");
  dynamics_cmd->add_option("--out", dynamics_opts.out_path,
                           "write output to a file instead of stdout");

  EvalOpts eval_opts;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a machine document");
  eval_cmd->add_option("document", eval_opts.path, "machine document path")
      ->required();
  eval_cmd->add_flag("--json", eval_opts.as_json, "structured output");
  eval_cmd->add_option("--out", eval_opts.out_path,
                       "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  }

  try {
    if (design_cmd->parsed()) run_design(design_opts);
    if (scan_cmd->parsed()) run_scan(scan_opts);
    if (dynamics_cmd->parsed()) run_dynamics(dynamics_opts);
    if (eval_cmd->parsed()) run_eval(eval_opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
