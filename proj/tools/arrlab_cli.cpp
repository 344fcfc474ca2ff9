// Command-line front-end. Links only the public C API so it doubles as a
// living example of driving the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrlab/arrlab.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write file '" + path + "'");
  out << content;
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { arrlab_string_free(value); }
  std::string str() const { return value == nullptr ? std::string() : value; }
};

struct OwnedArrangement {
  arrlab_arrangement* handle = nullptr;
  ~OwnedArrangement() { arrlab_arrangement_free(handle); }
};

struct OwnedMeasures {
  std::vector<arrlab_measure*> handles;
  ~OwnedMeasures() {
    for (arrlab_measure* h : handles) arrlab_measure_free(h);
  }
  std::vector<const arrlab_measure*> view() const {
    return {handles.begin(), handles.end()};
  }
};

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = arrlab_last_error();
  if (detail != nullptr && detail[0] != '\0') std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  std::exit(1);
}

void require_ok(arrlab_status status, const std::string& context) {
  if (status != ARRLAB_OK) die(context);
}

OwnedMeasures load_measures(const std::vector<std::string>& paths) {
  OwnedMeasures measures;
  for (const std::string& path : paths) {
    arrlab_measure* handle = nullptr;
    require_ok(arrlab_measure_parse_csv(read_file(path).c_str(), &handle),
               "parsing measure '" + path + "'");
    measures.handles.push_back(handle);
  }
  return measures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrlab: subspace arrangements, complement Betti numbers, "
               "equivariant-map obstruction checks, and fan mass partitions"};
  app.require_subcommand(1);

  // ---- arr -----------------------------------------------------------------
  CLI::App* arr = app.add_subcommand("arr", "operations on arrangement files");
  arr->require_subcommand(1);

  std::string betti_file, betti_field = "q";
  CLI::App* betti = arr->add_subcommand("betti", "Betti numbers of the complement");
  betti->add_option("file", betti_file, "arrangement JSON")->required();
  betti->add_option("--field", betti_field, "q or f:<p>")->capture_default_str();

  std::string poset_file, poset_dot_out;
  CLI::App* poset = arr->add_subcommand("poset", "intersection poset as DOT");
  poset->add_option("file", poset_file, "arrangement JSON")->required();
  poset->add_option("--dot", poset_dot_out, "output DOT path (default: stdout)");

  std::string blowup_file, blowup_choice = "auto", blowup_out;
  CLI::App* blowup = arr->add_subcommand("blowup", "blow up the arrangement");
  blowup->add_option("file", blowup_file, "arrangement JSON")->required();
  blowup->add_option("--choice", blowup_choice, "auto or equivariant")
      ->capture_default_str();
  blowup->add_option("--out", blowup_out, "output arrangement JSON path");

  std::string check_file, check_field = "f:2";
  int check_connectivity = 2;
  bool check_reduce = false;
  CLI::App* check = arr->add_subcommand("check", "hypothesis check for the "
                                                 "equivariant-map obstruction");
  check->add_option("file", check_file, "arrangement JSON with a group")->required();
  check->add_option("--field", check_field, "q or f:<p>")->capture_default_str();
  check->add_option("--connectivity", check_connectivity, "n with H^i(X)=0, 1<=i<=n")
      ->required();
  check->add_flag("--reduce", check_reduce, "restrict to minimal-codimension members");

  // ---- instances -----------------------------------------------------------
  CLI::App* instances = app.add_subcommand("instances", "bundled arrangements");
  instances->require_subcommand(1);
  std::string emit_name, emit_out, emit_ration;
  int emit_n = 0, emit_j = 0, emit_k = 0;
  CLI::App* emit = instances->add_subcommand("emit", "write an instance as JSON");
  emit->add_option("name", emit_name,
                   "example_12 | example_3_1 | example_3_2 | test_arrangement_B | "
                   "test_arrangement_A")
      ->required();
  emit->add_option("--n", emit_n, "parameter n (example_3_1)");
  emit->add_option("--j", emit_j, "number of measures (test arrangements)");
  emit->add_option("--k", emit_k, "redundant check: ration must have 2k parts");
  emit->add_option("--ration", emit_ration, "comma list a1,...,a2k");
  emit->add_option("--out", emit_out, "output path (default: stdout)");

  // ---- fan -------------------------------------------------------------
  CLI::App* fan = app.add_subcommand("fan", "fan mass partitions");
  fan->require_subcommand(1);

  std::string solve_kind = "fan", solve_ration, solve_out, solve_report_out;
  std::vector<std::string> solve_measures;
  std::vector<double> solve_sigmas;
  unsigned long long solve_seed = 1729;
  int solve_restarts = 64, solve_designated = 0;
  long solve_max_evals = 200000;
  double solve_tol = 1e-3;
  CLI::App* solve = fan->add_subcommand("solve", "find an alpha-partition");
  solve->add_option("--kind", solve_kind, "fan or arrangement")->capture_default_str();
  solve->add_option("--ration", solve_ration, "comma list a1,...,a2k")->required();
  solve->add_option("--measure", solve_measures, "measure CSV (repeatable)")
      ->required()
      ->expected(-1);
  solve->add_option("--seed", solve_seed, "RNG seed")->capture_default_str();
  solve->add_option("--restarts", solve_restarts, "multistart count")
      ->capture_default_str();
  solve->add_option("--tol", solve_tol, "pass tolerance")->capture_default_str();
  solve->add_option("--sigma-schedule", solve_sigmas,
                    "kernel widths, annealed in order (default 0.2 0.05 0.0125)");
  solve->add_option("--max-evals", solve_max_evals, "residual evaluations per restart")
      ->capture_default_str();
  solve->add_option("--designated", solve_designated,
                    "index of the measure receiving the exact split");
  solve->add_option("--out", solve_out, "output fan JSON path");
  solve->add_option("--report", solve_report_out, "output report JSON path");

  std::string verify_fan, verify_ration;
  std::vector<std::string> verify_measures;
  double verify_tol = 1e-3;
  CLI::App* verify = fan->add_subcommand("verify", "re-check a fan against measures");
  verify->add_option("--fan", verify_fan, "fan JSON")->required();
  verify->add_option("--ration", verify_ration, "comma list a1,...,a2k")->required();
  verify->add_option("--measure", verify_measures, "measure CSV (repeatable)")
      ->required()
      ->expected(-1);
  verify->add_option("--tol", verify_tol, "pass tolerance")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (betti->parsed()) {
    OwnedArrangement a;
    require_ok(arrlab_arrangement_parse(read_file(betti_file).c_str(), &a.handle),
               "parsing '" + betti_file + "'");
    OwnedString out;
    require_ok(arrlab_betti(a.handle, betti_field.c_str(), &out.value),
               "computing Betti numbers");
    std::cout << out.str();
    return 0;
  }

  if (poset->parsed()) {
    OwnedArrangement a;
    require_ok(arrlab_arrangement_parse(read_file(poset_file).c_str(), &a.handle),
               "parsing '" + poset_file + "'");
    OwnedString out;
    require_ok(arrlab_poset_dot(a.handle, &out.value), "building the poset");
    if (poset_dot_out.empty())
      std::cout << out.str();
    else
      write_file(poset_dot_out, out.str());
    return 0;
  }

  if (blowup->parsed()) {
    OwnedArrangement a;
    require_ok(arrlab_arrangement_parse(read_file(blowup_file).c_str(), &a.handle),
               "parsing '" + blowup_file + "'");
    OwnedArrangement blown;
    OwnedString meta;
    require_ok(arrlab_blow_up(a.handle, blowup_choice.c_str(), &blown.handle,
                              &meta.value),
               "blowing up");
    OwnedString out;
    require_ok(arrlab_arrangement_to_json(blown.handle, &out.value),
               "serializing the blow-up");
    if (blowup_out.empty())
      std::cout << out.str();
    else
      write_file(blowup_out, out.str());
    std::cerr << meta.str();
    return 0;
  }

  if (check->parsed()) {
    OwnedArrangement a;
    require_ok(arrlab_arrangement_parse(read_file(check_file).c_str(), &a.handle),
               "parsing '" + check_file + "'");
    OwnedString report;
    int overall = 2;
    require_ok(arrlab_check_theorem(a.handle, check_field.c_str(), check_connectivity,
                                    check_reduce ? 1 : 0, &report.value, &overall),
               "checking hypotheses");
    std::cout << report.str();
    return overall == 0 ? 0 : 2;
  }

  if (emit->parsed()) {
    std::string params = "{";
    bool first = true;
    auto append = [&](const std::string& key, const std::string& value) {
      if (!first) params += ",";
      params += "\"" + key + "\":" + value;
      first = false;
    };
    if (emit_n > 0) append("n", std::to_string(emit_n));
    if (emit_j > 0) append("j", std::to_string(emit_j));
    if (!emit_ration.empty()) append("ration", "[" + emit_ration + "]");
    params += "}";
    if (emit_k > 0 && !emit_ration.empty()) {
      const std::size_t commas =
          static_cast<std::size_t>(std::count(emit_ration.begin(), emit_ration.end(), ','));
      if (commas + 1 != static_cast<std::size_t>(2 * emit_k)) {
        std::cerr << "error: --k disagrees with the ration length\n";
        return 1;
      }
    }
    OwnedArrangement a;
    require_ok(arrlab_instance_build(emit_name.c_str(), params.c_str(), &a.handle),
               "building instance '" + emit_name + "'");
    OwnedString out;
    require_ok(arrlab_arrangement_to_json(a.handle, &out.value), "serializing");
    if (emit_out.empty())
      std::cout << out.str();
    else
      write_file(emit_out, out.str());
    return 0;
  }

  if (solve->parsed()) {
    OwnedMeasures measures = load_measures(solve_measures);
    std::ostringstream config;
    config << "{\"seed\":" << solve_seed << ",\"restarts\":" << solve_restarts
           << ",\"tol\":" << solve_tol << ",\"max_evals\":" << solve_max_evals
           << ",\"designated\":" << solve_designated;
    if (!solve_sigmas.empty()) {
      config << ",\"sigma_schedule\":[";
      for (std::size_t i = 0; i < solve_sigmas.size(); ++i)
        config << (i ? "," : "") << solve_sigmas[i];
      config << "]";
    }
    config << "}";
    OwnedString fan_json, report_json;
    int pass = 0;
    const std::vector<const arrlab_measure*> view = measures.view();
    require_ok(arrlab_fan_solve(solve_kind.c_str(), solve_ration.c_str(), view.data(),
                                view.size(), config.str().c_str(), &fan_json.value,
                                &report_json.value, &pass),
               "solving");
    if (!solve_out.empty()) write_file(solve_out, fan_json.str());
    if (!solve_report_out.empty()) write_file(solve_report_out, report_json.str());
    std::cout << report_json.str();
    return pass == 1 ? 0 : 2;
  }

  if (verify->parsed()) {
    OwnedMeasures measures = load_measures(verify_measures);
    OwnedString report_json;
    int pass = 0;
    const std::vector<const arrlab_measure*> view = measures.view();
    require_ok(arrlab_fan_verify(read_file(verify_fan).c_str(), verify_ration.c_str(),
                                 view.data(), view.size(), verify_tol,
                                 &report_json.value, &pass),
               "verifying");
    std::cout << report_json.str();
    return pass == 1 ? 0 : 2;
  }

  return 1;
}
