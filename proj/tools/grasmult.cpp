// Command-line front end over the grasmult C API.
//
// Verbs: mult, hilbert, paths, verify. One structured document per
// invocation on stdout; diagnostics on stderr. Exit codes: 0 ok,
// 1 verification mismatch, 2 parse error, 3 tau not below w, 4 search
// budget exceeded.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grasmult.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kMaxVerifyN = 8;

enum ExitCode {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kNotOnVariety = 3,
  kBudgetExceeded = 4,
};

int exit_code_for(grasmult_status status) {
  switch (status) {
    case GRASMULT_OK: return kOk;
    case GRASMULT_ERR_INVALID_ARGUMENT: return kParseError;
    case GRASMULT_ERR_NOT_ON_VARIETY: return kNotOnVariety;
    case GRASMULT_ERR_BUDGET_EXCEEDED: return kBudgetExceeded;
    default: return kMismatch;
  }
}

int complain(grasmult_status status, const std::string& what) {
  std::cerr << "grasmult: " << what << ": " << grasmult_last_error() << "\n";
  return exit_code_for(status);
}

// Comma-separated positive integers; empty means the empty vector (d = 0).
bool parse_entries(const std::string& text, std::vector<int>& out) {
  out.clear();
  if (text.empty()) return true;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) return false;
      out.push_back(value);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty() || text.empty();
}

std::string take_string(char* owned) {
  std::string out = owned ? owned : "";
  grasmult_string_free(owned);
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(sep);
    out += items[i];
  }
  return out;
}

struct InstanceArgs {
  int n = 0;
  int d = 0;
  std::string w;
  std::string tau;
};

struct CommonOpts {
  std::uint64_t budget = 0;  // 0 = library default
  std::string format = "json";
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--n", args.n, "ambient dimension")->required();
  cmd->add_option("--d", args.d, "subspace dimension")->required();
  cmd->add_option("--w", args.w, "Schubert variety index, d increasing entries (comma-separated)");
  cmd->add_option("--tau", args.tau, "point index, d increasing entries (comma-separated)");
}

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--budget", opts.budget, "search-node budget for the enumerative engines");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

class InstanceHandle {
public:
  InstanceHandle() = default;
  ~InstanceHandle() { grasmult_instance_destroy(inst_); }
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;

  grasmult_status create(const InstanceArgs& args) {
    std::vector<int> w, tau;
    if (!parse_entries(args.w, w) || !parse_entries(args.tau, tau)) {
      std::cerr << "grasmult: --w/--tau must be comma-separated integers\n";
      return GRASMULT_ERR_INVALID_ARGUMENT;
    }
    if (static_cast<int>(w.size()) != args.d || static_cast<int>(tau.size()) != args.d) {
      std::cerr << "grasmult: --w and --tau need exactly d entries\n";
      return GRASMULT_ERR_INVALID_ARGUMENT;
    }
    return grasmult_instance_create(args.n, args.d, w.data(), tau.data(), &inst_);
  }

  const grasmult_instance* get() const { return inst_; }

private:
  grasmult_instance* inst_ = nullptr;
};

// Instance echo plus kappa and sigma, shared by every instance verb. All
// integers are serialized as decimal strings.
json instance_document(const InstanceArgs& args, const grasmult_instance* inst) {
  json doc;
  doc["instance"] = {{"n", std::to_string(args.n)},
                     {"d", std::to_string(args.d)},
                     {"w", json::array()},
                     {"tau", json::array()}};
  std::vector<int> w, tau;
  parse_entries(args.w, w);
  parse_entries(args.tau, tau);
  for (int v : w) doc["instance"]["w"].push_back(std::to_string(v));
  for (int v : tau) doc["instance"]["tau"].push_back(std::to_string(v));

  std::vector<int> kappa(args.d), sigma(args.d);
  grasmult_instance_kappa(inst, kappa.data());
  grasmult_instance_sigma(inst, sigma.data());
  doc["kappa"] = json::array();
  doc["sigma"] = json::array();
  for (int v : kappa) doc["kappa"].push_back(std::to_string(v));
  for (int v : sigma) doc["sigma"].push_back(std::to_string(v));
  return doc;
}

std::vector<std::string> string_array(const json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

void emit_instance_text(std::ostream& os, const json& doc) {
  os << "n: " << doc["instance"]["n"].get<std::string>() << "\n"
     << "d: " << doc["instance"]["d"].get<std::string>() << "\n"
     << "w: " << join(string_array(doc["instance"]["w"]), ',') << "\n"
     << "tau: " << join(string_array(doc["instance"]["tau"]), ',') << "\n"
     << "kappa: " << join(string_array(doc["kappa"]), ',') << "\n"
     << "sigma: " << join(string_array(doc["sigma"]), ',') << "\n";
}

class Timer {
public:
  std::string elapsed_ms() const {
    const auto dt = std::chrono::steady_clock::now() - start_;
    return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_mult(const InstanceArgs& args, const CommonOpts& opts, const std::string& method) {
  InstanceHandle inst;
  if (grasmult_status st = inst.create(args); st != GRASMULT_OK)
    return complain(st, "cannot build instance");

  grasmult_method m = GRASMULT_METHOD_DETERMINANT;
  if (method == "paths") m = GRASMULT_METHOD_PATHS;
  if (method == "reflections") m = GRASMULT_METHOD_REFLECTIONS;

  Timer timer;
  char* result = nullptr;
  if (grasmult_status st = grasmult_multiplicity(inst.get(), m, opts.budget, &result);
      st != GRASMULT_OK)
    return complain(st, "multiplicity computation failed");

  json doc = instance_document(args, inst.get());
  doc["command"] = "mult";
  doc["method"] = method;
  doc["multiplicity"] = take_string(result);
  doc["timing_ms"] = timer.elapsed_ms();

  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "command: mult\n";
    emit_instance_text(std::cout, doc);
    std::cout << "method: " << method << "\n"
              << "multiplicity: " << doc["multiplicity"].get<std::string>() << "\n"
              << "timing_ms: " << doc["timing_ms"].get<std::string>() << "\n";
  }
  return kOk;
}

int run_hilbert(const InstanceArgs& args, const CommonOpts& opts, int expand) {
  InstanceHandle inst;
  if (grasmult_status st = inst.create(args); st != GRASMULT_OK)
    return complain(st, "cannot build instance");

  Timer timer;
  grasmult_series* series = nullptr;
  if (grasmult_status st = grasmult_hilbert_series(inst.get(), opts.budget, &series);
      st != GRASMULT_OK)
    return complain(st, "Hilbert series computation failed");

  char* numerator = nullptr;
  grasmult_series_numerator(series, &numerator);
  json doc = instance_document(args, inst.get());
  doc["command"] = "hilbert";
  doc["numerator"] = split_csv(take_string(numerator));
  doc["pole_order"] = std::to_string(grasmult_series_pole_order(series));
  doc["conjectural"] = grasmult_series_conjectural(series) != 0;
  if (expand >= 0) {
    doc["hilbert_function"] = json::array();
    for (int m = 0; m <= expand; ++m) {
      char* value = nullptr;
      if (grasmult_status st = grasmult_series_value(series, static_cast<uint32_t>(m), &value);
          st != GRASMULT_OK) {
        grasmult_series_destroy(series);
        return complain(st, "series expansion failed");
      }
      doc["hilbert_function"].push_back(take_string(value));
    }
  }
  grasmult_series_destroy(series);
  doc["timing_ms"] = timer.elapsed_ms();

  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "command: hilbert\n";
    emit_instance_text(std::cout, doc);
    std::cout << "numerator: " << join(string_array(doc["numerator"]), ',') << "\n"
              << "pole_order: " << doc["pole_order"].get<std::string>() << "\n"
              << "conjectural: true\n";
    if (expand >= 0) {
      const auto values = string_array(doc["hilbert_function"]);
      for (std::size_t m = 0; m < values.size(); ++m)
        std::cout << "h(" << m << "): " << values[m] << "\n";
    }
    std::cout << "timing_ms: " << doc["timing_ms"].get<std::string>() << "\n";
  }
  return kOk;
}

int run_paths(const InstanceArgs& args, const CommonOpts& opts, bool list_families) {
  InstanceHandle inst;
  if (grasmult_status st = inst.create(args); st != GRASMULT_OK)
    return complain(st, "cannot build instance");

  Timer timer;
  grasmult_families* families = nullptr;
  if (grasmult_status st = grasmult_enumerate_families(inst.get(), opts.budget, &families);
      st != GRASMULT_OK)
    return complain(st, "family enumeration failed");

  const std::uint64_t count = grasmult_families_count(families);
  std::vector<std::uint64_t> turn_histogram;
  json family_list = json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    uint32_t turns = 0;
    grasmult_family_en_turns(families, i, &turns);
    if (turns >= turn_histogram.size()) turn_histogram.resize(turns + 1, 0);
    turn_histogram[turns] += 1;
    if (list_families) {
      json entry;
      entry["en_turns"] = std::to_string(turns);
      entry["paths"] = json::array();
      for (int l = 1; l <= args.d; ++l) {
        char* steps = nullptr;
        grasmult_family_steps(families, i, l, &steps);
        entry["paths"].push_back(take_string(steps));
      }
      family_list.push_back(std::move(entry));
    }
  }
  grasmult_families_destroy(families);

  json doc = instance_document(args, inst.get());
  doc["command"] = "paths";
  doc["family_count"] = std::to_string(count);
  doc["turn_polynomial"] = json::array();
  for (std::uint64_t h : turn_histogram) doc["turn_polynomial"].push_back(std::to_string(h));
  if (list_families) doc["families"] = std::move(family_list);
  doc["timing_ms"] = timer.elapsed_ms();

  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "command: paths\n";
    emit_instance_text(std::cout, doc);
    std::cout << "family_count: " << doc["family_count"].get<std::string>() << "\n"
              << "turn_polynomial: " << join(string_array(doc["turn_polynomial"]), ',') << "\n";
    if (list_families) {
      std::uint64_t i = 0;
      for (const auto& entry : doc["families"]) {
        std::cout << "family " << i++ << ": en_turns=" << entry["en_turns"].get<std::string>()
                  << " steps=" << join(string_array(entry["paths"]), ';') << "\n";
      }
    }
    std::cout << "timing_ms: " << doc["timing_ms"].get<std::string>() << "\n";
  }
  return kOk;
}

int run_verify(int max_n, const CommonOpts& opts) {
  if (max_n > kMaxVerifyN) {
    std::cerr << "grasmult: --max-n is capped at " << kMaxVerifyN << "\n";
    return kParseError;
  }
  Timer timer;
  int ok = 0;
  char* report = nullptr;
  if (grasmult_status st = grasmult_verify(max_n, opts.budget, &ok, &report); st != GRASMULT_OK)
    return complain(st, "verification failed to run");
  const std::string report_text = take_string(report);

  if (opts.format == "json") {
    json doc;
    doc["command"] = "verify";
    doc["max_n"] = std::to_string(max_n);
    doc["ok"] = ok != 0;
    doc["report"] = report_text;
    doc["timing_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "command: verify\nmax_n: " << max_n << "\n"
              << report_text << "timing_ms: " << timer.elapsed_ms() << "\n";
  }
  return ok != 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicities of points on Schubert varieties in Grassmannians"};
  app.require_subcommand(1);

  InstanceArgs args;
  CommonOpts opts;
  std::string method = "determinant";
  int expand = -1;
  bool list_families = false;
  int max_n = 5;

  CLI::App* mult = app.add_subcommand("mult", "multiplicity of the point tau on X(w)");
  add_instance_options(mult, args);
  add_common_options(mult, opts);
  mult->add_option("--method", method, "determinant | paths | reflections")
      ->check(CLI::IsMember({"determinant", "paths", "reflections"}));

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert series of the tangent cone at tau (conjectural)");
  add_instance_options(hilbert, args);
  add_common_options(hilbert, opts);
  hilbert->add_option("--expand", expand, "also expand h(m) for m = 0..M");

  CLI::App* paths = app.add_subcommand("paths", "enumerate the nonintersecting path families");
  add_instance_options(paths, args);
  add_common_options(paths, opts);
  paths->add_flag("--list-families", list_families, "dump every family as N/E step strings");

  CLI::App* verify = app.add_subcommand("verify", "cross-check all engines on small instances");
  add_common_options(verify, opts);
  verify->add_option("--max-n", max_n, "check every instance with n up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  if (mult->parsed()) return run_mult(args, opts, method);
  if (hilbert->parsed()) return run_hilbert(args, opts, expand);
  if (paths->parsed()) return run_paths(args, opts, list_families);
  if (verify->parsed()) return run_verify(max_n, opts);
  return kParseError;
}
