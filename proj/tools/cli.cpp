#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisenweyl/expression_grammar.hpp"
#include "heisenweyl/gwa.hpp"
#include "heisenweyl/localize.hpp"
#include "heisenweyl/scalar_parser.hpp"
#include "heisenweyl/specialization.hpp"
#include "suites.hpp"

namespace heisenweyl::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("invalid " + what + " '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

Parameters parameters_for_mode(const std::string& mode) {
  if (mode == "generic") return Parameters::generic();
  Specialization spec;
  try {
    spec = parse_specialization(mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (auto* op = std::get_if<OneParam>(&spec)) return parameters_for(*op);
  throw UsageError("algebra computations support generic or oneparam modes, not '" + mode + "'");
}

/// Parses and multiplies inside one algebra; results print in normal form.
class System {
 public:
  virtual ~System() = default;
  virtual std::string normalize(const std::string& a) const = 0;
  virtual std::string multiply(const std::string& a, const std::string& b) const = 0;
  virtual std::string quommutator(const std::string& a, const std::string& b, const std::string& lambda) const = 0;
};

class PBWSystem : public System {
 public:
  PBWSystem(Parameters params, bool localized)
      : alg_(std::move(params)), alphabet_(localized ? local_alphabet() : hpq_alphabet()) {}

  std::string normalize(const std::string& a) const override { return show(parse(a)); }
  std::string multiply(const std::string& a, const std::string& b) const override {
    return show(alg_.multiply(parse(a), parse(b)));
  }
  std::string quommutator(const std::string& a, const std::string& b, const std::string& lambda) const override {
    return show(alg_.quommutator(parse(a), parse(b), parse_scalar(lambda, alg_.params())));
  }

 private:
  PBWElement parse(const std::string& text) const {
    return alg_.from_free(parse_expression(text, alphabet_, alg_.params()));
  }
  std::string show(const PBWElement& f) const { return f.to_string(alg_.params().names); }

  HeisenbergAlgebra alg_;
  Alphabet alphabet_;
};

class GWASystem : public System {
 public:
  explicit GWASystem(GWA g) : g_(std::move(g)) {}

  std::string normalize(const std::string& a) const override { return g_.parse(a).to_string(g_.data()); }
  std::string multiply(const std::string& a, const std::string& b) const override {
    return g_.multiply(g_.parse(a), g_.parse(b)).to_string(g_.data());
  }
  std::string quommutator(const std::string& a, const std::string& b, const std::string& lambda) const override {
    GWAElement u = g_.parse(a), v = g_.parse(b);
    Scalar l = parse_scalar(lambda, g_.data().params);
    return (g_.multiply(u, v) - g_.multiply(v, u).scaled(l)).to_string(g_.data());
  }

 private:
  GWA g_;
};

std::unique_ptr<System> make_system(const std::string& name, const std::string& mode) {
  if (name == "hpq") return std::make_unique<PBWSystem>(parameters_for_mode(mode), false);
  if (name == "local") return std::make_unique<PBWSystem>(parameters_for_mode(mode), true);
  if (name.rfind("gwa:", 0) == 0) {
    const std::vector<std::string> parts = split(name.substr(4), ':');
    auto pair = [&](const std::string& text) {
      auto rs = split(text, ',');
      if (rs.size() != 2) throw UsageError("expected R,S in system '" + name + "'");
      return std::pair{parse_int(rs[0], "r"), parse_int(rs[1], "s")};
    };
    try {
      if (parts.size() == 1 && parts[0] == "hpq") return std::make_unique<GWASystem>(hpq_as_gwa(parameters_for_mode(mode)));
      if (mode != "generic") throw UsageError("system '" + name + "' fixes its own parameters; drop --spec");
      if (parts.size() == 1 && parts[0] == "apq") return std::make_unique<GWASystem>(apq_indep_gwa());
      if (parts.size() == 2 && parts[0] == "aprs") {
        auto [r, s] = pair(parts[1]);
        return std::make_unique<GWASystem>(aprs_as_gwa(r, s));
      }
      if (parts.size() == 3 && parts[0] == "tensor") {
        auto [r, s] = pair(parts[2]);
        return std::make_unique<GWASystem>(tensor_power(parse_int(parts[1], "n"), r, s));
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown system '" + name + "' (hpq, local, gwa:hpq, gwa:apq, gwa:aprs:R,S, gwa:tensor:N:R,S)");
}

std::string eval_scalar(const std::string& expr, const std::string& mode) {
  Scalar s = parse_scalar(expr);
  if (mode == "generic") return s.to_string();
  Specialization spec;
  try {
    spec = parse_specialization(mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return to_string(specialize(s, spec));
}

void print_entries(const std::vector<CheckEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) {
    out << (e.pass ? "PASS " : "FAIL ") << e.suite << ": " << e.check << " [" << e.params << "]\n";
    if (!e.pass) out << "  witness: " << e.witness << "\n";
  }
  Summary s = summarize(entries);
  out << s.passed << " passed, " << s.failed << " failed\n";
}

}  // namespace

void write_report(const std::vector<CheckEntry>& entries, std::ostream& os) {
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["suite"] = e.suite;
    j["check"] = e.check;
    j["anchor"] = e.anchor;
    j["params"] = e.params;
    j["status"] = e.pass ? "pass" : "fail";
    if (!e.pass) j["witness"] = e.witness;
    j["micros"] = e.micros;
    os << j.dump() << "\n";
  }
}

std::vector<CheckEntry> read_report(std::istream& is) {
  std::vector<CheckEntry> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      CheckEntry e;
      e.suite = j.at("suite").get<std::string>();
      e.check = j.at("check").get<std::string>();
      e.anchor = j.at("anchor").get<std::string>();
      e.params = j.at("params").get<std::string>();
      const std::string status = j.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw std::runtime_error("bad status '" + status + "'");
      e.pass = status == "pass";
      if (!e.pass) e.witness = j.at("witness").get<std::string>();
      e.micros = j.at("micros").get<long long>();
      out.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw std::runtime_error("report line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations and verification suites for the two-parameter quantum Heisenberg algebra",
               "heisenweyl"};
  app.require_subcommand(1);

  std::string system = "hpq", mode = "generic", lambda = "1";
  std::string expr_a, expr_b;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system, "hpq | local | gwa:hpq | gwa:apq | gwa:aprs:R,S | gwa:tensor:N:R,S");
    cmd->add_option("--spec,--mode", mode, "generic | oneparam:R,S");
  };

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize->add_option("expr", expr_a)->required();
  add_system(normalize);

  auto* mul = app.add_subcommand("mul", "Multiply two expressions");
  mul->add_option("a", expr_a)->required();
  mul->add_option("b", expr_b)->required();
  add_system(mul);

  auto* commutator = app.add_subcommand("commutator", "Print ab - lambda ba");
  commutator->add_option("a", expr_a)->required();
  commutator->add_option("b", expr_b)->required();
  commutator->add_option("--lambda", lambda, "Scalar lambda (default 1)");
  add_system(commutator);

  auto* eval = app.add_subcommand("eval", "Evaluate a scalar, optionally specialized");
  eval->add_option("expr", expr_a)->required();
  eval->add_option("--spec,--mode", mode, "generic | oneparam:R,S | cyclotomic:N:EP,EQ | numeric:P,Q");

  SuiteConfig cfg;
  int jobs = 1;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite name or 'all'")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--spec,--mode", cfg.mode, "Parameter mode");
  verify->add_option("--range", cfg.range, "identities: largest n");
  verify->add_option("--degree", cfg.degree, "fock: monomial degree bound");
  verify->add_option("--virasoro-window", cfg.virasoro_window, "virasoro: |n|, |m| bound");
  verify->add_option("--window", cfg.module_window, "bmodule: |k| bound");
  verify->add_option("--dim", cfg.matrix_size, "oscillator: matrix size");
  verify->add_option("--pprime", cfg.pprime, "diamond: the scalar p' in zx = p' xz");
  verify->add_option("--seed", cfg.seed, "bmodule: random seed");
  verify->add_option("--report", report_path, "Write a line-delimited JSON report");
  verify->add_option("--jobs", jobs, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*normalize) {
      out << make_system(system, mode)->normalize(expr_a) << "\n";
    } else if (*mul) {
      out << make_system(system, mode)->multiply(expr_a, expr_b) << "\n";
    } else if (*commutator) {
      out << make_system(system, mode)->quommutator(expr_a, expr_b, lambda) << "\n";
    } else if (*eval) {
      out << eval_scalar(expr_a, mode) << "\n";
    } else if (*verify) {
      std::vector<CheckEntry> entries = run_suite(cfg, jobs);
      print_entries(entries, out);
      if (!report_path.empty()) {
        {
          std::ofstream f(report_path);
          if (!f) throw UsageError("cannot write report '" + report_path + "'");
          write_report(entries, f);
        }
        std::ifstream back(report_path);
        Summary written = summarize(read_report(back)), expected = summarize(entries);
        if (written.passed != expected.passed || written.failed != expected.failed)
          throw std::runtime_error("report '" + report_path + "' does not reproduce the summary");
      }
      return summarize(entries).failed == 0 ? kSuccess : kVerificationFailure;
    }
  } catch (const SpecializationError& e) {
    err << "error: " << e.what() << "\n";
    err << "offending factor: " << e.factor() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace heisenweyl::cli
