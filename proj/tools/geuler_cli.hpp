#pragma once

// Command-line front end: compute, crosscheck, involution, congruence, mobius.
//
// Exit codes: 0 all checks pass, 1 a verification failed or a cap was
// exceeded, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geuler/congruences.hpp"
#include "geuler/euler.hpp"
#include "geuler/mobius.hpp"
#include "geuler/partitions.hpp"

namespace geuler::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { text, json, csv, bfile };

struct Options {
  std::size_t d = 2;
  std::size_t p = 2;
  std::size_t n = 0;
  std::size_t n_max = 10;
  std::string method = "recursion";
  std::string name;
  std::string format = "text";
  std::string output;
  std::uint64_t cap = kDefaultCap;
  bool pairing = false;
  std::vector<std::string> methods;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a command produced: the machine-readable record, a text rendering,
/// a CSV rendering (empty when the command has none) and the exit code.
struct Outcome {
  json record;
  std::string text;
  std::string csv;
  std::string bfile;
  int exit_code = kExitOk;
};

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "bfile") return Format::bfile;
  throw UsageError("unknown format '" + s + "'");
}

inline std::string str(const Integer& v) { return v.get_str(); }

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

inline Outcome cmd_compute(const Options& o) {
  const auto method = parse_method(o.method);
  if (!method) throw UsageError("unknown method '" + o.method + "'");
  detail::require_d(o.d);
  const EulerTable t = euler_table(*method, o.d, o.n_max, o.cap);

  Outcome out;
  out.record["parameters"] = {{"d", o.d}, {"n_max", o.n_max}, {"method", o.method}, {"cap", o.cap}};
  json rows = json::array();
  std::ostringstream text, csv, bfile;
  text << "E_n^(" << o.d << ") by " << o.method << "\n";
  csv << "n,value\n";
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    rows.push_back({{"n", n}, {"value", str(t[n])}});
    text << std::setw(6) << n << "  " << str(t[n]) << "\n";
    csv << n << "," << str(t[n]) << "\n";
    bfile << n << " " << str(t[n]) << "\n";
  }
  out.record["results"] = {{"values", rows}};
  out.text = text.str();
  out.csv = csv.str();
  out.bfile = bfile.str();
  return out;
}

inline Outcome cmd_crosscheck(const Options& o) {
  detail::require_d(o.d);
  std::vector<Method> methods;
  if (o.methods.empty()) {
    methods.assign(kAllMethods.begin(), kAllMethods.end());
  } else {
    for (const auto& name : o.methods) {
      const auto m = parse_method(name);
      if (!m) throw UsageError("unknown method '" + name + "'");
      methods.push_back(*m);
    }
  }
  const CrosscheckReport report = crosscheck(o.d, o.n_max, methods, o.cap);

  Outcome out;
  json method_names = json::array();
  for (Method m : report.methods) method_names.push_back(std::string(to_string(m)));
  out.record["parameters"] = {{"d", o.d}, {"n_max", o.n_max}, {"methods", method_names}, {"cap", o.cap}};

  std::ostringstream text, csv;
  text << "crosscheck E_n^(" << o.d << "), n <= " << o.n_max << "\n";
  csv << "n";
  for (Method m : report.methods) csv << "," << to_string(m);
  csv << ",agree\n";
  json rows = json::array();
  for (const CrosscheckRow& row : report.rows) {
    json values = json::object();
    json skipped = json::array();
    for (const auto& [m, v] : row.values) values[std::string(to_string(m))] = str(v);
    for (Method m : row.skipped) skipped.push_back(std::string(to_string(m)));
    rows.push_back({{"n", row.n}, {"values", values}, {"skipped", skipped}, {"agree", row.agree}});

    const std::string shown = row.values.empty() ? "-" : str(row.values.begin()->second);
    text << std::setw(6) << row.n << "  " << (row.agree ? "agree   " : "DISAGREE") << "  ";
    if (row.agree) {
      text << shown;
    } else {
      for (const auto& [m, v] : row.values) text << to_string(m) << "=" << str(v) << " ";
    }
    if (!row.skipped.empty()) {
      text << "  (skipped:";
      for (Method m : row.skipped) text << " " << to_string(m);
      text << ")";
    }
    text << "\n";
    csv << row.n;
    for (Method m : report.methods) {
      auto it = row.values.find(m);
      csv << "," << (it == row.values.end() ? std::string("skipped") : str(it->second));
    }
    csv << "," << (row.agree ? "true" : "false") << "\n";
  }
  text << (report.all_agree() ? "all methods agree" : "METHODS DISAGREE") << " ("
       << report.skipped_count() << " skipped evaluations)\n";
  out.record["results"] = {{"rows", rows}, {"skipped_evaluations", report.skipped_count()}};
  out.record["verdicts"] = {{"all_agree", report.all_agree()}};
  out.text = text.str();
  out.csv = csv.str();
  out.exit_code = report.all_agree() ? kExitOk : kExitFailed;
  return out;
}

inline Outcome cmd_involution(const Options& o) {
  detail::require_d(o.d);
  if (o.n % o.d != 0)
    throw UsageError("d = " + std::to_string(o.d) + " does not divide n = " + std::to_string(o.n));
  const InvolutionAudit a = audit_involution(o.n, o.d, o.cap, o.pairing);

  Outcome out;
  out.record["parameters"] = {{"d", o.d}, {"n", o.n}, {"cap", o.cap}};
  out.record["results"] = {{"partitions", a.partitions},
                           {"fixed_points", a.fixed},
                           {"signed_sum", str(a.signed_total)},
                           {"d_alternating", str(a.alternating)}};
  out.record["verdicts"] = {{"involutive", a.involutive},
                            {"sign_reversing", a.sign_reversing},
                            {"fixed_point_structure", a.fixed_structure},
                            {"bijection_with_alternating", a.bijection},
                            {"fixed_equals_alternating", a.fixed_equals_alternating()},
                            {"signed_sum_identity", a.sign_identity()},
                            {"pass", a.pass()}};
  std::ostringstream text;
  text << "Pi_" << o.n << "^(" << o.d << "): " << a.partitions << " partitions, " << a.fixed
       << " fixed points, signed sum " << str(a.signed_total) << ", #A = " << str(a.alternating) << "\n";
  auto line = [&](const char* what, bool ok) { text << "  " << (ok ? "pass" : "FAIL") << "  " << what << "\n"; };
  line("iota^2 = id", a.involutive);
  line("sign reversing off fixed points", a.sign_reversing);
  line("fixed <=> blocks of size d, none mergeable", a.fixed_structure);
  line("fix_to_perm / perm_to_fix bijection", a.bijection);
  line("#Fix = #A", a.fixed_equals_alternating());
  line("signed sum = (-1)^(n/d) #Fix", a.sign_identity());
  if (o.pairing) {
    json pairs = json::array();
    json fixed = json::array();
    text << "pairing:\n";
    for (const auto& [hi, lo] : a.pairs) {
      pairs.push_back({to_string(hi), to_string(lo)});
      text << "  (" << to_string(hi) << ") <-> (" << to_string(lo) << ")\n";
    }
    text << "fixed:\n";
    for (const auto& pi : a.fixed_points) {
      fixed.push_back(to_string(pi));
      text << "  (" << to_string(pi) << ") -> " << to_string(fix_to_perm(pi)) << "\n";
    }
    out.record["results"]["pairs"] = pairs;
    out.record["results"]["fixed"] = fixed;
  }
  out.text = text.str();
  out.exit_code = a.pass() ? kExitOk : kExitFailed;
  return out;
}

inline Outcome cmd_congruence(const Options& o, bool p_given) {
  const auto id = parse_congruence(o.name);
  if (!id) throw UsageError("unknown congruence '" + o.name + "' (mod2, mod3, p2, 2p2)");
  const std::size_t param = takes_prime(*id) ? o.p : o.d;
  if (takes_prime(*id) && !p_given) throw UsageError("--p is required for " + o.name);
  const CongruenceReport r = congruence_sweep(*id, param, o.n_max);

  Outcome out;
  out.record["parameters"] = {{"name", o.name},
                              {takes_prime(*id) ? "p" : "d", param},
                              {"n_max", o.n_max}};
  json rows = json::array();
  std::ostringstream text, csv;
  text << "congruence " << o.name << " (" << (takes_prime(*id) ? "p" : "d") << " = " << param << ")\n";
  csv << "n,value,modulus,observed,expected,pass\n";
  for (const auto& v : r.verdicts) {
    rows.push_back({{"n", v.n},
                    {"value", str(v.value)},
                    {"modulus", str(v.modulus)},
                    {"observed", str(v.observed)},
                    {"expected", str(v.expected)},
                    {"pass", v.pass}});
    text << std::setw(4) << v.n << "  " << (v.pass ? "pass" : "FAIL") << "  " << str(v.observed)
         << " == " << str(v.expected) << " (mod " << str(v.modulus) << ")\n";
    csv << v.n << "," << str(v.value) << "," << str(v.modulus) << "," << str(v.observed) << ","
        << str(v.expected) << "," << (v.pass ? "true" : "false") << "\n";
  }
  text << (r.pass() ? "all pass" : "FAILURES") << "\n";
  out.record["results"] = {{"verdicts", rows}};
  out.record["verdicts"] = {{"pass", r.pass()}};
  out.text = text.str();
  out.csv = csv.str();
  out.exit_code = r.pass() ? kExitOk : kExitFailed;
  return out;
}

inline Outcome cmd_mobius(const Options& o) {
  if (!is_prime(o.p)) throw UsageError("p = " + std::to_string(o.p) + " is not prime");
  if (o.n < 2) throw UsageError("n must be at least 2");
  const InversionReport r = verify_inversion(o.p, o.n, o.cap);

  Outcome out;
  out.record["parameters"] = {{"p", o.p}, {"n", o.n}, {"cap", o.cap}};
  json subgroups = json::array();
  std::ostringstream text, csv;
  text << "C_" << o.p << " x C_" << o.p << " on Pi_" << o.p * o.n << "^(" << o.p << "): " << r.partitions
       << " partitions\n";
  text << std::left << std::setw(10) << "subgroup" << std::right << std::setw(6) << "mu" << std::setw(12)
       << "alpha" << std::setw(12) << "beta" << "\n";
  csv << "subgroup,mu,alpha,beta\n";
  for (const SubgroupId& h : r.lattice.elements) {
    subgroups.push_back({{"subgroup", to_string(h)},
                         {"mu", str(r.lattice.mu.at(h))},
                         {"alpha", str(r.alpha.at(h))},
                         {"beta", str(r.beta.at(h))}});
    text << std::left << std::setw(10) << to_string(h) << std::right << std::setw(6)
         << str(r.lattice.mu.at(h)) << std::setw(12) << str(r.alpha.at(h)) << std::setw(12)
         << str(r.beta.at(h)) << "\n";
    csv << to_string(h) << "," << str(r.lattice.mu.at(h)) << "," << str(r.alpha.at(h)) << ","
        << str(r.beta.at(h)) << "\n";
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
  }
  out.record["results"] = {{"partitions", r.partitions},
                           {"subgroups", subgroups},
                           {"mobius_sum", str(r.mobius_sum)},
                           {"beta_trivial", str(r.beta.at(SubgroupId::trivial()))}};
  out.record["verdicts"] = {{"checks", checks}, {"pass", r.pass()}};
  out.text = text.str();
  out.csv = csv.str();
  out.exit_code = r.pass() ? kExitOk : kExitFailed;
  return out;
}

// ---------------------------------------------------------------------------

/// Parses argv, runs one subcommand and writes its output. Data goes to
/// `out` (or --output FILE), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Euler numbers: exact computation and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json, csv or bfile")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
    sub->add_option("--cap", o.cap, "brute-force enumeration cap");
    sub->add_option("--output", o.output, "write to FILE instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "table of E_n^(d) for n = 0..n_max");
  compute->add_option("--d", o.d, "block-size modulus (>= 2)")->required();
  compute->add_option("--n-max", o.n_max, "largest subscript")->required();
  compute->add_option("--method", o.method,
                      "recursion, series, compositions, determinant, bruteforce or alternating");
  add_common(compute);

  auto* cross = app.add_subcommand("crosscheck", "compare all methods");
  cross->add_option("--d", o.d, "block-size modulus (>= 2)")->required();
  cross->add_option("--n-max", o.n_max, "largest subscript")->required();
  cross->add_option("--methods", o.methods, "subset of methods (default: all)");
  add_common(cross);

  auto* invol = app.add_subcommand("involution", "audit the split/merge involution on Pi_n^(d)");
  invol->add_option("--d", o.d, "block-size modulus (>= 2)")->required();
  invol->add_option("--n", o.n, "ground set size, a multiple of d")->required();
  invol->add_flag("--pairing", o.pairing, "print every 2-cycle and fixed point");
  add_common(invol);

  auto* cong = app.add_subcommand("congruence", "sweep a congruence family over n = 1..n_max");
  cong->add_option("--name", o.name, "mod2, mod3, p2 or 2p2")->required();
  cong->add_option("--d", o.d, "d for mod2 / mod3");
  auto* p_opt = cong->add_option("--p", o.p, "prime for p2 / 2p2");
  cong->add_option("--n-max", o.n_max, "largest n")->required();
  add_common(cong);

  auto* mob = app.add_subcommand("mobius", "verify the Mobius inversion argument exhaustively");
  mob->add_option("--p", o.p, "prime")->required();
  mob->add_option("--n", o.n, "n >= 2")->required();
  add_common(mob);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  const auto started = std::chrono::steady_clock::now();
  Outcome result;
  try {
    const Format format = parse_format(o.format);
    if (format == Format::bfile && command != "compute")
      throw UsageError("--format bfile is only available for compute");
    if (command == "compute") result = cmd_compute(o);
    else if (command == "crosscheck") result = cmd_crosscheck(o);
    else if (command == "involution") result = cmd_involution(o);
    else if (command == "congruence") result = cmd_congruence(o, p_opt->count() > 0);
    else result = cmd_mobius(o);

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
    result.record["command"] = command;
    json args = json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    result.record["argv"] = args;
    result.record["timing_us"] = elapsed.count();
    if (!result.record.contains("verdicts")) result.record["verdicts"] = json::object();
    result.record["exit_code"] = result.exit_code;

    std::string payload;
    switch (format) {
      case Format::text: payload = result.text; break;
      case Format::json: payload = dump(result.record); break;
      case Format::csv: payload = result.csv.empty() ? result.text : result.csv; break;
      case Format::bfile: payload = result.bfile; break;
    }
    if (o.output.empty()) {
      out << payload;
    } else {
      std::ofstream file(o.output);
      if (!file) throw UsageError("cannot open output file '" + o.output + "'");
      file << payload;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap to allow it)\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace geuler::cli
