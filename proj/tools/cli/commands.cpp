#include "commands.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "diagram.hpp"
#include "json.hpp"
#include "kfc/concordance.hpp"
#include "kfc/error.hpp"
#include "kfc/invariants.hpp"
#include "kfc/knots.hpp"

namespace kfc::cli {

namespace {

using nlohmann::ordered_json;

// Unreadable files and similar problems with the invocation itself.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

CfkComplex load_complex_file(const std::string& path) {
  CfkComplex c = deserialize(read_text(path));
  const auto report = validate(c, true);
  if (!report.valid()) throw InputError(path + " is not a knot complex:\n" + report.to_text());
  return c;
}

struct Knot {
  ClassRep rep;
  std::string label;
};

// "@path" names a cfk v1 file; anything else is a knot expression.
Knot load_knot(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    return {{reduce(load_complex_file(path)), KnotExpr::unknot()}, path};
  }
  KnotExpr e = parse_knot(arg);
  return {class_complex(e), e.to_string()};
}

ordered_json optional_json(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(); }

std::string optional_text(const std::optional<int>& v, const std::string& reason) {
  return v ? std::to_string(*v) : "n/a (" + reason + ")";
}

// A mirrored expression such as "-T(2,3)" would be taken for an option. A
// leading space keeps it positional; the expression parser skips it.
std::string shield_mirror(const std::string& arg) {
  const auto body = arg.find_first_not_of('-');
  if (body == 0 || body == std::string::npos) return arg;
  return std::string("TCDU(").find(arg[body]) != std::string::npos ? " " + arg : arg;
}

struct Options {
  bool json = false;
  std::string out_file;
};

int cmd_invariants(const std::string& arg, const std::string& file, const std::string& emit, const Options& opt,
                   std::ostream& out) {
  const Knot k = file.empty() ? load_knot(arg) : load_knot("@" + file);
  const CfkComplex& c = k.rep.complex;
  const int t = tau(c);
  const int e = epsilon(c);
  if (epsilon_oracle(c) != e) throw InternalInconsistency("epsilon formulations disagree");
  std::optional<int> first;
  std::optional<int> second;
  std::string a1_reason = "epsilon != 1";
  std::string a2_reason = "epsilon != 1";
  if (e == 1) {
    first = a1(c);
    second = a2(c);
    a2_reason = "undefined";
  }
  if (!emit.empty()) write_text(emit, serialize(c));

  if (opt.json) {
    ordered_json j;
    j["knot"] = k.label;
    j["generators"] = c.size();
    j["max_alexander"] = c.max_alexander();
    j["tau"] = t;
    j["epsilon"] = e;
    j["a1"] = optional_json(first);
    j["a2"] = optional_json(second);
    if (!first) j["a1_note"] = a1_reason;
    if (!second) j["a2_note"] = a2_reason;
    auto& table = j["hfk"] = ordered_json::array();
    for (const auto& [key, rank] : hfk_table(c)) {
      table.push_back({{"A", key.first}, {"M", key.second}, {"rank", rank}});
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "knot: " << k.label << '\n'
      << "generators: " << c.size() << '\n'
      << "genus bound (max A): " << c.max_alexander() << '\n'
      << "tau: " << t << '\n'
      << "epsilon: " << e << '\n'
      << "a1: " << optional_text(first, a1_reason) << '\n'
      << "a2: " << optional_text(second, a2_reason) << '\n';
  return kExitOk;
}

int cmd_cmp(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  const Knot k1 = load_knot(a);
  const Knot k2 = load_knot(b);
  const Ordering o = class_cmp(k1.rep, k2.rep);
  const char* sym = o == Ordering::Greater ? ">" : o == Ordering::Less ? "<" : "=";
  if (opt.json) {
    out << ordered_json{{"left", k1.label}, {"right", k2.label}, {"result", to_string(o)}}.dump(2) << '\n';
  } else {
    out << to_string(o) << ": " << k1.label << ' ' << sym << ' ' << k2.label << '\n';
  }
  return kExitOk;
}

int cmd_dominates(const std::string& a, const std::string& b, int evidence, const Options& opt,
                  std::ostream& out) {
  const Knot k = load_knot(a);
  const Knot j = load_knot(b);
  ordered_json doc{{"dominant", k.label}, {"dominated", j.label}};
  std::ostringstream text;
  bool established = false;
  bool refuted = false;

  try {
    const auto check = dominates_by_invariants(k.rep, j.rep);
    established = check.proved;
    doc["a1"] = {check.a1_k, check.a1_j};
    doc["a2"] = {optional_json(check.a2_k), optional_json(check.a2_j)};
    doc["proved"] = check.proved;
    doc["lemma"] = check.proved ? ordered_json(check.lemma) : ordered_json();
    text << "a1: " << check.a1_k << " vs " << check.a1_j << '\n'
         << "a2: " << optional_text(check.a2_k, "undefined") << " vs "
         << optional_text(check.a2_j, "undefined") << '\n'
         << "dominates: " << (check.proved ? "proved (" + check.lemma + ")" : std::string("unknown")) << '\n';
  } catch (const EpsilonNotOne& e) {
    doc["proved"] = false;
    doc["lemma"] = nullptr;
    text << "dominates: n/a (" << e.what() << ")\n";
  }

  if (evidence > 0) {
    const auto ev = dominance_evidence(k.rep, j.rep, evidence);
    refuted = !ev.consistent;
    doc["evidence"] = {{"consistent", ev.consistent}, {"n", ev.n}};
    if (ev.consistent) {
      text << "evidence: consistent up to n=" << ev.n << '\n';
    } else if (ev.n == 0) {
      text << "evidence: refuted (epsilon of " << j.label << " is not 1)\n";
    } else {
      text << "evidence: refuted at n=" << ev.n << '\n';
    }
  }
  out << (opt.json ? doc.dump(2) + "\n" : text.str());
  return established && !refuted ? kExitOk : kExitMath;
}

int cmd_independence(const std::vector<std::string>& exprs, const std::string& recheck, const Options& opt,
                     std::ostream& out, std::ostream& err) {
  if (!recheck.empty()) {
    const auto result = recheck_certificate(read_text(recheck));
    if (opt.json) {
      out << ordered_json{{"ok", result.ok}, {"problems", result.problems}}.dump(2) << '\n';
    } else {
      out << "recheck: " << (result.ok ? "ok" : "FAILED") << '\n';
      for (const auto& p : result.problems) out << "  " << p << '\n';
    }
    return result.ok ? kExitOk : kExitMath;
  }
  if (exprs.empty()) throw InputError("independence needs at least one expression");

  std::vector<ClassRep> reps;
  for (const auto& e : exprs) reps.push_back(class_complex(parse_knot(e)));
  Certificate cert;
  try {
    cert = independence_certificate(reps);
  } catch (const NotAChain& e) {
    err << "not a chain: " << e.what() << '\n';
    return kExitMath;
  }
  const std::string json = cert.to_json();
  if (!opt.out_file.empty()) write_text(opt.out_file, json);
  if (opt.json) {
    out << json;
    return kExitOk;
  }
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& e = cert.entries[i];
    out << e.rep.provenance.to_string() << "  tau=" << e.tau << " a1=" << e.a1
        << " a2=" << optional_text(e.a2, "undefined") << '\n';
    if (i + 1 < cert.entries.size()) out << "  >> (" << cert.lemmas[i] << ")\n";
  }
  out << "  > 0 (epsilon=" << cert.entries.back().epsilon << ")\n";
  return kExitOk;
}

int cmd_alexander(const std::string& arg, const Options& opt, std::ostream& out) {
  const KnotExpr e = parse_knot(arg);
  const LaurentPoly p = alexander(e);
  std::optional<StaircaseExponents> stairs;
  try {
    stairs = staircase_exponents(p);
  } catch (const NotStaircaseForm&) {
  }
  if (opt.json) {
    ordered_json j{{"knot", e.to_string()}, {"polynomial", p.to_string()}};
    j["staircase"] = stairs ? ordered_json(stairs->values()) : ordered_json();
    out << j.dump(2) << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_show(const std::string& arg, const std::string& format, const Options& opt, std::ostream& out) {
  const Knot k = load_knot(arg);
  std::string rendered;
  if (format == "svg") {
    rendered = render_svg(k.rep.complex);
  } else if (format == "ascii") {
    rendered = render_ascii(k.rep.complex);
  } else {
    throw InputError("unknown format '" + format + "' (expected ascii or svg)");
  }
  if (!opt.out_file.empty()) {
    write_text(opt.out_file, rendered);
  } else {
    out << rendered;
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, bool knot_class, bool whitehead, const Options& opt,
                 std::ostream& out) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto result = recheck_certificate(text);
    if (opt.json) {
      out << ordered_json{{"ok", result.ok}, {"problems", result.problems}}.dump(2) << '\n';
    } else {
      out << (result.ok ? "valid certificate" : "invalid certificate") << '\n';
      for (const auto& p : result.problems) out << "  " << p << '\n';
    }
    return result.ok ? kExitOk : kExitMath;
  }

  const CfkComplex c = deserialize(text);
  if (whitehead) {
    const auto report = check_whitehead_model(c);
    out << report.to_text();
    return report.passed() ? kExitOk : kExitMath;
  }
  const auto report = validate(c, knot_class);
  out << (opt.json ? report.to_json() + "\n" : report.to_text());
  return report.valid() ? kExitOk : kExitMath;
}

int cmd_tau_cable(int p, int q, int t, int e, const Options& opt, std::ostream& out) {
  const int value = cable_tau(t, e, p, q);
  if (opt.json) {
    out << ordered_json{{"p", p}, {"q", q}, {"tau", t}, {"epsilon", e}, {"cable_tau", value}}.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot Floer concordance calculator", "kfc"};
  app.require_subcommand(1);

  Options opt;
  std::string expr_a;
  std::string expr_b;
  std::vector<std::string> exprs;
  std::string file;
  std::string emit;
  std::string format = "ascii";
  std::string recheck;
  int evidence = 0;
  bool no_knot_class = false;
  bool whitehead = false;
  int p = 0;
  int q = 0;
  int cable_t = 0;
  int cable_e = 0;

  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable output"); };

  auto* inv = app.add_subcommand("invariants", "tau, epsilon, a1, a2 of a knot or complex");
  inv->add_option("knot", expr_a, "Knot expression, or @file.cfk");
  inv->add_option("--file", file, "Read a cfk v1 complex instead of an expression");
  inv->add_option("--emit-cfk", emit, "Write the class representative in cfk v1 format");
  add_json(inv);

  auto* cmp = app.add_subcommand("cmp", "Compare two classes in the totally ordered group");
  cmp->add_option("left", expr_a)->required();
  cmp->add_option("right", expr_b)->required();
  add_json(cmp);

  auto* dom = app.add_subcommand("dominates", "Try to prove K >> J from a1 and a2");
  dom->add_option("K", expr_a)->required();
  dom->add_option("J", expr_b)->required();
  dom->add_option("--evidence", evidence, "Also test epsilon(K - nJ) = 1 for n = 1..N")->check(CLI::NonNegativeNumber);
  add_json(dom);

  auto* ind = app.add_subcommand("independence", "Build a linear independence certificate");
  ind->add_option("knots", exprs, "Knot expressions");
  ind->add_option("--out", opt.out_file, "Save the certificate JSON");
  ind->add_option("--recheck", recheck, "Recompute every witness in a saved certificate");
  add_json(ind);

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("knot", expr_a)->required();
  add_json(alex);

  auto* show = app.add_subcommand("show", "Draw the class representative");
  show->add_option("knot", expr_a, "Knot expression, or @file.cfk")->required();
  show->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  show->add_option("--out", opt.out_file, "Write the drawing to a file");

  auto* val = app.add_subcommand("validate", "Check a cfk v1 file or a certificate");
  val->add_option("file", file)->required();
  val->add_flag("--no-knot-class", no_knot_class, "Skip the rank-one column/row check");
  val->add_flag("--whitehead", whitehead, "Check the file as a model of the Whitehead double D");
  add_json(val);

  auto* cab = app.add_subcommand("tau-cable", "tau of a (p, q) cable from tau and epsilon of the companion");
  cab->add_option("p", p)->required();
  cab->add_option("q", q)->required();
  cab->add_option("--tau", cable_t)->required();
  cab->add_option("--epsilon", cable_e)->required();
  add_json(cab);

  std::vector<std::string> argv_storage{"kfc"};
  for (const auto& a : args) argv_storage.push_back(shield_mirror(a));
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*inv) {
      if (expr_a.empty() == file.empty()) throw InputError("give exactly one of a knot expression or --file");
      return cmd_invariants(expr_a, file, emit, opt, out);
    }
    if (*cmp) return cmd_cmp(expr_a, expr_b, opt, out);
    if (*dom) return cmd_dominates(expr_a, expr_b, evidence, opt, out);
    if (*ind) return cmd_independence(exprs, recheck, opt, out, err);
    if (*alex) return cmd_alexander(expr_a, opt, out);
    if (*show) return cmd_show(expr_a, format, opt, out);
    if (*val) return cmd_validate(file, !no_knot_class, whitehead, opt, out);
    if (*cab) return cmd_tau_cable(p, q, cable_t, cable_e, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedExpression& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitInput;
  } catch (const InconsistentInput& e) {
    err << "inconsistent input: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "failed: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitInput;
}

}  // namespace kfc::cli
