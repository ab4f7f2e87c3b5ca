#ifndef SCORONA_TOOLS_CLI_HPP
#define SCORONA_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scorona/scorona.hpp"

namespace scorona::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

inline json coeffs_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_fraction_string(c));
  return a;
}

inline json poly_json(const Polynomial& p) { return {{"pretty", p.to_string()}, {"coeffs", coeffs_json(p)}}; }

inline json ratfun_json(const RationalFunction& r) {
  return {{"pretty", r.to_string()}, {"numerator", coeffs_json(r.num())}, {"denominator", coeffs_json(r.den())}};
}

inline json factored_json(const FactoredPoly& fp) {
  json j = poly_json(fp.expanded);
  json factors = json::array();
  for (const auto& f : fp.factors) {
    json fj = ratfun_json(f.value);
    fj["label"] = f.label;
    fj["multiplicity"] = f.multiplicity;
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  return j;
}

inline void emit(Output& o, const std::string& command, json inputs, json results) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  o.out << doc.dump(2) << '\n';
}

inline std::string marking_string(const Marking& mu) {
  std::string s;
  for (Sign m : mu) {
    if (!s.empty()) s += ' ';
    s += to_char(m);
  }
  return s;
}

inline CoronaSpec load_spec(const std::string& base_file, const std::vector<std::string>& sat_files, bool uniform) {
  CoronaSpec spec;
  spec.base = read_graph_file(base_file);
  if (uniform) {
    if (sat_files.size() != 1) throw DimensionMismatch("--uniform takes exactly one satellite file");
    spec.satellites.assign(spec.base.order(), read_graph_file(sat_files[0]));
  } else {
    for (const auto& f : sat_files) spec.satellites.push_back(read_graph_file(f));
  }
  spec.validate();
  return spec;
}

inline int cmd_stats(const std::string& file, Output& o) {
  const SignedGraph g = read_graph_file(file);
  const Marking mu = marking_of(g);
  const EdgeClassCounts cls = edge_class_counts(g);
  const TriadCensus tri = triad_census(g);
  const BalanceResult bal = is_balanced(g);
  if (o.json) {
    auto mark_json = [](const MarkClassCounts& m) { return json{{"pp", m.pp}, {"pm", m.pm}, {"mm", m.mm}}; };
    json marking = json::array();
    for (Sign m : mu) marking.push_back(to_int(m));
    json results{{"vertices", g.order()},
                 {"edges", g.size()},
                 {"positive", g.count(Sign::positive)},
                 {"negative", g.count(Sign::negative)},
                 {"marking", marking},
                 {"edge_classes", {{"positive", mark_json(cls.positive)}, {"negative", mark_json(cls.negative)}}},
                 {"triads", {tri.t0, tri.t1, tri.t2, tri.t3}},
                 {"balanced", bal.balanced}};
    if (!bal.balanced) results["unbalanced_cycle"] = bal.cycle;
    emit(o, "stats", {{"file", file}}, std::move(results));
    return kOk;
  }
  o.out << "vertices: " << g.order() << '\n'
        << "edges: " << g.size() << " (positive " << g.count(Sign::positive) << ", negative "
        << g.count(Sign::negative) << ")\n"
        << "marking: " << marking_string(mu) << '\n'
        << "positive edges by endpoint marks: ++ " << cls.positive.pp << ", +- " << cls.positive.pm << ", -- "
        << cls.positive.mm << '\n'
        << "negative edges by endpoint marks: ++ " << cls.negative.pp << ", +- " << cls.negative.pm << ", -- "
        << cls.negative.mm << '\n'
        << "triads: T0 " << tri.t0 << ", T1 " << tri.t1 << ", T2 " << tri.t2 << ", T3 " << tri.t3 << " (total "
        << tri.total() << ")\n";
  if (bal.balanced) {
    o.out << "BALANCED\n";
  } else {
    o.out << "UNBALANCED (negative cycle:";
    for (auto v : bal.cycle) o.out << ' ' << v;
    o.out << ")\n";
  }
  return kOk;
}

inline int cmd_corona(const std::string& base_file, const std::vector<std::string>& sat_files,
                      const std::string& out_file, bool uniform, Output& o) {
  const CoronaSpec spec = load_spec(base_file, sat_files, uniform);
  const CoronaProduct prod = generalized_corona(spec);
  write_graph_file(out_file, prod.graph);
  auto range_string = [](const IndexRange& r) {
    if (r.size() == 0) return std::string("(none)");
    return std::to_string(r.begin) + ".." + std::to_string(r.end - 1);
  };
  if (o.json) {
    json sats = json::array();
    for (const auto& r : prod.layout.satellites) sats.push_back({r.begin, r.end});
    emit(o, "corona", {{"base", base_file}, {"satellites", sat_files}, {"uniform", uniform}, {"out", out_file}},
         {{"vertices", prod.graph.order()},
          {"edges", prod.graph.size()},
          {"layout", {{"base", {prod.layout.base.begin, prod.layout.base.end}}, {"satellites", sats}}}});
    return kOk;
  }
  o.out << "wrote " << out_file << " (" << prod.graph.order() << " vertices, " << prod.graph.size() << " edges)\n";
  o.out << "G -> " << range_string(prod.layout.base) << '\n';
  for (std::size_t l = 0; l < prod.layout.satellites.size(); ++l)
    o.out << "H" << l + 1 << " -> " << range_string(prod.layout.satellites[l]) << '\n';
  return kOk;
}

inline int cmd_poly(const std::optional<std::string>& file, const std::vector<std::string>& spec_files, bool uniform,
                    CoronalKind kind, bool factored, Output& o) {
  if (file.has_value() == !spec_files.empty()) throw CLI::ValidationError("poly", "give either FILE or --spec");
  if (factored && file) throw CLI::ValidationError("poly", "--method factored needs --spec BASE SAT...");
  json inputs{{"matrix", kind_name(kind)}, {"method", factored ? "factored" : "direct"}};
  if (file) {
    inputs["file"] = *file;
    const Polynomial p = kind_char_poly(read_graph_file(*file), kind);
    if (o.json) emit(o, "poly", std::move(inputs), poly_json(p));
    else o.out << p.to_string() << '\n';
    return kOk;
  }
  inputs["spec"] = spec_files;
  inputs["uniform"] = uniform;
  const std::vector<std::string> sats(spec_files.begin() + 1, spec_files.end());
  const CoronaSpec spec = load_spec(spec_files[0], sats, uniform);
  const Polynomial direct = corona_polynomial_direct(spec, kind);
  if (!factored) {
    if (o.json) emit(o, "poly", std::move(inputs), poly_json(direct));
    else o.out << direct.to_string() << '\n';
    return kOk;
  }
  const FactoredPoly fp = corona_polynomial(spec, kind);
  const bool agree = fp.expanded == direct;
  if (o.json) {
    json results = factored_json(fp);
    results["agrees_with_direct"] = agree;
    if (!agree) results["direct"] = poly_json(direct);
    emit(o, "poly", std::move(inputs), std::move(results));
  } else {
    o.out << fp.expanded.to_string() << '\n';
    for (const auto& f : fp.factors) {
      o.out << "  " << f.label << " = " << f.value.to_string();
      if (f.multiplicity > 1) o.out << "  (multiplicity " << f.multiplicity << ")";
      o.out << '\n';
    }
    if (!agree) o.out << "MISMATCH: direct computation gives " << direct.to_string() << '\n';
  }
  return agree ? kOk : kFalse;
}

inline int cmd_coronal(const std::string& file, CoronalKind kind, Output& o) {
  const RationalFunction chi = coronal(read_graph_file(file), kind);
  if (o.json) emit(o, "coronal", {{"file", file}, {"kind", kind_name(kind)}}, ratfun_json(chi));
  else o.out << chi.to_string() << '\n';
  return kOk;
}

inline int cmd_cospectral(const std::string& f1, const std::string& f2, CoronalKind kind, Output& o) {
  const bool same = cospectral(read_graph_file(f1), read_graph_file(f2), kind);
  if (o.json) emit(o, "cospectral", {{"files", {f1, f2}}, {"matrix", kind_name(kind)}}, {{"cospectral", same}});
  else o.out << (same ? "COSPECTRAL" : "NOT COSPECTRAL") << '\n';
  return same ? kOk : kFalse;
}

inline int cmd_verify(const VerifyOptions& opt, Output& o) {
  const VerifyReport report = run_verification(opt);
  if (o.json) {
    json suites = json::array();
    for (const auto& s : report.suites) {
      json sj{{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}, {"pass", s.ok()}};
      if (!s.ok()) sj["counterexample"] = s.counterexample;
      suites.push_back(std::move(sj));
    }
    emit(o, "verify",
         {{"seed", opt.seed}, {"trials", opt.trials}, {"max_base", opt.max_base}, {"max_sat", opt.max_sat},
          {"inject_fault", opt.inject_fault}},
         {{"pass", report.ok()}, {"suites", suites}});
  } else {
    for (const auto& s : report.suites) {
      o.out << (s.ok() ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " checks";
      if (!s.ok()) o.out << ", " << s.failed << " failed";
      o.out << ")\n";
      if (!s.ok()) o.out << "  minimized counterexample: " << s.counterexample << '\n';
    }
    o.out << (report.ok() ? "all suites passed" : "verification FAILED") << '\n';
  }
  return report.ok() ? kOk : kFalse;
}

/// Runs a command, mapping input and usage problems to exit code 2 and
/// internal disagreements to 1.
inline int guarded(Output& o, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InternalInconsistency& e) {
    o.err << "error: " << e.what() << '\n';
    return kFalse;
  } catch (const CLI::Error& e) {
    o.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    o.err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Signed graph corona products: balance statistics and exact polynomial factorizations"};
  app.require_subcommand(1);
  Output o{out, err};
  std::string kind_text = "adj";
  const std::vector<std::string> kinds = {"adj", "lap", "qlap"};
  auto kind = [&] { return *parse_kind(kind_text); };

  std::string file, file2, out_file;
  std::vector<std::string> files;
  bool uniform = false;

  auto* stats = app.add_subcommand("stats", "Edge, marking, triad and balance statistics of a graph file");
  stats->add_option("FILE", file, "graph file")->required();
  stats->add_flag("--json", o.json, "emit JSON");

  auto* corona_cmd = app.add_subcommand("corona", "Write the generalized corona product of a base and satellites");
  corona_cmd->add_option("BASE", file, "base graph file")->required();
  corona_cmd->add_option("SATELLITES", files, "one satellite file per base vertex (or one with --uniform)")
      ->required();
  corona_cmd->add_option("-o,--out", out_file, "output graph file")->required();
  corona_cmd->add_flag("--uniform", uniform, "reuse the single satellite for every base vertex");
  corona_cmd->add_flag("--json", o.json, "emit JSON");

  std::optional<std::string> poly_file;
  std::string method = "direct";
  auto* poly = app.add_subcommand("poly", "Characteristic, Laplacian or signless Laplacian polynomial");
  poly->add_option("FILE", poly_file, "graph file");
  poly->add_option("--spec", files, "BASE SAT...: corona spec instead of a flat file")->expected(2, 1 << 20);
  poly->add_option("--matrix", kind_text, "adj, lap or qlap")->check(CLI::IsMember(kinds));
  poly->add_option("--method", method, "direct or factored")->check(CLI::IsMember({"direct", "factored"}));
  poly->add_flag("--uniform", uniform, "with --spec: one satellite reused for every base vertex");
  poly->add_flag("--json", o.json, "emit JSON");

  auto* coronal_cmd = app.add_subcommand("coronal", "Signed coronal of a graph as a reduced rational function");
  coronal_cmd->add_option("FILE", file, "graph file")->required();
  coronal_cmd->add_option("--kind", kind_text, "adj, lap or qlap")->check(CLI::IsMember(kinds));
  coronal_cmd->add_flag("--json", o.json, "emit JSON");

  auto* cosp = app.add_subcommand("cospectral", "Compare the chosen polynomial of two graphs");
  cosp->add_option("FILE1", file, "graph file")->required();
  cosp->add_option("FILE2", file2, "graph file")->required();
  cosp->add_option("--matrix", kind_text, "adj, lap or qlap")->check(CLI::IsMember(kinds));
  cosp->add_flag("--json", o.json, "emit JSON");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check every factorization and counting identity on random instances");
  verify->add_option("--seed", vopt.seed, "random seed")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "random specs per suite")->capture_default_str();
  verify->add_option("--max-base", vopt.max_base, "largest base order")->capture_default_str()->check(
      CLI::Range(1, 12));
  verify->add_option("--max-sat", vopt.max_sat, "largest satellite order")->capture_default_str()->check(
      CLI::Range(0, 12));
  verify->add_flag("--inject-fault", vopt.inject_fault, "corrupt one coronal in the factored path (self-test)");
  verify->add_flag("--json", o.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kUsage;
  }

  if (stats->parsed()) return guarded(o, [&] { return cmd_stats(file, o); });
  if (corona_cmd->parsed()) return guarded(o, [&] { return cmd_corona(file, files, out_file, uniform, o); });
  if (poly->parsed())
    return guarded(o, [&] { return cmd_poly(poly_file, files, uniform, kind(), method == "factored", o); });
  if (coronal_cmd->parsed()) return guarded(o, [&] { return cmd_coronal(file, kind(), o); });
  if (cosp->parsed()) return guarded(o, [&] { return cmd_cospectral(file, file2, kind(), o); });
  return guarded(o, [&] { return cmd_verify(vopt, o); });
}

}  // namespace scorona::cli

#endif  // SCORONA_TOOLS_CLI_HPP
