// hyparr: generate arrangements, analyze tope graphs, search for
// Hamiltonian circuits and matchings, run certificate checks, export graphs.
//
// Exit codes: 0 success or certified, 2 not applicable or unknown, 1 error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "hyparr/alternating.hpp"
#include "hyparr/certify.hpp"
#include "hyparr/generators.hpp"
#include "hyparr/io.hpp"
#include "hyparr/topes.hpp"

namespace {

using namespace hyparr;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  bool json = false;
  std::string output;
  std::string dot;
};

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::string> alphas;
  std::vector<std::string> inputs;
  std::size_t extra = 1;
  std::uint64_t search_budget = 1000;
  std::string report;
  bool enumerate = false;
};

struct CheckOptions {
  std::string file;
  std::string theorem = "all";
  std::optional<std::size_t> hyperplane;
  bool construct = false;
  bool search = false;
  std::string format = "dot";
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(opt.output, text);
  }
}

std::size_t need(std::size_t value, const char* flag) {
  if (value == 0) throw CLI::ValidationError(flag, "required and must be positive for this family");
  return value;
}

std::vector<Rational> parse_alphas(const std::vector<std::string>& raw, std::size_t n) {
  std::vector<Rational> alphas;
  for (const auto& s : raw) alphas.push_back(parse_rational(s));
  if (alphas.empty()) {
    for (std::size_t i = 0; i < n; ++i) alphas.emplace_back(static_cast<long>(i) - static_cast<long>(n / 2));
  }
  return alphas;
}

int cmd_gen(const Options& opt, const GenOptions& g) {
  std::optional<ArrangementFile> file;
  Json report;
  const std::string& f = g.family;
  if (f == "cube") {
    file = ArrangementFile{cube_arrangement(need(g.n, "--n")), Json{{"name", "cube"}, {"n", g.n}}};
    report = {{"provenance", "cube n=" + std::to_string(g.n)}, {"predicted_signed_oe", 0}};
  } else if (f == "coxeter-a") {
    file = ArrangementFile{coxeter_A(need(g.n, "--n")), Json{{"name", "coxeter-a"}, {"n", g.n}}};
    report = {{"provenance", "coxeter-a n=" + std::to_string(g.n)}, {"predicted_signed_oe", 0}};
  } else if (f == "alternating") {
    const std::size_t n = need(g.n, "--n");
    const std::size_t d = need(g.d, "--d");
    auto alphas = parse_alphas(g.alphas, n);
    Json raw = Json::array();
    for (const auto& a : alphas) raw.push_back(format_rational(a));
    file = ArrangementFile{realize(n, d, alphas),
                           Json{{"name", "alternating"}, {"n", n}, {"d", d}, {"alphas", raw}}};
    const long predicted = n % 2 == 0 && d % 2 == 1 ? static_cast<long>(oe_formula(n, d)) : 0;
    report = {{"provenance", "alternating n=" + std::to_string(n) + " d=" + std::to_string(d)},
              {"predicted_oe", predicted}};
  } else if (f == "product") {
    if (g.inputs.empty()) throw CLI::ValidationError("--input", "product needs factor files");
    std::vector<Arrangement> factors;
    for (const auto& path : g.inputs) factors.push_back(read_arrangement_file(path).arrangement);
    auto r = product_construction(factors);
    file = ArrangementFile{r.arrangement, Json{{"name", "product"}, {"factors", g.inputs}}};
    report = report_to_json(r);
  } else if (f == "cylinder-lift") {
    if (g.inputs.size() != 1) throw CLI::ValidationError("--input", "cylinder-lift needs one file");
    auto base = read_arrangement_file(g.inputs[0]).arrangement;
    file = ArrangementFile{cylinder_lift(base, need(g.extra, "--extra")),
                           Json{{"name", "cylinder-lift"}, {"extra", g.extra}}};
    report = {{"provenance", "cylinder lift by " + std::to_string(g.extra)},
              {"predicted_signed_oe", signed_oe(enumerate_topes(base))}};
  } else if (f == "planar-seed") {
    auto seed = planar_seed_search(need(g.n, "--n"), g.search_budget, opt.seed);
    file = ArrangementFile{seed.arrangement, Json{{"name", "planar-seed"}, {"n", g.n}}};
    report = {{"provenance", "planar seed search, budget " + std::to_string(g.search_budget) +
                                 ", seed " + std::to_string(opt.seed)},
              {"predicted_signed_oe", seed.signed_oe}};
  } else if (f == "theorem8") {
    auto assemble = [&]() {
      if (g.inputs.size() == 1) {
        auto input = read_arrangement_file(g.inputs[0]).arrangement;
        if (input.is_central()) return theorem8_assembly(input, opt.seed);
        return theorem8_assembly(PlanarSeed{input, signed_oe(enumerate_topes(input)), input.size()},
                                 opt.seed);
      }
      return theorem8_assembly(planar_seed_search(need(g.n, "--n"), g.search_budget, opt.seed),
                               opt.seed);
    };
    auto r = assemble();
    file = ArrangementFile{r.construction.arrangement, Json{{"name", "theorem8"}}};
    report = extension_to_json(r);
  } else if (f == "random-simple") {
    file = ArrangementFile{random_simple_arrangement(need(g.n, "--n"), need(g.d, "--d"), opt.seed),
                           Json{{"name", "random-simple"}, {"seed", opt.seed}}};
    report = {{"provenance", "random simple, seed " + std::to_string(opt.seed)}};
  } else {
    throw CLI::ValidationError("family", "unknown family '" + f + "'");
  }

  const auto& arr = file->arrangement;
  report["n"] = arr.size();
  report["dim"] = arr.dim();
  if (g.enumerate) {
    auto topes = enumerate_topes(arr);
    report["topes"] = topes.size();
    report["signed_oe"] = signed_oe(topes);
  }
  if (!g.report.empty()) write_text_file(g.report, dump(report));

  if (opt.output.empty() && !opt.json) {
    std::cout << dump(to_json(*file));
    return kOk;
  }
  if (!opt.output.empty()) write_text_file(opt.output, dump(to_json(*file)));
  if (opt.json) {
    std::cout << dump(report);
  } else {
    std::cout << "n = " << arr.size() << ", d = " << arr.dim() << ", "
              << (arr.is_central() ? "central" : "affine");
    if (g.enumerate) std::cout << ", topes = " << report["topes"] << ", signed oe = " << report["signed_oe"];
    std::cout << "\n";
  }
  return kOk;
}

int cmd_analyze(const Options& opt, const CheckOptions& c) {
  auto file = read_arrangement_file(c.file);
  const auto& arr = file.arrangement;
  auto g = build_graph(arr);
  Json j = {{"n", arr.size()},
            {"dim", arr.dim()},
            {"central", arr.is_central()},
            {"topes", g.vertex_count()},
            {"edges", g.edge_count()},
            {"burnt_umber", g.burnt_umber_count()},
            {"chartreuse", g.chartreuse_count()},
            {"oe", oe_invariant(g)},
            {"signed_oe", signed_oe(g.topes())},
            {"simple", is_simple(arr)},
            {"centrally_simple", is_centrally_simple(arr)}};
  Json per = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Json row = {{"index", i}, {"deletion_oe", oe_invariant(deletion(arr, i))}};
    row["restriction_topes"] =
        arr.dim() == 1 ? Json(1) : Json(enumerate_topes(restriction(arr, i)).size());
    per.push_back(row);
  }
  j["hyperplanes"] = per;
  if (!opt.dot.empty()) write_text_file(opt.dot, graph_to_dot(g));

  if (opt.json) {
    emit(opt, dump(j));
    return kOk;
  }
  std::ostringstream out;
  out << "hyperplanes: " << arr.size() << " in R^" << arr.dim() << (arr.is_central() ? " (central)" : " (affine)")
      << "\n"
      << "topes: " << g.vertex_count() << ", edges: " << g.edge_count() << "\n"
      << "burnt umber: " << g.burnt_umber_count() << ", chartreuse: " << g.chartreuse_count() << "\n"
      << "odd-even invariant: " << j["oe"] << ", signed: " << j["signed_oe"] << "\n"
      << "simple: " << (j["simple"].get<bool>() ? "yes" : "no")
      << ", centrally simple: " << (j["centrally_simple"].get<bool>() ? "yes" : "no") << "\n"
      << "H  deletion_oe  restriction_topes\n";
  for (const auto& row : per) {
    out << row["index"] << "  " << row["deletion_oe"] << "  " << row["restriction_topes"] << "\n";
  }
  emit(opt, out.str());
  return kOk;
}

int cmd_hamilton(const Options& opt, const CheckOptions& c) {
  auto file = read_arrangement_file(c.file);
  auto g = build_graph(file.arrangement);
  if (c.construct) {
    const auto& fam = file.family;
    if (!fam || fam->value("name", "") != "alternating") {
      throw std::invalid_argument("--construct needs an arrangement generated by 'gen alternating'");
    }
    const auto n = fam->at("n").get<std::size_t>();
    const auto d = fam->at("d").get<std::size_t>();
    std::vector<SignVector> seq;
    if (n % 2 == 1 && n >= 3 && d == 3) {
      seq = ham_circuit_n_3(n);
    } else if (n % 2 == 1 && n >= 3 && d == n - 1) {
      seq = ham_circuit_n_nminus1(n);
    } else {
      throw std::invalid_argument("no construction for alternating n = " + std::to_string(n) +
                                  ", d = " + std::to_string(d) + " (needs n odd and d = 3 or n - 1)");
    }
    auto circuit = circuit_from_topes(g, seq);
    auto check = verify_circuit(g, circuit);
    if (!check) throw std::logic_error("constructed circuit failed verification: " + check.failure);
    auto j = circuit_to_json(g, circuit);
    j["method"] = "construct";
    emit(opt, opt.json || !opt.output.empty() ? dump(j) : "found: circuit of length " +
                                                              std::to_string(circuit.order.size()) + "\n");
    return kOk;
  }

  auto result = find_hamiltonian(g, SearchBudget{opt.budget});
  Json j = {{"method", "search"},
            {"outcome", outcome_name(result.outcome)},
            {"expansions", result.expansions},
            {"reason", result.reason}};
  if (result.circuit) j["circuit"] = circuit_to_json(g, *result.circuit);
  std::string text;
  switch (result.outcome) {
    case SearchOutcome::found:
      text = "found: circuit of length " + std::to_string(result.circuit->order.size()) + "\n";
      break;
    case SearchOutcome::exhausted:
      text = "none" + (result.reason.empty() ? std::string() : " (" + result.reason + ")") + "\n";
      break;
    case SearchOutcome::budget_exceeded:
      text = "unknown (budget of " + std::to_string(opt.budget) + " expansions exhausted)\n";
      break;
  }
  emit(opt, opt.json ? dump(j) : text);
  return result.outcome == SearchOutcome::budget_exceeded ? kInconclusive : kOk;
}

int cmd_match(const Options& opt, const CheckOptions& c) {
  auto g = build_graph(read_arrangement_file(c.file).arrangement);
  auto m = max_matching(g);
  if (opt.json) {
    emit(opt, dump(matching_to_json(g, m)));
  } else {
    emit(opt, "maximum matching: " + std::to_string(m.pairs.size()) + " of " +
                  std::to_string(g.vertex_count()) + " topes, " +
                  (2 * m.pairs.size() == g.vertex_count() ? "perfect" : "not perfect") + "\n");
  }
  return kOk;
}

int cmd_certify(const Options& opt, const CheckOptions& c) {
  auto file = read_arrangement_file(c.file);
  const auto& arr = file.arrangement;
  const SearchBudget budget{opt.budget};
  std::vector<std::pair<std::string, Certificate>> rows;
  std::vector<std::string> skipped;
  const std::string& t = c.theorem;
  const bool all = t == "all";

  auto run = [&](const std::string& kind, auto&& fn) {
    try {
      rows.emplace_back(c.file, fn());
    } catch (const std::invalid_argument& e) {
      if (!all) throw;
      skipped.push_back(kind + ": " + e.what());
    }
  };
  auto per_hyperplane = [&](const std::string& kind, auto&& fn) {
    if (c.hyperplane) {
      run(kind, [&] { return fn(*c.hyperplane); });
    } else {
      for (std::size_t i = 0; i < arr.size(); ++i) run(kind, [&] { return fn(i); });
    }
  };

  if (all || t == "thm1") run("thm1", [&] { return check_thm1(arr, budget); });
  if (all || t == "thm3") run("thm3", [&] { return check_thm3(arr); });
  if (all || t == "thm7") per_hyperplane("thm7", [&](std::size_t i) { return check_thm7(arr, i, budget); });
  if (all || t == "thm9") run("thm9", [&] { return check_thm9(arr); });
  if (all || t == "thm10") run("thm10", [&] { return check_thm10_bound(arr); });
  if (all || t == "thm11") per_hyperplane("thm11", [&](std::size_t i) { return check_thm11(arr, i); });
  if (all || t == "simmons-wetzel") run("simmons-wetzel", [&] { return check_simmons_wetzel(arr); });
  if (rows.empty() && skipped.empty()) throw std::invalid_argument("unknown theorem '" + t + "'");

  bool refuted = false, certified = false;
  for (const auto& [name, cert] : rows) {
    refuted = refuted || cert.verdict == Verdict::refuted;
    certified = certified || cert.verdict == Verdict::certified;
  }
  if (opt.json) {
    Json list = Json::array();
    for (const auto& row : rows) list.push_back(certificate_to_json(row.second));
    emit(opt, dump(Json{{"certificates", list}, {"skipped", skipped}}));
  } else {
    std::string text = certificate_table(rows);
    for (const auto& s : skipped) text += "skipped " + s + "\n";
    emit(opt, text);
  }
  if (refuted) return kError;
  return certified ? kOk : kInconclusive;
}

int cmd_export(const Options& opt, const CheckOptions& c) {
  auto g = build_graph(read_arrangement_file(c.file).arrangement);
  if (c.format == "json" || opt.json) {
    emit(opt, dump(graph_to_json(g)));
  } else if (c.format == "dot") {
    emit(opt, graph_to_dot(g));
  } else {
    throw std::invalid_argument("unknown export format '" + c.format + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperplane arrangement and tope graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  GenOptions gen;
  CheckOptions chk;
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--budget", opt.budget, "Hamiltonian search budget in expansions")->capture_default_str();
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("-o,--output", opt.output, "write the main output to this file");
  app.add_option("--dot", opt.dot, "also write the tope graph in DOT format (analyze)");

  auto* g = app.add_subcommand("gen", "generate an arrangement");
  g->add_option("family", gen.family,
                "cube | coxeter-a | alternating | product | cylinder-lift | planar-seed | theorem8 | "
                "random-simple")
      ->required();
  g->add_option("--n", gen.n, "number of hyperplanes / lines / order");
  g->add_option("--d", gen.d, "dimension (alternating, random-simple)");
  g->add_option("--alphas", gen.alphas, "increasing parameters for alternating")->delimiter(',');
  g->add_option("--input", gen.inputs, "input arrangement file(s)");
  g->add_option("--extra", gen.extra, "extra dimensions for cylinder-lift")->capture_default_str();
  g->add_option("--search-budget", gen.search_budget, "candidates for planar-seed search")
      ->capture_default_str();
  g->add_option("--report", gen.report, "write the construction report JSON here");
  g->add_flag("--enumerate", gen.enumerate, "enumerate topes for the summary");

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", chk.file, "arrangement JSON")->required(); };
  auto* an = app.add_subcommand("analyze", "tope count, colors, invariants, per-hyperplane stats");
  add_file(an);
  auto* ham = app.add_subcommand("hamilton", "construct or search for a Hamiltonian circuit");
  add_file(ham);
  auto* how = ham->add_option_group("method");
  how->add_flag("--construct", chk.construct, "explicit construction (alternating families)");
  how->add_flag("--search", chk.search, "exact backtracking search (default)");
  how->require_option(0, 1);
  auto* ma = app.add_subcommand("match", "maximum matching of the tope graph");
  add_file(ma);
  auto* ce = app.add_subcommand("certify", "run certificate checks");
  add_file(ce);
  ce->add_option("--theorem", chk.theorem,
                 "thm1 | thm3 | thm7 | thm9 | thm10 | thm11 | simmons-wetzel | all")
      ->capture_default_str();
  ce->add_option("--hyperplane", chk.hyperplane, "hyperplane index for thm7 / thm11");
  auto* ex = app.add_subcommand("export", "export the tope graph");
  add_file(ex);
  ex->add_option("--format", chk.format, "dot | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*g) return cmd_gen(opt, gen);
    if (*an) return cmd_analyze(opt, chk);
    if (*ham) return cmd_hamilton(opt, chk);
    if (*ma) return cmd_match(opt, chk);
    if (*ce) return cmd_certify(opt, chk);
    if (*ex) return cmd_export(opt, chk);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
