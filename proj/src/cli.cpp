#include "sepkit/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sepkit/ehrhart.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/gamma_family.hpp"
#include "sepkit/identities.hpp"
#include "sepkit/io.hpp"
#include "sepkit/triangulation.hpp"

namespace sepkit {

namespace {

struct RunConfig {
  std::string input;
  std::string engine = "triangulation";
  std::string order;
  double budget_bases = 2e8;
  double budget_box = 5e7;
  unsigned workers = 0;
  std::string format = "json";
  std::string cache_dir;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--order", cfg.order, "element order, weakest first, comma-separated labels");
  cmd->add_option("--budget-bases", cfg.budget_bases, "cap on bases x orientations and visited faces")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-box", cfg.budget_box, "cap on lattice points enumerated per dilate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", cfg.workers, "worker threads, 0 for all cores");
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--cache-dir", cfg.cache_dir, "lattice-point count cache (SEPKIT_CACHE overrides)");
}

TriangulationOptions tri_options(const RunConfig& cfg) { return {cfg.budget_bases, cfg.workers}; }
EhrhartOptions box_options(const RunConfig& cfg) { return {cfg.budget_box, cfg.workers}; }

VariableOrder order_for(const Input& in, const RunConfig& cfg) {
  if (cfg.order.empty()) return in.gamma ? gamma_order(*in.gamma) : VariableOrder::ground(in.matroid.size());
  std::vector<int> elements;
  std::stringstream ss(cfg.order);
  std::string label;
  while (std::getline(ss, label, ',')) {
    const auto e = in.matroid.find(label);
    if (!e) throw InputError("--order names unknown element \"" + label + "\"");
    if (std::find(elements.begin(), elements.end(), *e) != elements.end()) {
      throw InputError("--order repeats \"" + label + "\"");
    }
    elements.push_back(*e);
  }
  // Unlisted elements follow in ground order.
  for (int e = 0; e < in.matroid.size(); ++e)
    if (std::find(elements.begin(), elements.end(), e) == elements.end()) elements.push_back(e);
  return VariableOrder(std::move(elements));
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string vec(const IntPolynomial& p) { return to_vector_string(p); }

// hstar --------------------------------------------------------------------

int cmd_hstar(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load_input(cfg.input);
  std::vector<std::string> engines;
  if (cfg.engine == "all") {
    engines = {"ehrhart", "triangulation"};
    if (in.gamma) engines.emplace_back("closed");
  } else {
    engines = {cfg.engine};
  }

  std::vector<std::pair<std::string, HstarRecord>> results;
  Integer facets = -1;
  for (const auto& engine : engines) {
    if (engine == "ehrhart") {
      const CountCache cache(cfg.cache_dir);
      EhrhartData data = cached_ehrhart_data(sep_of(in.matroid), cache, box_options(cfg));
      results.emplace_back(engine, make_record(data.dim, data.hstar, data.counts));
    } else if (engine == "triangulation") {
      if (in.matroid.rank() == 0) throw InputError("triangulation needs positive rank");
      TriangulationSummary s = triangulate(in.matroid, order_for(in, cfg), tri_options(cfg));
      facets = s.facet_count;
      results.emplace_back(engine, make_record(in.matroid.rank(), s.h_vector));
    } else if (engine == "closed") {
      if (!in.gamma) throw InputError("the closed engine only applies to gamma:n inputs");
      results.emplace_back(engine, make_record(2 * in.gamma->n, closed_hstar(in.gamma->n)));
    }
  }

  const HstarRecord& primary = results.front().second;
  bool agree = true;
  for (const auto& [name, r] : results) agree = agree && r.hstar == primary.hstar && r.dim == primary.dim;

  if (cfg.format == "csv") {
    out << record_csv(primary, in.name);
  } else if (cfg.format == "text") {
    out << "input: " << in.name << "\ndim: " << primary.dim << "\nh*: " << vec(primary.hstar) << '\n';
    if (primary.gamma) out << "gamma: " << to_vector_string(*primary.gamma) << '\n';
    out << "volume: " << to_string(primary.volume()) << "\nsymmetric: " << primary.predicates.symmetric
        << "\nunimodal: " << primary.predicates.unimodal
        << "\ngamma_nonnegative: " << primary.predicates.gamma_nonnegative << '\n';
    for (const auto& [name, r] : results) out << "engine " << name << ": " << vec(r.hstar) << '\n';
  } else {
    Json doc;
    doc["format"] = kFormatHeader;
    doc["input"] = in.name;
    doc.update(record_json(primary));
    if (facets >= 0) doc["facets"] = integer_json(facets);
    Json per = Json::object();
    for (const auto& [name, r] : results) per[name] = polynomial_json(r.hstar);
    doc["engines"] = std::move(per);
    doc["agree"] = agree;
    emit(out, doc);
  }
  if (!agree) {
    err << "engines disagree:\n";
    for (const auto& [name, r] : results) err << "  " << name << ": dim " << r.dim << ", h* " << vec(r.hstar) << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

// verify -------------------------------------------------------------------

struct VerifyConfig {
  std::string kind;
  std::vector<std::string> inputs;
  std::string edge;
  std::string point = "e1";
  int n = 3;
  int lmax = -1;
  int nmax = -1;
};

Json check_json(const ProductCheck& c) {
  return Json{{"identity", c.identity},
              {"lhs", polynomial_json(c.lhs)},
              {"rhs", polynomial_json(c.rhs)},
              {"holds", c.holds}};
}

Json report_json(const IdentityReport& r) {
  Json range = Json::object();
  for (const auto& [k, v] : r.range) range[k] = v;
  Json viol = Json::array();
  // Long sweeps can fail everywhere; the first hundred witnesses suffice.
  for (std::size_t i = 0; i < r.violations.size() && i < 100; ++i) viol.push_back(r.violations[i]);
  return Json{{"identity", r.identity},
              {"range", std::move(range)},
              {"cases", r.cases},
              {"violation_count", r.violations.size()},
              {"violations", std::move(viol)}};
}

void need_inputs(const VerifyConfig& v, std::size_t k) {
  if (v.inputs.size() != k) {
    throw InputError("verify " + v.kind + " takes " + std::to_string(k) + " input(s)");
  }
}

// Renames labels of m2 that collide with m1, except the basepoint.
Matroid separate_labels(const Matroid& m1, const Matroid& m2, const std::string& keep) {
  Relabeling renames;
  for (const auto& label : m2.labels()) {
    if (label == keep || !m1.find(label)) continue;
    std::string fresh = label + "'";
    while (m1.find(fresh) || m2.find(fresh)) fresh += "'";
    renames.emplace_back(label, fresh);
  }
  return relabel(m2, renames);
}

int cmd_verify(const RunConfig& cfg, const VerifyConfig& v, std::ostream& out, std::ostream& err) {
  Json doc;
  doc["format"] = kFormatHeader;
  doc["verify"] = v.kind;
  bool ok = true;
  if (v.kind == "identities") {
    need_inputs(v, 0);
    IdentitySweep sweep;
    if (v.lmax >= 0) sweep.hodai_lmax = sweep.f_lmax = v.lmax;
    if (v.nmax >= 0) sweep.nmax = sweep.binom_limit = v.nmax;
    Json reports = Json::array();
    for (const auto& r : run_identity_suite(sweep)) {
      ok = ok && r.ok();
      reports.push_back(report_json(r));
    }
    doc["reports"] = std::move(reports);
  } else if (v.kind == "contraction" || v.kind == "free-sum" || v.kind == "parallel") {
    ProductCheck check;
    if (v.kind == "contraction") {
      need_inputs(v, 1);
      const Input in = load_input(v.inputs[0]);
      const int e = v.edge.empty() ? 0 : in.matroid.element(v.edge);
      check = contraction_check(in.matroid, e, box_options(cfg));
      doc["element"] = in.matroid.label(e);
    } else if (v.kind == "free-sum") {
      need_inputs(v, 2);
      const Input a = load_input(v.inputs[0]);
      const Input b = load_input(v.inputs[1]);
      check = free_sum_check(a.matroid, b.matroid, box_options(cfg));
    } else {
      need_inputs(v, 2);
      const Input a = load_input(v.inputs[0]);
      const Input b = load_input(v.inputs[1]);
      check = parallel_check(a.matroid, separate_labels(a.matroid, b.matroid, v.point), v.point, box_options(cfg));
      doc["point"] = v.point;
    }
    doc["inputs"] = v.inputs;
    doc["check"] = check_json(check);
    ok = check.holds;
  } else if (v.kind == "trees") {
    need_inputs(v, 0);
    const GammaGraph g = gamma_graph(v.n);
    GammaTreeOptions opts;
    opts.workers = cfg.workers;
    std::vector<OrientedSet> trees = triangulating_trees(g, opts);
    std::vector<OrientedSet> facets = enumerate_facets(cycle_matroid(g.graph), gamma_order(g), tri_options(cfg));
    const IntPolynomial pointing = hstar_by_pointing(g.graph, g.u(1), trees);
    const IntPolynomial closed = closed_hstar(v.n);
    std::sort(trees.begin(), trees.end());
    std::sort(facets.begin(), facets.end());
    const Integer volume = closed_volume(v.n);
    const bool count_ok = Integer(static_cast<long>(trees.size())) == volume;
    const bool facets_ok = trees == facets;
    const bool pointing_ok = pointing == closed;
    const bool gamma_ok = gamma_from_hstar(closed) == to_rational(closed_gamma(v.n));
    ok = count_ok && facets_ok && pointing_ok && gamma_ok;
    doc["n"] = v.n;
    doc["trees"] = trees.size();
    doc["closed_volume"] = integer_json(volume);
    doc["facets_match"] = facets_ok;
    doc["pointing_hstar"] = polynomial_json(pointing);
    doc["closed_hstar"] = polynomial_json(closed);
    doc["closed_gamma"] = polynomial_json(closed_gamma(v.n));
    doc["gamma_matches"] = gamma_ok;
  } else if (v.kind == "summands") {
    need_inputs(v, 0);
    GammaTreeOptions opts;
    opts.workers = cfg.workers;
    const SummandAudit audit = summand_audit(v.n, opts);
    ok = audit.ok();
    Json buckets = Json::array();
    for (const auto& b : audit.buckets) {
      Json row{{"bucket", b.key}, {"expected", integer_json(b.expected)}, {"observed", integer_json(b.observed)}};
      if (!b.witness.empty()) row["witness"] = b.witness;
      buckets.push_back(std::move(row));
    }
    doc["n"] = v.n;
    doc["oriented_trees"] = audit.oriented_trees;
    doc["buckets"] = std::move(buckets);
    doc["failures"] = audit.failures;
  } else {
    throw InputError("unknown verify target \"" + v.kind + "\"");
  }
  doc["ok"] = ok;
  if (cfg.format == "text") {
    out << "verify " << v.kind << ": " << (ok ? "ok" : "FAILED") << '\n';
  } else {
    emit(out, doc);
  }
  if (!ok) err << "verify " << v.kind << " found violations\n";
  return ok ? kExitOk : kExitDisagreement;
}

// trees --------------------------------------------------------------------

std::string kind_text(PairKind k) {
  return k == PairKind::alpha ? "alpha" : k == PairKind::beta ? "beta" : "chordless";
}

std::string classification_text(const TreeClassification& c) {
  std::ostringstream s;
  s << "c=" << c.c << " eps=" << c.eps;
  if (c.tilde_pair) s << " tilde=" << kind_text(c.tilde_pair->kind);
  s << " pairs=";
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const auto& p = c.pairs[i];
    if (i != 0) s << ',';
    s << p.triangle << (p.side == Side::left ? 'L' : 'R') << ':' << kind_text(p.kind);
  }
  return s.str();
}

int cmd_trees(const RunConfig& cfg, bool classify_trees, std::ostream& out) {
  const Input in = load_input(cfg.input);
  if (!in.graph) throw InputError("trees needs a graph input");
  if (classify_trees && !in.gamma) throw InputError("--classify applies to gamma:n inputs");
  if (!in.graph->is_connected()) throw InputError("trees needs a connected graph");
  const std::vector<OrientedSet> facets = enumerate_facets(in.matroid, order_for(in, cfg), tri_options(cfg));
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& f : facets) {
      Json row{{"tree", format_oriented(in.matroid, f)}, {"away", edges_pointing_away(*in.graph, 0, f)}};
      if (classify_trees) row["class"] = classification_text(classify(f, *in.gamma));
      rows.push_back(std::move(row));
    }
    emit(out, Json{{"format", kFormatHeader}, {"input", in.name}, {"count", facets.size()}, {"trees", std::move(rows)}});
  } else {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    if (cfg.format == "csv") out << "tree,away" << (classify_trees ? ",class" : "") << '\n';
    for (const auto& f : facets) {
      out << format_oriented(in.matroid, f) << sep << edges_pointing_away(*in.graph, 0, f);
      if (classify_trees) out << sep << classification_text(classify(f, *in.gamma));
      out << '\n';
    }
  }
  return kExitOk;
}

// table --------------------------------------------------------------------

int cmd_table(const RunConfig& cfg, int nmax, int check, std::ostream& out, std::ostream& err) {
  Json rows = Json::array();
  bool all_agree = true;
  std::ostringstream csv;
  csv << "n,volume,hstar,gamma,engines_agree\n";
  for (int n = 1; n <= nmax; ++n) {
    const IntPolynomial h = closed_hstar(n);
    const IntPolynomial gamma = closed_gamma(n);
    std::string agree = "unchecked";
    if (n <= check) {
      GammaTreeOptions opts;
      opts.workers = cfg.workers;
      const GammaGraph g = gamma_graph(n);
      const auto trees = triangulating_trees(g, opts);
      const bool same = hstar_by_pointing(g.graph, g.u(1), trees) == h &&
                        triangulate(cycle_matroid(g.graph), gamma_order(g), tri_options(cfg)).h_vector == h;
      agree = same ? "true" : "false";
      all_agree = all_agree && same;
    }
    rows.push_back(Json{{"n", n},
                        {"volume", integer_json(closed_volume(n))},
                        {"hstar", polynomial_json(h)},
                        {"gamma", polynomial_json(gamma)},
                        {"engines_agree", agree}});
    auto join = [](const IntPolynomial& p) {
      std::string s;
      for (const auto& c : p.coefficients()) s += (s.empty() ? "" : " ") + to_string(c);
      return s;
    };
    csv << n << ',' << to_string(closed_volume(n)) << ',' << join(h) << ',' << join(gamma) << ',' << agree << '\n';
  }
  if (cfg.format == "json") {
    emit(out, Json{{"format", kFormatHeader}, {"rows", std::move(rows)}});
  } else {
    out << csv.str();
  }
  if (!all_agree) {
    err << "closed formula and enumeration disagree\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart h*-polynomials and gamma-vectors of generalized symmetric edge polytopes", "sepkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* hstar = app.add_subcommand("hstar", "h*-polynomial, gamma-vector and volume of an input");
  hstar->add_option("input", cfg.input, "builtin (gamma:n, dual-k3n:n, cycle:n, complete-bipartite:m,n) or file")
      ->required();
  hstar->add_option("--engine", cfg.engine, "engine")
      ->check(CLI::IsMember({"ehrhart", "triangulation", "closed", "all"}));
  add_common(hstar, cfg);

  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "check identities, product formulas and the gamma family");
  verify->add_option("kind", vcfg.kind, "identities | contraction | free-sum | parallel | trees | summands")
      ->required()
      ->check(CLI::IsMember({"identities", "contraction", "free-sum", "parallel", "trees", "summands"}));
  verify->add_option("inputs", vcfg.inputs, "inputs for product checks");
  verify->add_option("--edge", vcfg.edge, "element to contract (default: the first)");
  verify->add_option("--point", vcfg.point, "basepoint label for parallel connection");
  verify->add_option("--n", vcfg.n, "gamma family parameter")->check(CLI::Range(1, 8));
  verify->add_option("--lmax", vcfg.lmax, "largest l for the series identities")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", vcfg.nmax, "largest n and binomial parameter")->check(CLI::NonNegativeNumber);
  add_common(verify, cfg);

  bool classify_trees = false;
  auto* trees = app.add_subcommand("trees", "list the facets of a graph's triangulation as oriented trees");
  trees->add_option("input", cfg.input, "graph builtin or file")->required();
  trees->add_flag("--classify", classify_trees, "classify gamma-family trees");
  add_common(trees, cfg);
  trees->get_option("--format")->default_str("text");

  int table_nmax = 8;
  int table_check = 4;
  auto* table = app.add_subcommand("table", "closed-form rows for the gamma family");
  table->add_option("--nmax", table_nmax, "largest n")->check(CLI::Range(1, 60));
  table->add_option("--check", table_check, "cross-check by enumeration up to this n")->check(CLI::Range(0, 8));
  add_common(table, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (trees->parsed() && trees->get_option("--format")->count() == 0) cfg.format = "text";

  try {
    if (hstar->parsed()) return cmd_hstar(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, vcfg, out, err);
    if (trees->parsed()) return cmd_trees(cfg, classify_trees, out);
    if (table->parsed()) return cmd_table(cfg, table_nmax, table_check, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotTotallyUnimodular& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace sepkit
