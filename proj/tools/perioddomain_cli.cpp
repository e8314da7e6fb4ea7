#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "perioddomain/classify.hpp"
#include "perioddomain/verify.hpp"

using json = nlohmann::ordered_json;
using namespace perioddomain;

namespace {

struct GlobalOpts {
  std::string format = "table";
  bool decimal = false;
  bool timing = false;
  std::uint64_t seed = 2026;
  int threads = 1;
};

std::vector<int> parse_marking(const std::string& csv) {
  std::vector<int> m;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) m.push_back(std::stoi(piece));
  return m;
}

// Input datum: either --type/--marking or a JSON file {"type":..,"marking":[..]}.
std::pair<std::string, std::vector<int>> load_datum(const std::string& input_file,
                                                    const std::string& type,
                                                    const std::string& marking) {
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + input_file);
    json j = json::parse(in);
    return {j.at("type").get<std::string>(), j.at("marking").get<std::vector<int>>()};
  }
  if (type.empty()) throw CLI::ValidationError("--type", "a root-system type is required");
  return {type, marking.empty() ? std::vector<int>{} : parse_marking(marking)};
}

std::string coords_str(const RootSystem& rs, int idx) {
  std::string s = "(";
  for (int t = 0; t < rs.rank(); ++t) s += (t ? "," : "") + std::to_string(rs.root(idx)[t]);
  return s + ")";
}

// The report envelope: failures empty <=> exit code 0.
class Report {
 public:
  Report(std::string command, const GlobalOpts& g) : g_(g) {
    j_["command"] = std::move(command);
    j_["inputs"] = json::object();
    j_["results"] = json::object();
    j_["failures"] = json::array();
    start_ = std::chrono::steady_clock::now();
  }
  json& inputs() { return j_["inputs"]; }
  json& results() { return j_["results"]; }
  void fail(const std::string& what) { j_["failures"].push_back(what); }
  bool ok() const { return j_["failures"].empty(); }

  int emit() {
    if (g_.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      j_["timing_ms"] = ms;  // only with --timing; breaks byte-determinism
    }
    if (g_.format == "json") {
      std::cout << j_.dump(1) << "\n";
    } else {
      print_table(j_, 0);
    }
    return ok() ? 0 : 1;
  }

 private:
  static void print_table(const json& j, int depth) {
    std::string pad(std::size_t(depth) * 2, ' ');
    for (auto& [k, v] : j.items()) {
      if (v.is_object()) {
        std::cout << pad << k << ":\n";
        print_table(v, depth + 1);
      } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
        std::cout << pad << k << ":\n";
        for (auto& e : v) {
          print_table(e, depth + 1);
          std::cout << pad << "  -\n";
        }
      } else {
        std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
      }
    }
  }

  GlobalOpts g_;
  json j_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_roots(const GlobalOpts& g, const std::string& type, bool bourbaki) {
  Report rep("roots", g);
  rep.inputs()["type"] = type;
  Normalization norm;
  if (bourbaki) norm.kind = Normalization::bourbaki;
  RootSystem rs = RootSystem::build(parse_type(type), norm);
  rep.results()["rank"] = rs.rank();
  rep.results()["num_roots"] = rs.num_roots();
  rep.results()["num_positive"] = rs.num_positive();
  json pos = json::array();
  for (int i = 0; i < rs.num_positive(); ++i) pos.push_back(coords_str(rs, i));
  rep.results()["positive_roots"] = pos;
  json gram = json::array();
  for (auto& row : rs.gram()) {
    json r = json::array();
    for (auto& v : row) r.push_back(v.str());
    gram.push_back(r);
  }
  rep.results()["gram"] = gram;
  WeylData wd = invariant_degrees(rs.series(), rs.rank());
  rep.results()["weyl_order"] = wd.order;
  rep.results()["invariant_degrees"] = wd.poly_degrees;
  return rep.emit();
}

int cmd_chevalley_verify(const GlobalOpts& g, const std::string& input, const std::string& type,
                         const std::string& marking) {
  Report rep("chevalley-verify", g);
  auto [tname, m] = load_datum(input, type, marking);
  RootSystem rs = RootSystem::build(parse_type(tname));
  if (m.empty()) m.assign(rs.rank(), 1);  // default: the Borel grading
  rep.inputs()["type"] = tname;
  rep.inputs()["marking"] = m;
  WeylBasis wb = WeylBasis::build(std::move(rs));
  HodgeDatum hd = from_marking(wb.roots(), m);
  std::string witness;
  std::int64_t jac = jacobi_violations(wb.chevalley(), &witness);
  rep.results()["jacobi_violations"] = jac;
  if (jac) rep.fail("jacobi: " + witness);
  WeylPropertyReport wr = verify_weyl_properties(wb, hd);
  json clauses = json::array();
  for (auto& c : wr.clauses) {
    json jc;
    jc["clause"] = c.clause;
    jc["checked"] = c.checked;
    jc["passed"] = c.passed;
    if (!c.passed) {
      jc["first_failure"] = c.first_failure;
      rep.fail(c.clause + ": " + c.first_failure);
    }
    clauses.push_back(jc);
  }
  rep.results()["clauses"] = clauses;
  return rep.emit();
}

int cmd_hodge(const GlobalOpts& g, const std::string& input, const std::string& type,
              const std::string& marking) {
  Report rep("hodge", g);
  auto [tname, m] = load_datum(input, type, marking);
  rep.inputs()["type"] = tname;
  rep.inputs()["marking"] = m;
  RootSystem rs = RootSystem::build(parse_type(tname));
  HodgeDatum hd = from_marking(rs, m);
  rep.results()["trivial"] = hd.trivial;
  rep.results()["hermitian_grading"] = is_hermitian_grading(hd);
  json phi = json::array();
  for (int t : hd.phi) phi.push_back("alpha_" + std::to_string(t + 1));
  rep.results()["phi"] = phi;
  json hor = json::array();
  for (int i : hd.horizontal) hor.push_back(coords_str(rs, i));
  rep.results()["horizontal_roots"] = hor;
  json blk = json::array();
  for (auto& b : blocks(hd)) {
    json jb;
    jb["anchor"] = "alpha_" + std::to_string(b.anchor + 1);
    json roots = json::array();
    for (int i : b.roots) roots.push_back(coords_str(rs, i));
    jb["roots"] = roots;
    blk.push_back(jb);
  }
  rep.results()["blocks"] = blk;
  ParabolicData pd = parabolic_data(hd);
  rep.results()["levi_root_count"] = pd.levi_roots.size();
  rep.results()["nilradical_root_count"] = pd.nilradical_roots.size();
  json degs = json::object();
  for (int i = 0; i < rs.num_roots(); ++i) {
    std::string d = std::to_string(hd.degree[i]);
    degs[d] = degs.contains(d) ? degs[d].get<int>() + 1 : 1;
  }
  rep.results()["roots_by_degree"] = degs;
  return rep.emit();
}

int cmd_xi_check(const GlobalOpts& g, const std::string& input, const std::string& type,
                 const std::string& marking, int pairs) {
  Report rep("xi-check", g);
  auto [tname, m] = load_datum(input, type, marking);
  rep.inputs()["type"] = tname;
  rep.inputs()["marking"] = m;
  rep.inputs()["pairs"] = pairs;
  rep.inputs()["seed"] = g.seed;
  WeylBasis wb = WeylBasis::build(RootSystem::build(parse_type(tname)));
  HodgeDatum hd = from_marking(wb.roots(), m);

  json violations = json::array(), mismatches = json::array();
  NonnegativityReport nn = verify_nonnegativity(wb, hd);
  for (auto& v : nn.violations) {
    violations.push_back(coords_str(wb.roots(), v.a) + "," + coords_str(wb.roots(), v.b) +
                         " -> " + v.value.str());
    rep.fail("negative diagonal coefficient");
  }

  auto all = commuting_pairs(hd, wb, PairStrategy::basis);
  int want = std::max(0, pairs - int(all.size()));
  auto rnd = commuting_pairs(hd, wb, PairStrategy::random_support, g.seed, want);
  all.insert(all.end(), std::make_move_iterator(rnd.begin()), std::make_move_iterator(rnd.end()));
  std::int64_t checked = 0;
  for (auto& [xi, eta] : all) {
    Scalar closed = xi_eval_commuting(wb, hd, xi, eta);
    Scalar direct = xi_eval_direct(wb, hd, xi, eta);
    ++checked;
    if (closed != direct) {
      mismatches.push_back("closed " + closed.str() + " vs direct " + direct.str());
      rep.fail("oracle mismatch");
    }
    if (closed.is_rational() && closed.to_rational().sign() < 0) {
      violations.push_back("negative curvature value " + closed.str());
      rep.fail("negative curvature value");
    }
  }
  rep.results()["min_coefficient"] =
      nn.has_pairs ? json(nn.min_value.str()) : json(nullptr);
  if (g.decimal && nn.has_pairs)
    rep.results()["min_coefficient_decimal"] = nn.min_value.approx();
  rep.results()["violations"] = violations;
  rep.results()["pairs_checked"] = checked;
  rep.results()["oracle_mismatches"] = mismatches;
  return rep.emit();
}

int cmd_poincare(const GlobalOpts& g, const std::string& input, const std::string& utype,
                 const std::string& marking) {
  Report rep("poincare", g);
  auto [tname, m] = load_datum(input, utype, marking);
  rep.inputs()["u"] = tname;
  rep.inputs()["v_marking"] = m;
  RootSystem rs = RootSystem::build(parse_type(tname));
  HodgeDatum hd = from_marking(rs, m);
  std::vector<int> levi;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (hd.degree[i] == 0) levi.push_back(i);
  SubsystemType lt = classify_subsystem(rs, levi);
  std::vector<int> rdeg;
  std::int64_t wv = 1;
  for (auto& f : lt.factors) {
    auto wd = invariant_degrees(f.series, f.rank);
    rdeg.insert(rdeg.end(), wd.cohomological_degrees.begin(), wd.cohomological_degrees.end());
    wv *= wd.order;
  }
  for (int i = 0; i < lt.torus; ++i) rdeg.push_back(2);
  std::sort(rdeg.begin(), rdeg.end());
  WeylData wu = invariant_degrees(rs.series(), rs.rank());
  Poly p = hirsch_polynomial(wu.cohomological_degrees, rdeg);
  rep.results()["levi_type"] = lt.str();
  rep.results()["poincare"] = p;
  std::int64_t at1 = 0;
  for (auto c : p) at1 += c;
  rep.results()["euler_characteristic"] = at1;
  if (at1 * wv != wu.order) rep.fail("P(1) != |W_U|/|W_V|");
  rep.results()["complex_dimension"] = (int(p.size()) - 1) / 2;
  return rep.emit();
}

int cmd_betti(const GlobalOpts& g, const std::string& pair) {
  Report rep("betti", g);
  rep.inputs()["pair"] = pair;
  const RealFormRecord& rec = Catalog::builtin().find(pair);
  SymmetricPair p = to_symmetric_pair(rec);
  auto [h2, h4] = low_betti(p);
  rep.results()["h2"] = h2;
  rep.results()["h4"] = h4;
  if (p.equal_rank()) {
    rep.results()["poincare"] = poincare_polynomial(p);
    rep.results()["euler_characteristic"] = euler_characteristic(p);
  }
  auto [b2, b4] = low_betti_branch(p);
  rep.results()["branch_h2"] = b2;
  rep.results()["branch_h4"] = b4;
  return rep.emit();
}

int cmd_classify(const GlobalOpts& g, const std::string& group) {
  Report rep("classify", g);
  rep.inputs()["group"] = group;
  const RealFormRecord& rec = Catalog::builtin().find(group);
  rep.results()["complex_type"] = rec.complex_type.str();
  rep.results()["rank"] = rec.real_rank;
  rep.results()["hodge"] = is_hodge_type(rec);
  rep.results()["hermitian"] = is_hermitian(rec);
  rep.results()["matsushima_bound"] = matsushima_bound(rec).str();
  if (g.decimal) rep.results()["matsushima_bound_decimal"] = matsushima_bound(rec).approx();
  rep.results()["lattice_verdict"] = to_string(lattice_verdict(rec));
  return rep.emit();
}

int cmd_verify_all(const GlobalOpts& g, int max_rank, int pairs) {
  Report rep("verify-all", g);
  rep.inputs()["max_rank"] = max_rank;
  rep.inputs()["pairs"] = pairs;
  rep.inputs()["seed"] = g.seed;
  VerifyOptions opt;
  opt.max_rank = max_rank;
  opt.pairs_per_datum = pairs;
  opt.seed = g.seed;
  opt.threads = g.threads;
  json crits = json::array();
  for (auto& c : run_acceptance(opt)) {
    json jc;
    jc["criterion"] = c.id;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["items_checked"] = c.items_checked;
    if (!c.summary.empty()) jc["summary"] = c.summary;
    if (!c.failures.empty()) jc["failures"] = c.failures;
    crits.push_back(jc);
    if (!c.passed)
      rep.fail("criterion " + std::to_string(c.id) + ": " + std::to_string(c.failures.size()) +
               " failing items");
  }
  rep.results()["criteria"] = crits;
  json problems = json::array();
  for (auto& p : Catalog::builtin().validate(max_rank)) {
    problems.push_back(p);
    rep.fail("catalog: " + p);
  }
  rep.results()["catalog_problems"] = problems;
  return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perioddomain: exact Lie-theoretic verification for period-domain curvature"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--decimal", g.decimal, "add approximate decimal columns (non-authoritative)");
  app.add_flag("--timing", g.timing, "include wall-clock timing (breaks byte-determinism)");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--threads", g.threads, "worker threads for sweeps");

  std::string type, marking, input, utype, vmarking, pairname, group;
  bool bourbaki = false;
  int pairs = 1000, max_rank = 8;

  auto* roots = app.add_subcommand("roots", "construct a root system");
  roots->add_option("--type", type)->required();
  roots->add_flag("--bourbaki", bourbaki, "Bourbaki normalization instead of Killing-dual");

  auto* chev = app.add_subcommand("chevalley-verify", "verify the Weyl-basis laws");
  chev->add_option("--type", type);
  chev->add_option("--marking", marking);
  chev->add_option("--input", input);

  auto* hodge = app.add_subcommand("hodge", "derive a Hodge datum from a marking");
  hodge->add_option("--type", type);
  hodge->add_option("--marking", marking);
  hodge->add_option("--input", input);

  auto* xi = app.add_subcommand("xi-check", "curvature oracle equivalence and positivity");
  xi->add_option("--type", type);
  xi->add_option("--marking", marking);
  xi->add_option("--input", input);
  xi->add_option("--pairs", pairs);

  auto* poin = app.add_subcommand("poincare", "Poincare polynomial of a flag variety");
  poin->add_option("--u", utype);
  poin->add_option("--v-marking", vmarking);
  poin->add_option("--input", input);

  auto* betti = app.add_subcommand("betti", "low-degree Betti numbers of a symmetric pair");
  betti->add_option("--pair", pairname)->required();

  auto* cls = app.add_subcommand("classify", "classification verdicts for a real form");
  cls->add_option("--group", group)->required();

  auto* vall = app.add_subcommand("verify-all", "run the full acceptance battery");
  vall->add_option("--max-rank", max_rank);
  vall->add_option("--pairs", pairs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(g, type, bourbaki);
    if (chev->parsed()) return cmd_chevalley_verify(g, input, type, marking);
    if (hodge->parsed()) return cmd_hodge(g, input, type, marking);
    if (xi->parsed()) return cmd_xi_check(g, input, type, marking, pairs);
    if (poin->parsed()) return cmd_poincare(g, input, utype, vmarking);
    if (betti->parsed()) return cmd_betti(g, pairname);
    if (cls->parsed()) return cmd_classify(g, group);
    if (vall->parsed()) return cmd_verify_all(g, max_rank, pairs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
