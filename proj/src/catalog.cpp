#include "perioddomain/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "perioddomain/classify.hpp"
#include "perioddomain/hodge.hpp"
#include "json.hpp"

namespace perioddomain {

namespace {

std::vector<TypeName> parse_compact(const std::string& spec, int& torus) {
  std::vector<TypeName> factors;
  torus = 0;
  if (spec.empty() || spec == "0") return factors;
  std::stringstream ss(spec);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    if (piece.empty()) continue;
    if (piece[0] == 'T')
      torus += std::stoi(piece.substr(1));
    else
      factors.push_back(parse_type(piece));
  }
  return factors;
}

}  // namespace

Catalog Catalog::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Catalog cat;
  cat.version_ = j.at("version").get<int>();
  for (auto& f : j.at("forms")) {
    RealFormRecord rec;
    rec.name = f.at("name").get<std::string>();
    rec.family = f.at("family").get<std::string>();
    rec.complex_type = parse_type(f.at("complex").get<std::string>());
    rec.real_rank = f.at("real_rank").get<int>();
    rec.compact_factors = parse_compact(f.at("max_compact").get<std::string>(), rec.compact_torus);
    rec.hermitian = f.at("hermitian").get<bool>();
    if (f.contains("marking")) rec.marking = f.at("marking").get<std::vector<int>>();
    cat.forms_.push_back(std::move(rec));
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Catalog& Catalog::builtin() {
  static Catalog cat = [] {
    if (const char* env = std::getenv("PERIODDOMAIN_CATALOG")) return load_file(env);
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates = {"data/realforms.json"};
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
      for (auto up : {"..", "../..", "../../.."})
        candidates.push_back(exe.parent_path() / up / "data/realforms.json");
      candidates.push_back(exe.parent_path() / "data/realforms.json");
    }
    for (auto& c : candidates)
      if (fs::exists(c, ec)) return load_file(c.string());
    throw std::runtime_error(
        "real-form catalog not found; set PERIODDOMAIN_CATALOG to its path");
  }();
  return cat;
}

const RealFormRecord& Catalog::find(const std::string& name) const {
  for (auto& f : forms_)
    if (f.name == name) return f;
  throw unknown_form(name);
}

std::vector<std::string> Catalog::validate(int max_built_rank) const {
  std::vector<std::string> problems;
  std::map<std::string, RootSystem> cache;
  for (auto& rec : forms_) {
    if (rec.hermitian && !rec.equal_rank())
      problems.push_back(rec.name + ": hermitian but not equal rank");
    if (rec.hermitian != is_hermitian(rec))
      problems.push_back(rec.name + ": hermitian flag disagrees with the classification list");
    if (!rec.marking.empty()) {
      if (!rec.equal_rank())
        problems.push_back(rec.name + ": marked entry must be equal rank");
      if (rec.complex_type.rank > max_built_rank) continue;
      auto key = rec.complex_type.str();
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, RootSystem::build(rec.complex_type)).first;
      const RootSystem& rs = it->second;
      HodgeDatum hd = from_marking(rs, rec.marking);
      if (is_hermitian_grading(hd) != rec.hermitian)
        problems.push_back(rec.name + ": hermitian flag disagrees with the grading oracle");
      // Compact subalgebra = even-degree part; its type must match the
      // declared maximal compact.
      std::vector<int> even;
      for (int i = 0; i < rs.num_roots(); ++i)
        if (hd.degree[i] % 2 == 0) even.push_back(i);
      SubsystemType st = classify_subsystem(rs, even);
      SubsystemType declared;
      declared.factors = rec.compact_factors;
      declared.torus = rec.compact_torus;
      std::sort(declared.factors.begin(), declared.factors.end(),
                [](const TypeName& a, const TypeName& b) {
                  if (a.series != b.series) return a.series < b.series;
                  return a.rank < b.rank;
                });
      if (st.str() != declared.str())
        problems.push_back(rec.name + ": compact type " + declared.str() +
                           " does not match the grading-derived " + st.str());
    }
  }
  return problems;
}

SymmetricPair to_symmetric_pair(const RealFormRecord& rec) {
  SymmetricPair p;
  p.name = rec.name;
  p.u = rec.complex_type;
  p.k_factors = rec.compact_factors;
  p.k_torus = rec.compact_torus;
  p.hermitian = rec.hermitian;
  p.marking = rec.marking;
  return p;
}

}  // namespace perioddomain
