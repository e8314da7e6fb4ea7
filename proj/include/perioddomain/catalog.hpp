#pragma once

#include <string>
#include <vector>

#include "perioddomain/cohomology.hpp"
#include "perioddomain/rootsys.hpp"

namespace perioddomain {

struct unknown_form : std::runtime_error {
  explicit unknown_form(const std::string& name)
      : std::runtime_error("unknown real form: " + name) {}
};

// One catalog row: a noncompact real simple Lie group.
struct RealFormRecord {
  std::string name;    // e.g. "Sp(3,1)"
  std::string family;  // e.g. "Sp(p,q)"
  TypeName complex_type;
  int real_rank = 0;
  std::vector<TypeName> compact_factors;  // type of the maximal compact subgroup
  int compact_torus = 0;
  bool hermitian = false;
  std::vector<int> marking;  // reference marking of the complex type (may be empty)

  // rk K == rk G_C, computed from the compact type, not stored.
  bool equal_rank() const {
    int rk = compact_torus;
    for (auto& f : compact_factors) rk += f.rank;
    return rk == complex_type.rank;
  }
};

// The versioned table of real forms, shipped as JSON and validated at load
// time by the rank and grading oracles rather than trusted.
class Catalog {
 public:
  static Catalog parse(const std::string& json_text);
  static Catalog load_file(const std::string& path);
  // PERIODDOMAIN_CATALOG env var, else data/realforms.json next to the
  // working directory or the executable.
  static const Catalog& builtin();

  int version() const { return version_; }
  const std::vector<RealFormRecord>& forms() const { return forms_; }
  const RealFormRecord& find(const std::string& name) const;

  // Consistency problems (empty expected): rank arithmetic, marking-derived
  // compact subsystems, hermitian flags vs. the grading oracle.
  std::vector<std::string> validate(int max_built_rank = 8) const;

 private:
  int version_ = 0;
  std::vector<RealFormRecord> forms_;
};

// Compact-dual view of a catalog row, for the cohomology operations.
SymmetricPair to_symmetric_pair(const RealFormRecord& rec);

}  // namespace perioddomain
