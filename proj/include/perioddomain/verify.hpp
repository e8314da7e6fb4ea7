#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perioddomain/catalog.hpp"
#include "perioddomain/curvature.hpp"

namespace perioddomain {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::int64_t items_checked = 0;
  std::vector<std::string> failures;  // one line per failing item, with data
  std::string summary;
};

struct VerifyOptions {
  int max_rank = 8;             // cap for the structure-constant sweeps
  int pairs_per_datum = 1000;   // commuting pairs per Hodge datum
  std::uint64_t seed = 2026;
  int threads = 1;
};

// The built-in catalog of Hodge data: classical types of rank <= 4 plus G2
// and F4, under assorted markings (including weighted ones).
const std::vector<std::pair<std::string, std::vector<int>>>& hodge_catalog();

// All simple types of rank <= max_rank.
std::vector<TypeName> simple_types_up_to(int max_rank);

// Runs the full acceptance battery; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt);

}  // namespace perioddomain
