#pragma once

#include <string>
#include <vector>

#include "perioddomain/rootsys.hpp"

namespace perioddomain {

struct negative_marking : std::runtime_error {
  negative_marking() : std::runtime_error("markings must be nonnegative") {}
};

// A Hodge datum, encoded as a nonnegative integer marking of the simple
// roots. All derived data is indexed by root index in the ambient system.
struct HodgeDatum {
  const RootSystem* rs = nullptr;
  std::vector<int> marking;     // one value per simple root
  std::vector<int> degree;      // grading degree per root
  std::vector<int> eps;         // +1 noncompact (odd degree), -1 compact (even)
  std::vector<int> phi;         // simple-root positions of marking zero
  std::vector<int> horizontal;  // degree-1 positive roots, sorted by <_t (lex)
  bool trivial = false;         // marking identically zero

  const RootSystem& roots() const { return *rs; }
  bool is_horizontal(int idx) const { return degree[idx] == 1 && rs->is_positive(idx); }
  std::string str() const;
};

HodgeDatum from_marking(const RootSystem& rs, const std::vector<int>& marking);

// True iff every root has degree in {-1, 0, 1}.
bool is_hermitian_grading(const HodgeDatum& hd);

// One block g^{-1,1}_{C,beta} of the horizontal space: the degree-1 roots
// congruent to the anchor modulo the Levi roots.
struct Block {
  int anchor;               // simple-root position (marked, marking value 1)
  std::vector<int> roots;   // horizontal root indices, <_t order
};

// Partition of the horizontal roots into blocks; the union check is enforced.
std::vector<Block> blocks(const HodgeDatum& hd);

struct ParabolicData {
  std::vector<int> levi_roots;       // degree-0 roots, positive and negative
  std::vector<int> nilradical_roots; // degree < 0
};

ParabolicData parabolic_data(const HodgeDatum& hd);

}  // namespace perioddomain
