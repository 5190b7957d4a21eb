#ifndef SKT_MULTIINDEX_HPP
#define SKT_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

namespace skt {

// Strictly increasing index tuples are represented as bitmasks over the
// frame indices 0..dim-1 (dim <= 16). Component storage of a p-form is
// ordered by ascending mask value.
using IndexMask = std::uint32_t;

constexpr int kMaxDim = 16;

inline int popcount(IndexMask m) { return __builtin_popcount(m); }

/// Lookup tables for one (dim, degree) pair: the ascending list of masks
/// of the given popcount and the inverse map mask -> position.
struct MaskTable {
  int dim = 0;
  int degree = 0;
  std::vector<IndexMask> masks;  // ascending
  std::vector<int> position;     // size 1<<dim, -1 where degree differs

  static const MaskTable& get(int dim, int degree);
};

std::int64_t binomial(int n, int k);

/// Sign of the permutation interleaving the ascending tuple `a` before the
/// ascending tuple `b` into one ascending tuple. Tuples must be disjoint.
inline int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  IndexMask rest = a;
  while (rest) {
    const int i = __builtin_ctz(rest);
    rest &= rest - 1;
    // pairs (i, j) with j in b and j < i are out of order
    inversions += popcount(b & ((IndexMask(1) << i) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_sign(int* tuple, int length);

}  // namespace skt

#endif
