#include "skt/multiindex.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace skt {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

const MaskTable& MaskTable::get(int dim, int degree) {
  static std::map<std::pair<int, int>, MaskTable> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(dim, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (dim < 0 || dim > kMaxDim || degree < 0 || degree > dim)
    throw std::invalid_argument("MaskTable: bad (dim, degree)");
  MaskTable t;
  t.dim = dim;
  t.degree = degree;
  t.position.assign(std::size_t(1) << dim, -1);
  for (IndexMask m = 0; m < (IndexMask(1) << dim); ++m) {
    if (popcount(m) == degree) {
      t.position[m] = int(t.masks.size());
      t.masks.push_back(m);
    }
  }
  return cache.emplace(key, std::move(t)).first->second;
}

int sort_sign(int* tuple, int length) {
  int sign = 1;
  for (int i = 1; i < length; ++i) {
    int j = i;
    while (j > 0 && tuple[j - 1] > tuple[j]) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && tuple[j - 1] == tuple[j]) return 0;
  }
  return sign;
}

}  // namespace skt
