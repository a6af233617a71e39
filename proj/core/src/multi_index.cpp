#include "rankone/multi_index.hpp"

namespace rankone {

namespace {

void recurse(MultiIndex& k, std::size_t pos, int remaining, bool exact,
             const std::function<void(const MultiIndex&)>& fn) {
  if (pos + 1 == k.size()) {
    if (exact) {
      k[pos] = remaining;
      fn(k);
    } else {
      for (int v = 0; v <= remaining; ++v) {
        k[pos] = v;
        fn(k);
      }
    }
    k[pos] = 0;
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    k[pos] = v;
    recurse(k, pos + 1, remaining - v, exact, fn);
  }
  k[pos] = 0;
}

}  // namespace

void for_each_multi_index_of_total(std::size_t len, int total,
                                   const std::function<void(const MultiIndex&)>& fn) {
  if (len == 0) {
    if (total == 0) fn(MultiIndex{});
    return;
  }
  MultiIndex k(len);
  recurse(k, 0, total, true, fn);
}

void for_each_multi_index_up_to(std::size_t len, int max_total,
                                const std::function<void(const MultiIndex&)>& fn) {
  for (int t = 0; t <= max_total; ++t) for_each_multi_index_of_total(len, t, fn);
}

std::vector<MultiIndex> multi_indices_of_total(std::size_t len, int total) {
  std::vector<MultiIndex> out;
  for_each_multi_index_of_total(len, total, [&](const MultiIndex& k) { out.push_back(k); });
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t len, int max_total) {
  std::vector<MultiIndex> out;
  for_each_multi_index_up_to(len, max_total, [&](const MultiIndex& k) { out.push_back(k); });
  return out;
}

}  // namespace rankone
