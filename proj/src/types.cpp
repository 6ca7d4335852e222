#include "matgor/types.hpp"

#include <cstdlib>

namespace matgor {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset from_elements(const std::vector<int>& idx) {
  Subset s = 0;
  for (int i : idx) s |= singleton(i);
  return s;
}

bool lex_less(Subset a, Subset b) {
  while (a && b) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(from_elements(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool guards_overridden() {
  const char* v = std::getenv("MATGOR_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void check_guard(bool ok, const std::string& what) {
  if (!ok && !guards_overridden()) throw GuardExceeded("size guard exceeded: " + what);
}

}  // namespace matgor
