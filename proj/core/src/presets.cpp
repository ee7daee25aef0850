#include "pealab/presets.hpp"

#include <stdexcept>

namespace pealab {

namespace {

Pea must(Result<Pea, CheckReport> r, const char* what) {
  if (!r.ok()) throw std::logic_error(std::string(what) + ": " +
                                      r.error->summary());
  return std::move(*r.value);
}

}  // namespace

Pea make_chain_pea(int n) {
  if (n < 2) throw std::invalid_argument("make_chain_pea: n >= 2");
  std::vector<int> t(n * n, kUndef);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + i < n; ++j) t[i * n + j] = i + j;
  return must(Pea::from_table(n, std::move(t), 0, n - 1), "make_chain_pea");
}

Pea make_b4() {
  // elements: 0, p=1, q=2, 1=3
  std::vector<int> t(16, kUndef);
  auto set = [&](int a, int b, int v) { t[a * 4 + b] = v; };
  for (int x = 0; x < 4; ++x) {
    set(0, x, x);
    set(x, 0, x);
  }
  set(1, 2, 3);
  set(2, 1, 3);
  return must(Pea::from_table(4, std::move(t), 0, 3), "make_b4");
}

}  // namespace pealab
