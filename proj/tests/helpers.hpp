#pragma once

// Shared test utilities. naive_is_pea is an independent oracle: it encodes
// the four defining axioms directly against a raw table and shares no code
// with the library checker.

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

constexpr int U = -1;  // undefined table entry

// Direct transcription of the axioms, zero at index 0, unit at index n-1:
//  (1) a+b and (a+b)+c exist iff b+c and a+(b+c) exist, and then agree
//  (2) for every a exactly one d with a+d=1 and exactly one e with e+a=1
//  (3) if a+b exists there are d, e with a+b = d+a = b+e
//  (4) if a+1 or 1+a exists then a=0
inline bool naive_is_pea(int n, const std::vector<int>& t) {
  auto v = [&](int a, int b) { return t[a * n + b]; };
  auto def = [&](int a, int b) { return t[a * n + b] != U; };
  const int one = n - 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool l = def(a, b) && def(v(a, b), c);
        bool r = def(b, c) && def(a, v(b, c));
        if (l != r) return false;
        if (l && v(v(a, b), c) != v(a, v(b, c))) return false;
      }
  for (int a = 0; a < n; ++a) {
    int ds = 0, es = 0;
    for (int x = 0; x < n; ++x) {
      if (def(a, x) && v(a, x) == one) ++ds;
      if (def(x, a) && v(x, a) == one) ++es;
    }
    if (ds != 1 || es != 1) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!def(a, b)) continue;
      bool has_d = false, has_e = false;
      for (int x = 0; x < n; ++x) {
        if (def(x, a) && v(x, a) == v(a, b)) has_d = true;
        if (def(b, x) && v(b, x) == v(a, b)) has_e = true;
      }
      if (!has_d || !has_e) return false;
    }
  for (int a = 1; a < n; ++a)
    if (def(a, one) || def(one, a)) return false;
  return true;
}

inline std::vector<int> relabel(int n, const std::vector<int>& t,
                                const std::vector<int>& perm) {
  std::vector<int> out(n * n, U);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = t[a * n + b];
      out[perm[a] * n + perm[b]] = x == U ? U : perm[x];
    }
  return out;
}

// Minimum over relabelings fixing 0 and n-1 (an isomorphism of algebras
// with designated constants fixes them).
inline std::vector<int> naive_min_form(int n, const std::vector<int>& t) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = t;
  while (std::next_permutation(perm.begin() + 1, perm.end() - 1))
    best = std::min(best, relabel(n, t, perm));
  return best;
}

// Every table over entries {U, 0..n-1}; feasible for n <= 3.
inline void all_tables(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(n * n, U);
  std::function<void(int)> rec = [&](int k) {
    if (k == n * n) {
      f(t);
      return;
    }
    for (int x = U; x < n; ++x) {
      t[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
}

// Tables with the border forced by neutrality of 0 and axiom (4); interior
// cells free. Neutrality of 0 is a consequence of the axioms (confirmed by
// the exhaustive runs at n <= 3), so at n = 4 this loses no models.
inline void bordered_tables(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(n * n, U);
  for (int x = 0; x < n; ++x) {
    t[x] = x;
    t[x * n] = x;
  }
  std::vector<int> cells;
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j) cells.push_back(i * n + j);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      f(t);
      return;
    }
    for (int x = U; x < n; ++x) {
      t[cells[k]] = x;
      rec(k + 1);
    }
    t[cells[k]] = U;
  };
  rec(0);
}

inline std::string data_path(const std::string& name) {
  return std::string(PEALAB_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testutil
