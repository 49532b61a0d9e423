#pragma once

// Slow reference implementations used only to cross-check the library.
// They share no code with src/ beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Matrix = std::vector<std::vector<int>>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

// All elements generated by `gens`, by repeated right multiplication.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Sorted conjugacy class sizes by direct orbit computation.
inline std::vector<std::size_t> class_sizes(const std::set<Perm>& group) {
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : group) {
    if (done.count(x)) continue;
    std::set<Perm> orbit;
    for (const auto& g : group) orbit.insert(compose(compose(invert(g), x), g));
    done.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Every nondecreasing degree list of length k, containing 1, with each entry
// dividing `order` and squares summing to `order`.
inline std::vector<std::vector<std::uint64_t>> forced_degree_lists(std::uint64_t order, std::size_t k) {
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= order; ++d) {
    if (order % d == 0) divisors.push_back(d);
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::uint64_t left) {
    if (cur.size() == k) {
      if (left == 0 && cur.front() == 1) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < divisors.size(); ++i) {
      const std::uint64_t sq = divisors[i] * divisors[i];
      if (sq * (k - cur.size()) > left) break;
      cur.push_back(divisors[i]);
      rec(i, left - sq);
      cur.pop_back();
    }
  };
  rec(0, order);
  return out;
}

// ---- graphs as adjacency matrices ----

inline Matrix graph_from_mask(int n, std::uint64_t mask) {
  Matrix a(n, std::vector<int>(n, 0));
  int bitpos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bitpos) {
      if ((mask >> bitpos) & 1U) a[i][j] = a[j][i] = 1;
    }
  }
  return a;
}

// Component count of the subgraph induced by `alive`.
inline int component_count(const Matrix& a, const std::vector<bool>& alive) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (a[u][v] && alive[v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

inline bool connected(const Matrix& a) {
  return a.empty() || component_count(a, std::vector<bool>(a.size(), true)) == 1;
}

inline std::vector<int> cut_vertices(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> alive(n, true);
  const int base = component_count(a, alive);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    alive[v] = false;
    if (component_count(a, alive) > base) out.push_back(v);
    alive[v] = true;
  }
  return out;
}

inline bool independent(const Matrix& a, unsigned s) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((s >> i & 1U) && (s >> j & 1U) && a[i][j]) return false;
    }
  }
  return true;
}

inline int alpha(const Matrix& a) {
  int best = 0;
  for (unsigned s = 0; s < (1U << a.size()); ++s) {
    if (independent(a, s)) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// Smallest deletion set leaving a disconnected graph; n-1 when none exists.
inline int kappa(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n <= 1 || !connected(a)) return 0;
  int best = n - 1;
  for (unsigned s = 0; s < (1U << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k >= best || n - k < 2) continue;
    std::vector<bool> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = !(s >> v & 1U);
    if (component_count(a, alive) > 1) best = k;
  }
  return best;
}

inline int gamma(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = n;
  for (unsigned s = 0; s < (1U << n); ++s) {
    bool dominates = true;
    for (int v = 0; v < n && dominates; ++v) {
      if (s >> v & 1U) continue;
      bool hit = false;
      for (int u = 0; u < n; ++u) hit = hit || ((s >> u & 1U) && a[u][v]);
      dominates = hit;
    }
    if (dominates) best = std::min(best, __builtin_popcount(s));
  }
  return best;
}

// Maximum matching size by trying every edge choice for the first free vertex.
inline int matching_size(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::function<int(unsigned)> rec = [&](unsigned used) -> int {
    int v = 0;
    while (v < n && (used >> v & 1U)) ++v;
    if (v >= n) return 0;
    int best = rec(used | (1U << v));
    for (int u = v + 1; u < n; ++u) {
      if (a[v][u] && !(used >> u & 1U)) best = std::max(best, 1 + rec(used | (1U << v) | (1U << u)));
    }
    return best;
  };
  return rec(0);
}

inline bool has_hamiltonian_path(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n <= 1) return true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[order[i]][order[i + 1]] != 0;
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

inline bool has_hamiltonian_cycle(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n < 3) return false;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = a[order[n - 1]][order[0]] != 0;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[order[i]][order[i + 1]] != 0;
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

// ---- exact linear algebra ----

using BigInt = boost::multiprecision::cpp_int;

// Rank by fraction-free (Bareiss) elimination; every division is exact.
inline int rank(std::vector<std::vector<BigInt>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

// Degree of the minimal polynomial of A: the smallest d such that
// I, A, ..., A^d are linearly dependent. Equals the number of distinct
// eigenvalues of a symmetric matrix.
inline int minimal_polynomial_degree(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 0;
  std::vector<std::vector<BigInt>> powers;
  std::vector<std::vector<long long>> p(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<BigInt> flat;
    for (const auto& row : p) {
      for (long long x : row) flat.emplace_back(x);
    }
    powers.push_back(std::move(flat));
    if (rank(powers) < static_cast<int>(powers.size())) return static_cast<int>(d);
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (p[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += p[i][k] * a[k][j];
      }
    }
    p = std::move(next);
  }
  return static_cast<int>(n);
}

// Multiplicity of the eigenvalue `lambda` of symmetric A: n - rank(A - lambda I).
inline int eigen_multiplicity(const Matrix& a, long long lambda) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j] - (i == j ? lambda : 0);
  }
  return static_cast<int>(n) - rank(m);
}

}  // namespace oracle
