// Brute-force reference checkers. They share nothing with the library beyond
// plain vectors, so agreement with the library is meaningful.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace naive {

using Set = std::vector<std::uint32_t>;  // ascending
using Family = std::vector<Set>;

inline bool contains(const Set& big, std::uint32_t x) { return std::binary_search(big.begin(), big.end(), x); }

inline std::size_t meet(const Set& a, const Set& b) {
  std::size_t k = 0;
  for (auto x : a) k += contains(b, x);
  return k;
}

inline Set unite(const Family& f, const std::vector<std::size_t>& idx) {
  std::set<std::uint32_t> u;
  for (auto i : idx) u.insert(f[i].begin(), f[i].end());
  return {u.begin(), u.end()};
}

inline bool subset(const Set& a, const Set& b) {
  return std::all_of(a.begin(), a.end(), [&](auto x) { return contains(b, x); });
}

// Calls fn on every k-subset of {0..n-1}; fn returns false to stop.
inline bool choose(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return true;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!fn(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline Set pick(const Set& from, const std::vector<std::size_t>& idx) {
  Set s;
  for (auto i : idx) s.push_back(from[i]);
  return s;
}

inline bool is_cff(const Family& f, std::size_t t) {
  for (std::size_t b0 = 0; b0 < f.size(); ++b0) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != b0) others.push_back(j);
    for (std::size_t k = 1; k <= t; ++k) {
      const bool ok = choose(others.size(), k, [&](const std::vector<std::size_t>& c) {
        std::vector<std::size_t> idx;
        for (auto i : c) idx.push_back(others[i]);
        return !subset(f[b0], unite(f, idx));
      });
      if (!ok) return false;
    }
  }
  return true;
}

// Outsider must differ from every coalition member; ties count as failures.
inline bool is_ts(const Family& f, std::size_t w, std::size_t t) {
  for (std::size_t k = 1; k <= t; ++k) {
    const bool ok = choose(f.size(), k, [&](const std::vector<std::size_t>& coal) {
      const Set u = unite(f, coal);
      return choose(u.size(), w, [&](const std::vector<std::size_t>& fi) {
        const Set pirate = pick(u, fi);
        std::size_t best = 0;
        for (auto c : coal) best = std::max(best, meet(f[c], pirate));
        for (std::size_t o = 0; o < f.size(); ++o) {
          if (std::find(coal.begin(), coal.end(), o) != coal.end()) continue;
          if (meet(f[o], pirate) >= best) return false;
        }
        return true;
      });
    });
    if (!ok) return false;
  }
  return true;
}

// Parent identification for every pirate set whose size lies in [lo, hi].
inline bool identifies_parents(const Family& f, std::uint32_t v, std::size_t t, std::size_t lo, std::size_t hi) {
  for (std::size_t size = lo; size <= hi && size <= v; ++size) {
    const Set all = [&] {
      Set a(v);
      for (std::uint32_t i = 0; i < v; ++i) a[i] = i;
      return a;
    }();
    const bool ok = choose(v, size, [&](const std::vector<std::size_t>& ti) {
      const Set pirate = pick(all, ti);
      std::vector<std::set<std::size_t>> parents;
      for (std::size_t k = 1; k <= t; ++k)
        choose(f.size(), k, [&](const std::vector<std::size_t>& coal) {
          if (subset(pirate, unite(f, coal))) parents.emplace_back(coal.begin(), coal.end());
          return true;
        });
      if (parents.empty()) return true;
      std::set<std::size_t> common = parents.front();
      for (const auto& p : parents) {
        std::set<std::size_t> next;
        for (auto x : common)
          if (p.count(x)) next.insert(x);
        common = next;
      }
      return !common.empty();
    });
    if (!ok) return false;
  }
  return true;
}

inline bool is_ipps(const Family& f, std::uint32_t v, std::size_t w, std::size_t t) {
  return identifies_parents(f, v, t, w, w);
}

inline bool is_ipps_star(const Family& f, std::uint32_t v, std::size_t w, std::size_t t) {
  return identifies_parents(f, v, t, w, t * w);
}

// Number of blocks through each tau-subset equals lambda (or at most lambda).
inline bool tau_count_ok(const Family& f, std::uint32_t v, std::size_t tau, std::size_t lambda, bool exact) {
  Set all(v);
  for (std::uint32_t i = 0; i < v; ++i) all[i] = i;
  return choose(v, tau, [&](const std::vector<std::size_t>& c) {
    const Set sub = pick(all, c);
    std::size_t n = 0;
    for (const auto& b : f) n += subset(sub, b);
    return exact ? n == lambda : n <= lambda;
  });
}

inline std::size_t own_subset_count(const Family& f, std::size_t b, std::size_t tau) {
  std::size_t n = 0;
  choose(f[b].size(), tau, [&](const std::vector<std::size_t>& c) {
    const Set sub = pick(f[b], c);
    bool own = true;
    for (std::size_t j = 0; j < f.size() && own; ++j)
      if (j != b && subset(sub, f[j])) own = false;
    n += own;
    return true;
  });
  return n;
}

// Random family of m distinct w-subsets of v points.
inline Family random_family(std::mt19937& rng, std::uint32_t v, std::uint32_t w, std::size_t m) {
  std::set<Set> seen;
  std::vector<std::uint32_t> pts(v);
  for (std::uint32_t i = 0; i < v; ++i) pts[i] = i;
  std::size_t tries = 0;
  while (seen.size() < m && tries++ < 1000) {
    std::shuffle(pts.begin(), pts.end(), rng);
    Set b(pts.begin(), pts.begin() + w);
    std::sort(b.begin(), b.end());
    seen.insert(b);
  }
  return {seen.begin(), seen.end()};
}

inline unsigned __int128 binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<std::vector<unsigned __int128>> c(n + 1, std::vector<unsigned __int128>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

}  // namespace naive
