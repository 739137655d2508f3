#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "oegraph/boundary.hpp"

// Brute-force reference implementations used to check the library from the
// outside.  Everything here works on raw edge words and integer arrays and
// deliberately avoids the structural shortcuts the library takes.
namespace oracle {

using oegraph::BoundaryPoint;
using oegraph::EdgeId;
using oegraph::Graph;
using oegraph::VertexId;

// Every continuation from `from` that either reaches the horizon or dies in
// a sink first.
inline std::vector<std::vector<EdgeId>> continuations(const Graph& g, const VertexId& from,
                                                      std::size_t horizon) {
  std::vector<std::vector<EdgeId>> done;
  std::vector<std::pair<VertexId, std::vector<EdgeId>>> frontier{{from, {}}};
  for (std::size_t step = 0; step < horizon; ++step) {
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> next;
    for (auto& [at, word] : frontier) {
      if (g.is_sink(at)) {
        done.push_back(word);
        continue;
      }
      for (const auto& e : g.out_edges(at)) {
        auto w = word;
        w.push_back(e);
        next.emplace_back(g.edge(e).dst, std::move(w));
      }
    }
    frontier = std::move(next);
  }
  for (auto& [at, word] : frontier) done.push_back(word);
  return done;
}

/*
 * Word-expansion isolation test.  The point is isolated exactly when some
 * prefix of it pins down the whole point: expanding that prefix in all ways
 * up to |V| + 1 further steps leaves a single continuation.  A unique
 * continuation of that length forces out-degree one at every step, and a
 * walk of |V| + 1 deterministic steps has already entered a cycle it can
 * never leave, so uniqueness at the horizon means uniqueness forever.
 */
inline bool isolated_by_cylinders(const Graph& g, const BoundaryPoint& p) {
  const std::size_t horizon = g.vertices().size() + 1;
  const std::size_t deepest = p.description_length() + 1;
  for (std::size_t k = 0; k <= deepest; ++k) {
    if (p.length() && k > *p.length()) break;
    const VertexId at = p.vertex_at(g, k);
    const auto exts = continuations(g, at, horizon);
    if (exts.size() != 1) continue;
    const auto& only = exts.front();
    bool matches = true;
    for (std::size_t i = 0; i < only.size() && matches; ++i)
      if (p.edge_at(k + i) != only[i]) matches = false;
    if (!matches) continue;
    if (only.size() < horizon) {
      if (p.length() && *p.length() == k + only.size()) return true;
    } else if (!p.length()) {
      return true;
    }
  }
  return false;
}

// Symbol-by-symbol equality of two exact points.  Two eventually periodic
// edge sequences that agree past both preperiods for a full common period
// agree everywhere, so a window of |mu1| + |mu2| + |nu1|*|nu2| + 1 symbols
// decides.
inline bool same_point_by_words(const Graph& g, const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.length().has_value() != b.length().has_value()) return false;
  if (a.length()) {
    if (*a.length() != *b.length()) return false;
    if (*a.length() == 0) return a.prefix().source() == b.prefix().source();
    for (std::size_t i = 0; i < *a.length(); ++i)
      if (a.edge_at(i) != b.edge_at(i)) return false;
    return true;
  }
  const std::size_t window = a.prefix().length() + b.prefix().length() +
                             a.cycle().length() * b.cycle().length() + 1;
  for (std::size_t i = 0; i < window; ++i)
    if (*a.edge_at(i) != *b.edge_at(i)) return false;
  (void)g;
  return true;
}

// Least (m, n) <= bound, lexicographically, whose shifted words coincide.
// Shifting is simulated by reading the words at an offset.
inline std::optional<std::pair<std::size_t, std::size_t>> tail_search(const Graph& g,
                                                                     const BoundaryPoint& x,
                                                                     const BoundaryPoint& y,
                                                                     std::size_t bound) {
  auto shifted_equal = [&](std::size_t m, std::size_t n) {
    if (x.length().has_value() != y.length().has_value()) return false;
    if (x.length()) {
      if (*x.length() - m != *y.length() - n) return false;
      const std::size_t rest = *x.length() - m;
      if (rest == 0) return x.vertex_at(g, m) == y.vertex_at(g, n);
      for (std::size_t i = 0; i < rest; ++i)
        if (x.edge_at(m + i) != y.edge_at(n + i)) return false;
      return true;
    }
    const std::size_t window = x.prefix().length() + y.prefix().length() +
                               x.cycle().length() * y.cycle().length() + 1;
    for (std::size_t i = 0; i < window; ++i)
      if (*x.edge_at(m + i) != *y.edge_at(n + i)) return false;
    return true;
  };
  for (std::size_t m = 0; m <= bound; ++m) {
    if (!x.length_at_least(m)) break;
    for (std::size_t n = 0; n <= bound; ++n) {
      if (!y.length_at_least(n)) break;
      if (shifted_equal(m, n)) return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

// Walks v -> v of length <= cap visiting v only at the two ends.  Any graph
// with two such walks at one vertex has some pair of length <= |V|, so
// cap = |V| decides whether a second one exists at all.
inline std::size_t return_walks(const Graph& g, const VertexId& v, std::size_t cap) {
  std::size_t count = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{v, 0}};
  while (!stack.empty()) {
    auto [at, used] = stack.back();
    stack.pop_back();
    if (used == cap) continue;
    for (const auto& e : g.out_edges(at)) {
      const VertexId& to = g.edge(e).dst;
      if (to == v)
        ++count;
      else
        stack.emplace_back(to, used + 1);
    }
  }
  return count;
}

inline bool countable_by_walks(const Graph& g) {
  for (const auto& v : g.vertices())
    if (return_walks(g, v, g.vertices().size()) >= 2) return false;
  return true;
}

// ---- integer matrices, plain arrays ----------------------------------

using Mat = std::vector<std::vector<long long>>;

inline long long det_ll(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor(n - 1, std::vector<long long>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1][cc++] = m[r][c];
    }
    const long long term = m[0][j] * det_ll(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Diagonal of the Smith form of a 1x1 or 2x2 matrix from the closed
// formulas: d1 is the gcd of the entries and d1 * d2 is |det|.
inline std::vector<long long> snf_diag_small(const Mat& m) {
  if (m.size() == 1) return {std::llabs(m[0][0])};
  long long g = 0;
  for (const auto& row : m)
    for (long long x : row) g = std::gcd(g, std::llabs(x));
  const long long det = std::llabs(det_ll(m));
  if (g == 0) return {0, 0};
  if (det == 0) return {g, 0};
  return {g, det / g};
}

// Diagonal via determinantal divisors: d_k = gcd(k-minors) / gcd((k-1)-minors),
// zero past the rank.
inline std::vector<long long> snf_diag_by_minors(const Mat& m) {
  const std::size_t n = m.size();
  auto choose = [](std::size_t n_, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n_ - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  std::vector<long long> divisors{1};  // D_0
  for (std::size_t k = 1; k <= n; ++k) {
    long long gk = 0;
    for (const auto& rows : choose(n, k))
      for (const auto& cols : choose(n, k)) {
        Mat sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
        gk = std::gcd(gk, std::llabs(det_ll(sub)));
      }
    divisors.push_back(gk);
  }
  std::vector<long long> diag;
  for (std::size_t k = 1; k <= n; ++k) {
    if (divisors[k] == 0)
      diag.push_back(0);
    else
      diag.push_back(divisors[k] / divisors[k - 1]);
  }
  return diag;
}

}  // namespace oracle
