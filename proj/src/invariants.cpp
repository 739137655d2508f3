#include "oegraph/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace oegraph {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_counts(const CountMatrix& counts) {
  IntMatrix m(counts.order.size());
  for (std::size_t i = 0; i < counts.order.size(); ++i)
    for (std::size_t j = 0; j < counts.order.size(); ++j) m.at(i, j) = counts.at[i][j];
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      for (std::size_t j = 0; j < a.n_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j);
  }
  out << "]";
  return out.str();
}

BigInt determinant_cofactor(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    BigInt term = m.at(0, j) * determinant_cofactor(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

std::vector<BigInt> SmithResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < S.size(); ++i) d.push_back(S.at(i, i));
  return d;
}

namespace {

struct SmithWorker {
  IntMatrix S, U, V;
  int sign_U = 1, sign_V = 1;
  std::size_t n;

  explicit SmithWorker(const IntMatrix& A)
      : S(A), U(IntMatrix::identity(A.size())), V(IntMatrix::identity(A.size())), n(A.size()) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(S.at(a, j), S.at(b, j));
      std::swap(U.at(a, j), U.at(b, j));
    }
    sign_U = -sign_U;
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(S.at(i, a), S.at(i, b));
      std::swap(V.at(i, a), V.at(i, b));
    }
    sign_V = -sign_V;
  }

  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < n; ++j) {
      S.at(dst, j) += factor * S.at(src, j);
      U.at(dst, j) += factor * U.at(src, j);
    }
  }

  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < n; ++i) {
      S.at(i, dst) += factor * S.at(i, src);
      V.at(i, dst) += factor * V.at(i, src);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) {
      S.at(r, j) = -S.at(r, j);
      U.at(r, j) = -U.at(r, j);
    }
    sign_U = -sign_U;
  }

  // Smallest nonzero entry (by absolute value) of the trailing block.
  bool pivot_to(std::size_t t) {
    std::size_t bi = t, bj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S.at(i, j) == 0) continue;
        BigInt a = abs(S.at(i, j));
        if (best == 0 || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce(std::size_t t) {
    while (true) {
      if (!pivot_to(t)) return;
      bool touched = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (S.at(i, t) == 0) continue;
        BigInt q = S.at(i, t) / S.at(t, t);
        add_row(i, t, -q);
        if (S.at(i, t) != 0) touched = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S.at(t, j) == 0) continue;
        BigInt q = S.at(t, j) / S.at(t, t);
        add_col(j, t, -q);
        if (S.at(t, j) != 0) touched = true;
      }
      if (touched) continue;  // remainders became new, smaller candidates

      bool lone = true;
      for (std::size_t i = t + 1; i < n && lone; ++i)
        if (S.at(i, t) != 0) lone = false;
      for (std::size_t j = t + 1; j < n && lone; ++j)
        if (S.at(t, j) != 0) lone = false;
      if (!lone) continue;

      // Divisibility: the pivot must divide the rest of the block; pulling
      // an offending row up makes its entries reachable by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < n && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) {
        if (S.at(t, t) < 0) negate_row(t);
        return;
      }
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
  SmithWorker w(A);
  for (std::size_t t = 0; t < w.n; ++t) w.reduce(t);
  SmithResult res{std::move(w.S), std::move(w.U), std::move(w.V), w.sign_U, w.sign_V};
  return res;
}

BigInt determinant_via_smith(const SmithResult& s) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < s.S.size(); ++i) prod *= s.S.at(i, i);
  // U A V = S and det U, det V are +-1, so det A = det S * det U * det V.
  return prod * s.det_sign_U * s.det_sign_V;
}

std::string to_string(const BowenFranksData& bf) {
  std::ostringstream out;
  out << "Z^" << bf.free_rank;
  for (const auto& d : bf.elementary_divisors) out << " + Z/" << d;
  out << ", det " << bf.det_i_minus_a;
  return out.str();
}

BowenFranksData bowen_franks(const Graph& g) {
  IntMatrix A = IntMatrix::from_counts(adjacency_matrix(g));
  IntMatrix base = IntMatrix::identity(A.size()) - A.transposed();
  SmithResult snf = smith_normal_form(base);
  BowenFranksData bf;
  for (const auto& d : snf.diagonal()) {
    if (d == 0)
      ++bf.free_rank;
    else if (d > 1)
      bf.elementary_divisors.push_back(d);
  }
  bf.det_i_minus_a = determinant_cofactor(IntMatrix::identity(A.size()) - A);
  return bf;
}

bool is_irreducible(const Graph& g) {
  if (g.edges().empty()) return false;
  // Strong connectivity: every vertex reaches every other, checked by two
  // sweeps from an arbitrary root (forwards and backwards).
  auto sweep = [&g](bool forward) {
    std::set<VertexId> seen{g.vertices().front()};
    std::vector<VertexId> todo{g.vertices().front()};
    while (!todo.empty()) {
      VertexId v = todo.back();
      todo.pop_back();
      const auto& nbrs = forward ? g.out_edges(v) : g.in_edges(v);
      for (const auto& name : nbrs) {
        const Edge& e = g.edge(name);
        const VertexId& w = forward ? e.dst : e.src;
        if (seen.insert(w).second) todo.push_back(w);
      }
    }
    return seen.size() == g.vertices().size();
  };
  return sweep(true) && sweep(false);
}

bool is_trivial_cycle(const Graph& g) {
  if (g.edges().size() != g.vertices().size()) return false;
  for (const auto& v : g.vertices())
    if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
  return is_irreducible(g);
}

std::string to_string(FranksVerdict v) {
  switch (v) {
    case FranksVerdict::Equivalent: return "equivalent";
    case FranksVerdict::NotEquivalent: return "not-equivalent";
    case FranksVerdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

FranksVerdict franks_compare(const Graph& a, const Graph& b) {
  const bool applicable = is_irreducible(a) && is_irreducible(b) &&
                          !is_trivial_cycle(a) && !is_trivial_cycle(b);
  if (!applicable) return FranksVerdict::Inapplicable;
  return bowen_franks(a) == bowen_franks(b) ? FranksVerdict::Equivalent
                                            : FranksVerdict::NotEquivalent;
}

}  // namespace oegraph
