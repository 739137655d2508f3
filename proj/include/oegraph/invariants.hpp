#ifndef OEGRAPH_INVARIANTS_HPP
#define OEGRAPH_INVARIANTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "oegraph/graph.hpp"

namespace oegraph {

using BigInt = boost::multiprecision::cpp_int;

// A square integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_counts(const CountMatrix& counts);

  std::size_t size() const { return n_; }
  BigInt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

std::string to_string(const IntMatrix& m);

// Exact determinant by cofactor expansion.
BigInt determinant_cofactor(const IntMatrix& m);

/*
 * Smith normal form: unimodular U, V with U * A * V = S, S diagonal with
 * non-negative entries and S[i][i] dividing S[i+1][i+1].  The determinant
 * signs of U and V are tracked through the row and column operations, so
 * det A can be recovered from the diagonal without another elimination.
 */
struct SmithResult {
  IntMatrix S, U, V;
  int det_sign_U = 1;
  int det_sign_V = 1;

  std::vector<BigInt> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& A);

// det A = (prod of the diagonal of S) / (det U * det V), using the tracked
// signs; an independent route to the determinant.
BigInt determinant_via_smith(const SmithResult& s);

/*
 * The cokernel of I - A^t together with det(I - A), where A is the
 * adjacency matrix: elementary divisors > 1, the number of zero divisors
 * (the free rank), and the determinant.
 */
struct BowenFranksData {
  std::vector<BigInt> elementary_divisors;  // the entries > 1, in divisibility order
  std::size_t free_rank = 0;
  BigInt det_i_minus_a;

  friend bool operator==(const BowenFranksData&, const BowenFranksData&) = default;
};

std::string to_string(const BowenFranksData& bf);

BowenFranksData bowen_franks(const Graph& g);

// Strongly connected with at least one edge.
bool is_irreducible(const Graph& g);

// The whole graph is one vertex-simple cycle and nothing else.
bool is_trivial_cycle(const Graph& g);

enum class FranksVerdict { Equivalent, NotEquivalent, Inapplicable };

std::string to_string(FranksVerdict v);

/*
 * Compares the flow invariants of two graphs.  Applicable only when both
 * are irreducible and neither is a bare cycle; then the pair (cokernel,
 * determinant) decides equivalence.
 */
FranksVerdict franks_compare(const Graph& a, const Graph& b);

}  // namespace oegraph

#endif
