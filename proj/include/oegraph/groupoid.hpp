#ifndef OEGRAPH_GROUPOID_HPP
#define OEGRAPH_GROUPOID_HPP

#include <cstdint>
#include <vector>

#include "oegraph/boundary.hpp"

namespace oegraph {

/*
 * An element (x, k, y) of the groupoid of a graph: two boundary points whose
 * tails agree after shifting, together with the lag k = m - n of a witness
 * pair shift^m(x) = shift^n(y).  Equality is on the triple (x, k, y); the
 * stored witness is one valid certificate, not part of the identity.
 */
class GroupoidElement {
 public:
  const BoundaryPoint& x() const { return x_; }
  const BoundaryPoint& y() const { return y_; }
  std::int64_t k() const { return k_; }
  std::size_t witness_m() const { return m_; }
  std::size_t witness_n() const { return n_; }

  bool is_unit() const { return k_ == 0 && x_ == y_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.x_ == b.x_ && a.k_ == b.k_ && a.y_ == b.y_;
  }
  friend bool operator<(const GroupoidElement& a, const GroupoidElement& b) {
    if (!(a.x_ == b.x_)) return a.x_ < b.x_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.y_ < b.y_;
  }

 private:
  friend GroupoidElement make_element(const Graph&, const BoundaryPoint&, std::size_t,
                                      std::size_t, const BoundaryPoint&);
  friend GroupoidElement compose(const Graph&, const GroupoidElement&, const GroupoidElement&);
  friend GroupoidElement inverse(const Graph&, const GroupoidElement&);

  GroupoidElement() = default;
  BoundaryPoint x_, y_;
  std::int64_t k_ = 0;
  std::size_t m_ = 0, n_ = 0;
};

std::string to_string(const GroupoidElement& e);

// Builds (x, m - n, y) after checking the witness shift^m(x) = shift^n(y)
// exactly; throws DomainError naming the two shifted points on mismatch.
GroupoidElement make_element(const Graph& g, const BoundaryPoint& x, std::size_t m,
                             std::size_t n, const BoundaryPoint& y);

// Product (x, k + l, z) of (x, k, y) and (y, l, z); a fresh witness is
// recomputed and revalidated.  Throws DomainError when a.y != b.x.
GroupoidElement compose(const Graph& g, const GroupoidElement& a, const GroupoidElement& b);

// (y, -k, x), with the witness swapped.
GroupoidElement inverse(const Graph& g, const GroupoidElement& e);

// The unit (x, 0, x) at a point.
GroupoidElement unit_at(const Graph& g, const BoundaryPoint& x);

// Range and source units of an element.
GroupoidElement range_unit(const Graph& g, const GroupoidElement& e);
GroupoidElement source_unit(const Graph& g, const GroupoidElement& e);

// All elements with witnesses m, n <= depth whose endpoints are exact
// points of the depth-bounded enumeration, deduplicated by (x, k, y) and
// sorted.
std::vector<GroupoidElement> enumerate_elements(const Graph& g, std::size_t depth);

}  // namespace oegraph

#endif
