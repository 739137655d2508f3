#include "oegraph/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace oegraph {

std::string to_string(const GroupoidElement& e) {
  std::ostringstream out;
  out << "(" << to_string(e.x()) << ", " << e.k() << ", " << to_string(e.y()) << ")";
  return out.str();
}

GroupoidElement make_element(const Graph& g, const BoundaryPoint& x, std::size_t m,
                             std::size_t n, const BoundaryPoint& y) {
  if (!x.exact() || !y.exact())
    throw DomainError("groupoid elements need exact boundary points");
  if (!x.length_at_least(m))
    throw DomainError("witness shift " + std::to_string(m) + " exceeds the length of " +
                      to_string(x));
  if (!y.length_at_least(n))
    throw DomainError("witness shift " + std::to_string(n) + " exceeds the length of " +
                      to_string(y));
  BoundaryPoint sx = shift_n(g, x, m);
  BoundaryPoint sy = shift_n(g, y, n);
  if (!(sx == sy))
    throw DomainError("witness fails: shift^" + std::to_string(m) + " gives " + to_string(sx) +
                      " but shift^" + std::to_string(n) + " gives " + to_string(sy));
  GroupoidElement e;
  e.x_ = x;
  e.y_ = y;
  e.k_ = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n);
  e.m_ = m;
  e.n_ = n;
  return e;
}

GroupoidElement compose(const Graph& g, const GroupoidElement& a, const GroupoidElement& b) {
  if (!(a.y_ == b.x_))
    throw DomainError("elements do not compose: middle points " + to_string(a.y_) + " and " +
                      to_string(b.x_) + " differ");
  // Summed witnesses certify the product on infinite points.  When the
  // points are finite they all share one sink tail, and shifting each point
  // all the way to its endpoint is a witness that cannot overshoot.
  std::size_t m, n;
  if (a.x_.length() && b.y_.length()) {
    m = *a.x_.length();
    n = *b.y_.length();
  } else {
    m = a.m_ + b.m_;
    n = a.n_ + b.n_;
  }
  return make_element(g, a.x_, m, n, b.y_);
}

GroupoidElement inverse(const Graph& g, const GroupoidElement& e) {
  return make_element(g, e.y_, e.n_, e.m_, e.x_);
}

GroupoidElement unit_at(const Graph& g, const BoundaryPoint& x) {
  return make_element(g, x, 0, 0, x);
}

GroupoidElement range_unit(const Graph& g, const GroupoidElement& e) {
  return unit_at(g, e.x());
}

GroupoidElement source_unit(const Graph& g, const GroupoidElement& e) {
  return unit_at(g, e.y());
}

std::vector<GroupoidElement> enumerate_elements(const Graph& g, std::size_t depth) {
  std::vector<BoundaryPoint> pts;
  for (const auto& p : enumerate_boundary(g, depth))
    if (p.exact()) pts.push_back(p);

  std::set<GroupoidElement> out;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      for (std::size_t m = 0; m <= depth && x.length_at_least(m); ++m) {
        BoundaryPoint sx = shift_n(g, x, m);
        for (std::size_t n = 0; n <= depth && y.length_at_least(n); ++n) {
          if (sx == shift_n(g, y, n)) out.insert(make_element(g, x, m, n, y));
        }
      }
    }
  }
  return std::vector<GroupoidElement>(out.begin(), out.end());
}

}  // namespace oegraph
