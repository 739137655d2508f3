#ifndef OEGRAPH_ERRORS_HPP
#define OEGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oegraph {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph data (duplicate names, dangling endpoints, ...).
struct GraphError : Error {
  using Error::Error;
};

// Precondition violation on paths, boundary points or groupoid elements.
struct DomainError : Error {
  using Error::Error;
};

// Ill-formed orbit map, or a rule applied outside its domain.
struct MapError : Error {
  using Error::Error;
};

// Move precondition violation (plugging a non-sink, swapping clashing sinks, ...).
struct MoveError : Error {
  using Error::Error;
};

// Parse or serialization failure on files and reports.
struct IoError : Error {
  using Error::Error;
};

}  // namespace oegraph

#endif
