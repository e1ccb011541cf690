#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace axial {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No edges survived normalization, so there is no graph to build.
class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("no edges survived normalization; graph is empty") {}
};

/// The requested root space does not occur in any edge.
class RootMissingError : public Error {
 public:
  explicit RootMissingError(const std::string& root)
      : Error("root space '" + root + "' does not appear in the edge list"), root_(root) {}

  const std::string& root() const noexcept { return root_; }

 private:
  std::string root_;
};

/// A space name was queried that the graph does not contain.
class UnknownSpaceError : public Error {
 public:
  explicit UnknownSpaceError(const std::string& name)
      : Error("unknown space '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Aggregate depth measures require full reachability; this error names
/// every space that cannot be reached from the origin.
class DisconnectedError : public Error {
 public:
  DisconnectedError(const std::string& origin, std::vector<std::string> unreachable)
      : Error(make_message(origin, unreachable)),
        origin_(origin),
        unreachable_(std::move(unreachable)) {}

  const std::string& origin() const noexcept { return origin_; }
  const std::vector<std::string>& unreachable() const noexcept { return unreachable_; }

 private:
  static std::string make_message(const std::string& origin,
                                  const std::vector<std::string>& unreachable) {
    std::string msg = "graph is disconnected: unreachable from '" + origin + "':";
    for (const auto& name : unreachable) msg += " " + name;
    return msg;
  }

  std::string origin_;
  std::vector<std::string> unreachable_;
};

/// Fewer than two spaces: mean depth and the report are undefined.
class DegenerateGraphError : public Error {
 public:
  explicit DegenerateGraphError(const std::string& what) : Error(what) {}
};

/// A space name violated the token rules (non-empty, letters/digits/underscore).
class InvalidSpaceNameError : public Error {
 public:
  explicit InvalidSpaceNameError(const std::string& name)
      : Error("invalid space name '" + name +
              "': must be a non-empty token of letters, digits, or underscores") {}
};

}  // namespace axial
