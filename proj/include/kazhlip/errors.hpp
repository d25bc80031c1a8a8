#pragma once

#include <stdexcept>
#include <string>

namespace kazhlip {

// Violated precondition on a mathematical argument (nonpositive alpha,
// t outside the domain of phi, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input. `path` locates the offending field, e.g.
// "generators[1].map.nodes[0][1]".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kazhlip
