#pragma once

#include <stdexcept>
#include <string>

namespace relpres {

// Classified failure; `kind` is a stable machine-readable tag
// (e.g. "NonAssociative", "NotUnimodular") used by the CLI exit-code map.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace relpres
