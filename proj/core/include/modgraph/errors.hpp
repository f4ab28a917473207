// errors.hpp
// Error taxonomy used across the library.
//   DomainError      - input is outside an operation's contract (odd N, bad genus, ...)
//   StructuralError  - a serialized object fails validation (subtype of DomainError)
//   CapabilityError  - request exceeds a desk-scale cap or a search/sampling budget
#pragma once

#include <stdexcept>
#include <string>

namespace modgraph {

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class StructuralError : public DomainError {
 public:
  explicit StructuralError(const std::string& what) : DomainError(what) {}
};

class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modgraph
