#pragma once

#include <stdexcept>
#include <string>

namespace knot {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubgroup : std::runtime_error {
  explicit NotSubgroup(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::runtime_error {
  explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct NotCyclic : std::runtime_error {
  explicit NotCyclic(const std::string& what) : std::runtime_error(what) {}
};

struct NotContained : std::runtime_error {
  explicit NotContained(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct NoLiftFound : std::runtime_error {
  explicit NoLiftFound(const std::string& what) : std::runtime_error(what) {}
};

struct UnverifiedExtension : std::runtime_error {
  explicit UnverifiedExtension(const std::string& what) : std::runtime_error(what) {}
};

struct NotTransitive : std::runtime_error {
  explicit NotTransitive(const std::string& what) : std::runtime_error(what) {}
};

struct NotStabilizer : std::runtime_error {
  explicit NotStabilizer(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownConstruction : std::runtime_error {
  explicit UnknownConstruction(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knot
