#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cliquevec {

// All counts in this library are exact, unbounded non-negative integers.
// Binomials such as C(10^6, 10) overflow any fixed-width type, and every
// consumer of these values asserts equalities, so there is no floating
// point anywhere in the library.
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A construction whose applicability condition does not hold for the
// requested input. Carries a machine-readable reason.
class InapplicableError : public std::runtime_error {
 public:
  explicit InapplicableError(const std::string& reason)
      : std::runtime_error(reason) {}
};

// Internal consistency failure: a state that the underlying theory rules
// out was reached (e.g. a board move broke a conserved sum).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what)
      : std::logic_error(what) {}
};

// An operation exceeded an explicit materialization or enumeration cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cliquevec
