#pragma once

#include <stdexcept>
#include <string>

namespace hwp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, malformed set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested (m, r) or lemma parameters lie outside what the constructions cover.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node or iteration budget.
class SearchTimeout : public Error {
 public:
  using Error::Error;
};

/// A search proved that its ansatz admits no solution for the given input.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// A produced or loaded decomposition failed independent verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed certificate or descriptor text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two parts of a disjoint union share an edge.
class OverlapError : public Error {
 public:
  OverlapError(const std::string& what, std::string first_label, std::string second_label)
      : Error(what), first_(std::move(first_label)), second_(std::move(second_label)) {}

  const std::string& first_label() const { return first_; }
  const std::string& second_label() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace hwp
