#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "scomult/element_set.hpp"

namespace scomult {

/// A ring, module or homomorphism table failed an axiom. `witnesses` are
/// the element indices that exhibit the failure.
class AxiomViolation : public std::invalid_argument {
 public:
  AxiomViolation(std::string axiom, std::vector<Elem> witnesses);
  const std::string& axiom() const { return axiom_; }
  const std::vector<Elem>& witnesses() const { return witnesses_; }

 private:
  std::string axiom_;
  std::vector<Elem> witnesses_;
};

class SizeCapExceeded : public std::length_error {
 public:
  SizeCapExceeded(std::string what_kind, std::size_t size, std::size_t cap);
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

enum class McsViolation { contains_zero, missing_one, not_closed };

class McsError : public std::invalid_argument {
 public:
  McsError(McsViolation kind, Elem s = 0, Elem t = 0);
  McsViolation kind() const { return kind_; }
  Elem s() const { return s_; }
  Elem t() const { return t_; }

 private:
  McsViolation kind_;
  Elem s_;
  Elem t_;
};

/// (P:M) or ann(N) meets S, so an S-characterization does not apply.
class DisjointnessFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionUnmet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LocalizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownStatement : public std::invalid_argument {
 public:
  explicit UnknownStatement(const std::string& id) : std::invalid_argument("unknown statement: " + id) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace scomult
