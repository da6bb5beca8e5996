#include "scomult/errors.hpp"

namespace scomult {

namespace {

std::string join_witnesses(const std::vector<Elem>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

const char* mcs_message(McsViolation kind) {
  switch (kind) {
    case McsViolation::contains_zero:
      return "multiplicatively closed set contains 0";
    case McsViolation::missing_one:
      return "multiplicatively closed set does not contain 1";
    case McsViolation::not_closed:
      return "multiplicatively closed set is not closed under products";
  }
  return "invalid multiplicatively closed set";
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Elem> witnesses)
    : std::invalid_argument("axiom violated: " + axiom + " at (" + join_witnesses(witnesses) + ")"),
      axiom_(std::move(axiom)),
      witnesses_(std::move(witnesses)) {}

SizeCapExceeded::SizeCapExceeded(std::string what_kind, std::size_t size, std::size_t cap)
    : std::length_error(what_kind + " of size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
      size_(size),
      cap_(cap) {}

McsError::McsError(McsViolation kind, Elem s, Elem t)
    : std::invalid_argument(kind == McsViolation::not_closed
                                ? std::string(mcs_message(kind)) + " (" + std::to_string(s) + "*" +
                                      std::to_string(t) + ")"
                                : std::string(mcs_message(kind))),
      kind_(kind),
      s_(s),
      t_(t) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace scomult
