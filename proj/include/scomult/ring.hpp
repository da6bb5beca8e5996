#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "scomult/element_set.hpp"

namespace scomult {

inline constexpr std::size_t kDefaultCap = 64;

enum class Presentation { zn_product, table };

/// A finite commutative unital ring with 1 != 0.
///
/// Elements are indices 0..order-1. For a product of Z_n the index is the
/// mixed-radix encoding of the residue tuple with the first component most
/// significant, so index order is residue-tuple lexicographic order. Table
/// rings use the table index as canonical order.
class Ring {
 public:
  static Ring zn_product(std::vector<unsigned> moduli, std::size_t cap = kDefaultCap);

  /// Validates every ring axiom exhaustively; throws AxiomViolation.
  static Ring from_tables(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                          Elem one, std::size_t cap = kDefaultCap);

  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  ElementSet all() const { return ElementSet::full(order_); }
  /// a * X
  ElementSet scale(Elem a, ElementSet xs) const;

  Presentation presentation() const noexcept { return presentation_; }
  /// Component moduli; empty for table rings.
  const std::vector<unsigned>& moduli() const noexcept { return moduli_; }
  std::vector<unsigned> residues(Elem a) const;
  Elem from_residues(std::span<const unsigned> residues) const;
  std::string label(Elem a) const;
  std::string name() const;

  const std::vector<std::uint8_t>& add_table() const { return add_; }
  const std::vector<std::uint8_t>& mul_table() const { return mul_; }

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;
  void finish();

  std::size_t order_ = 0;
  Presentation presentation_ = Presentation::table;
  std::vector<unsigned> moduli_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_zn_ring(std::vector<unsigned> moduli, std::size_t cap = kDefaultCap);

/// R1 x R2 with element index i1*|R2| + i2. Products of Z_n products stay
/// Z_n products.
RingPtr product_ring(const Ring& first, const Ring& second, std::size_t cap = kDefaultCap);

}  // namespace scomult
