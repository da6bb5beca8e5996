#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "scomult/element_set.hpp"
#include "scomult/ideals.hpp"
#include "scomult/ring.hpp"

namespace scomult {

/// A finite unital module over a Ring. Carrier elements are indices
/// 0..order-1; addition and the scalar action are stored as full tables.
///
/// When the carrier is presented as Z_d1 x ... x Z_dm, `moduli()` holds the
/// d_j and indices are the mixed-radix encoding (first component most
/// significant), as for rings.
class Module {
 public:
  using Action = std::function<Elem(Elem r, Elem m)>;

  /// Display data. Empty labels default to the index (or residue tuple when
  /// moduli are given).
  struct Meta {
    std::string name;
    std::vector<unsigned> moduli;
    std::vector<std::string> labels;
  };

  /// Exhaustively validates the abelian group and action axioms; throws
  /// AxiomViolation with the witnessing elements. `action` is row-major
  /// with one row per ring element.
  static Module from_tables(RingPtr ring, std::size_t order, std::vector<Elem> add, std::vector<Elem> action,
                            Elem zero, Meta meta = {}, std::size_t cap = kDefaultCap);

  /// Carrier Z_d1 x ... x Z_dm (each d >= 1) with the given action.
  static Module from_moduli(RingPtr ring, std::vector<unsigned> moduli, const Action& action,
                            std::string name = {}, std::size_t cap = kDefaultCap);

  /// Residue tuple of a carrier index; {m} when no moduli are recorded.
  std::vector<unsigned> residues(Elem m) const;

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  bool is_zero() const noexcept { return order_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet zero_set() const { return ElementSet::single(zero_); }
  /// rX
  ElementSet scale(Elem r, ElementSet xs) const;

  const std::vector<unsigned>& moduli() const noexcept { return moduli_; }
  std::string label(Elem m) const { return labels_[m]; }
  const std::string& name() const { return name_; }

  const std::vector<std::uint8_t>& add_table() const { return add_; }
  const std::vector<std::uint8_t>& action_table() const { return act_; }

  /// Same ring (by value) and identical tables.
  friend bool operator==(const Module& a, const Module& b);

 private:
  Module() = default;

  RingPtr ring_;
  std::size_t order_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> act_;
  std::vector<std::uint8_t> neg_;
  Elem zero_ = 0;
  std::vector<unsigned> moduli_;
  std::vector<std::string> labels_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const Module>;

/// R as a module over itself.
ModulePtr self_module(RingPtr ring);
/// Z_d over Z_n (single-modulus ring, d | n), r.m = rm mod d.
ModulePtr divisor_module(RingPtr ring, unsigned d);
/// M1 (+) M2 over a common ring, index i1*|M2| + i2.
ModulePtr direct_sum(const Module& first, const Module& second, std::size_t cap = kDefaultCap);
/// M1 x M2 over R1 x R2 with componentwise action.
ModulePtr product_module(const Module& first, const Module& second, std::size_t cap = kDefaultCap);
/// M/N; cosets ordered by least representative, labelled "[rep]".
ModulePtr quotient_module(const Module& m, ElementSet n);
/// N as a module in its own right, elements in increasing index order.
ModulePtr submodule_as_module(const Module& m, ElementSet n);
/// R/I, the cyclic module for the ideal I.
ModulePtr cyclic_quotient(RingPtr ring, const Ideal& ideal);

}  // namespace scomult
