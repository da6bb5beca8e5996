#include "scomult/ring.hpp"

#include <stdexcept>

#include "scomult/errors.hpp"

namespace scomult {

namespace {

void check_cap(std::size_t order, std::size_t cap) {
  if (cap > kMaxElements) throw SizeCapExceeded("cap", cap, kMaxElements);
  if (order > cap) throw SizeCapExceeded("ring", order, cap);
}

}  // namespace

Ring Ring::zn_product(std::vector<unsigned> moduli, std::size_t cap) {
  if (moduli.empty()) throw std::invalid_argument("zn_product needs at least one modulus");
  std::size_t order = 1;
  for (unsigned n : moduli) {
    if (n < 2) throw std::invalid_argument("zn_product moduli must be >= 2 (zero ring rejected)");
    order *= n;
    if (order > kMaxElements) break;
  }
  check_cap(order, cap);

  Ring r;
  r.order_ = order;
  r.presentation_ = Presentation::zn_product;
  r.moduli_ = std::move(moduli);
  r.add_.resize(order * order);
  r.mul_.resize(order * order);
  std::vector<unsigned> ra(r.moduli_.size()), rb(r.moduli_.size()), out(r.moduli_.size());
  for (Elem a = 0; a < order; ++a) {
    ra = r.residues(a);
    for (Elem b = 0; b < order; ++b) {
      rb = r.residues(b);
      for (std::size_t i = 0; i < ra.size(); ++i) out[i] = (ra[i] + rb[i]) % r.moduli_[i];
      r.add_[a * order + b] = static_cast<std::uint8_t>(r.from_residues(out));
      for (std::size_t i = 0; i < ra.size(); ++i) out[i] = (ra[i] * rb[i]) % r.moduli_[i];
      r.mul_[a * order + b] = static_cast<std::uint8_t>(r.from_residues(out));
    }
  }
  r.zero_ = 0;
  std::vector<unsigned> ones(r.moduli_.size(), 1);
  r.one_ = r.from_residues(ones);
  r.finish();
  return r;
}

Ring Ring::from_tables(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                       std::size_t cap) {
  check_cap(order, cap);
  if (order == 0) throw std::invalid_argument("ring must have at least one element");
  if (add.size() != order * order || mul.size() != order * order)
    throw std::invalid_argument("ring tables must be order x order");
  if (zero >= order || one >= order) throw std::invalid_argument("zero/one out of range");
  for (Elem v : add)
    if (v >= order) throw std::invalid_argument("addition table entry out of range");
  for (Elem v : mul)
    if (v >= order) throw std::invalid_argument("multiplication table entry out of range");
  if (zero == one) throw AxiomViolation("1 != 0", {zero});

  const auto n = static_cast<Elem>(order);
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (A(a, zero) != a) throw AxiomViolation("additive identity", {a});
    if (M(a, one) != a) throw AxiomViolation("multiplicative identity", {a});
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", {a, b});
      if (M(a, b) != M(b, a)) throw AxiomViolation("multiplicative commutativity", {a, b});
      if (A(a, b) == zero) has_inverse = true;
    }
    if (!has_inverse) throw AxiomViolation("additive inverse", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive associativity", {a, b, c});
        if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation("multiplicative associativity", {a, b, c});
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("distributivity", {a, b, c});
      }

  Ring r;
  r.order_ = order;
  r.presentation_ = Presentation::table;
  r.add_.assign(add.begin(), add.end());
  r.mul_.assign(mul.begin(), mul.end());
  r.zero_ = zero;
  r.one_ = one;
  r.finish();
  return r;
}

void Ring::finish() {
  neg_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (add(a, b) == zero_) {
        neg_[a] = static_cast<std::uint8_t>(b);
        break;
      }
}

ElementSet Ring::scale(Elem a, ElementSet xs) const {
  ElementSet out;
  for (Elem x : xs) out.insert(mul(a, x));
  return out;
}

std::vector<unsigned> Ring::residues(Elem a) const {
  if (presentation_ != Presentation::zn_product) return {a};
  std::vector<unsigned> out(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    out[i] = a % moduli_[i];
    a /= moduli_[i];
  }
  return out;
}

Elem Ring::from_residues(std::span<const unsigned> residues) const {
  if (presentation_ != Presentation::zn_product) {
    if (residues.size() != 1 || residues[0] >= order_) throw std::out_of_range("bad table ring element");
    return residues[0];
  }
  if (residues.size() != moduli_.size()) throw std::out_of_range("residue tuple has wrong length");
  Elem index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (residues[i] >= moduli_[i]) throw std::out_of_range("residue out of range");
    index = index * moduli_[i] + residues[i];
  }
  return index;
}

std::string Ring::label(Elem a) const {
  if (presentation_ != Presentation::zn_product || moduli_.size() == 1) return std::to_string(a);
  std::string out = "(";
  auto res = residues(a);
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(res[i]);
  }
  return out + ")";
}

std::string Ring::name() const {
  if (presentation_ != Presentation::zn_product) return "T" + std::to_string(order_);
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += "Z" + std::to_string(moduli_[i]);
  }
  return out;
}

bool operator==(const Ring& a, const Ring& b) {
  return a.order_ == b.order_ && a.presentation_ == b.presentation_ && a.moduli_ == b.moduli_ &&
         a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
}

RingPtr make_zn_ring(std::vector<unsigned> moduli, std::size_t cap) {
  return std::make_shared<const Ring>(Ring::zn_product(std::move(moduli), cap));
}

RingPtr product_ring(const Ring& first, const Ring& second, std::size_t cap) {
  if (first.presentation() == Presentation::zn_product && second.presentation() == Presentation::zn_product) {
    std::vector<unsigned> moduli = first.moduli();
    moduli.insert(moduli.end(), second.moduli().begin(), second.moduli().end());
    return make_zn_ring(std::move(moduli), cap);
  }
  const std::size_t n1 = first.order(), n2 = second.order(), n = n1 * n2;
  if (n > cap) throw SizeCapExceeded("ring", n, cap);
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
      add[a * n + b] = first.add(a1, b1) * n2 + second.add(a2, b2);
      mul[a * n + b] = first.mul(a1, b1) * n2 + second.mul(a2, b2);
    }
  const Elem zero = first.zero() * n2 + second.zero();
  const Elem one = first.one() * n2 + second.one();
  return std::make_shared<const Ring>(Ring::from_tables(n, std::move(add), std::move(mul), zero, one, cap));
}

}  // namespace scomult
