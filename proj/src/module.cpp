#include "scomult/module.hpp"

#include <stdexcept>

#include "scomult/errors.hpp"

namespace scomult {

namespace {

void check_cap(std::size_t order, std::size_t cap) {
  if (cap > kMaxElements) throw SizeCapExceeded("cap", cap, kMaxElements);
  if (order > cap) throw SizeCapExceeded("module", order, cap);
}

std::string tuple_label(const std::vector<unsigned>& res) {
  if (res.size() == 1) return std::to_string(res[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(res[i]);
  }
  return out + ")";
}

std::vector<unsigned> decode(Elem m, const std::vector<unsigned>& moduli) {
  std::vector<unsigned> out(moduli.size());
  for (std::size_t i = moduli.size(); i-- > 0;) {
    out[i] = m % moduli[i];
    m /= moduli[i];
  }
  return out;
}

Elem encode(const std::vector<unsigned>& res, const std::vector<unsigned>& moduli) {
  Elem index = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) index = index * moduli[i] + res[i];
  return index;
}

}  // namespace

Module Module::from_tables(RingPtr ring, std::size_t order, std::vector<Elem> add, std::vector<Elem> action,
                           Elem zero, Meta meta, std::size_t cap) {
  if (!ring) throw std::invalid_argument("module needs a ring");
  check_cap(order, cap);
  if (order == 0) throw std::invalid_argument("module carrier must be nonempty");
  const std::size_t rn = ring->order();
  if (add.size() != order * order) throw std::invalid_argument("module addition table must be order x order");
  if (action.size() != rn * order) throw std::invalid_argument("action table must be |R| x order");
  if (zero >= order) throw std::invalid_argument("module zero out of range");
  for (Elem v : add)
    if (v >= order) throw std::invalid_argument("module addition entry out of range");
  for (Elem v : action)
    if (v >= order) throw std::invalid_argument("action entry out of range");

  const auto n = static_cast<Elem>(order);
  auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto X = [&](Elem r, Elem m) { return action[r * n + m]; };
  for (Elem a = 0; a < n; ++a) {
    if (A(a, zero) != a) throw AxiomViolation("module additive identity", {a});
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw AxiomViolation("module additive commutativity", {a, b});
      if (A(a, b) == zero) has_inverse = true;
      for (Elem c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("module additive associativity", {a, b, c});
    }
    if (!has_inverse) throw AxiomViolation("module additive inverse", {a});
    if (X(ring->one(), a) != a) throw AxiomViolation("1.m = m", {a});
  }
  for (Elem r = 0; r < rn; ++r)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (X(r, A(a, b)) != A(X(r, a), X(r, b))) throw AxiomViolation("r(m+m') = rm+rm'", {r, a, b});
  for (Elem r = 0; r < rn; ++r)
    for (Elem s = 0; s < rn; ++s)
      for (Elem a = 0; a < n; ++a) {
        if (X(ring->add(r, s), a) != A(X(r, a), X(s, a))) throw AxiomViolation("(r+r')m = rm+r'm", {r, s, a});
        if (X(ring->mul(r, s), a) != X(r, X(s, a))) throw AxiomViolation("(rr')m = r(r'm)", {r, s, a});
      }

  Module m;
  m.ring_ = std::move(ring);
  m.order_ = order;
  m.add_.assign(add.begin(), add.end());
  m.act_.assign(action.begin(), action.end());
  m.zero_ = zero;
  m.neg_.assign(order, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (A(a, b) == zero) {
        m.neg_[a] = static_cast<std::uint8_t>(b);
        break;
      }
  std::size_t moduli_product = 1;
  for (unsigned d : meta.moduli) moduli_product *= d;
  if (!meta.moduli.empty() && moduli_product != order) throw std::invalid_argument("carrier moduli do not match order");
  m.moduli_ = std::move(meta.moduli);
  if (meta.labels.empty()) {
    for (Elem a = 0; a < n; ++a)
      meta.labels.push_back(m.moduli_.empty() ? std::to_string(a) : tuple_label(decode(a, m.moduli_)));
  }
  if (meta.labels.size() != order) throw std::invalid_argument("label count does not match order");
  m.labels_ = std::move(meta.labels);
  m.name_ = std::move(meta.name);
  return m;
}

Module Module::from_moduli(RingPtr ring, std::vector<unsigned> moduli, const Action& action, std::string name,
                           std::size_t cap) {
  if (!ring) throw std::invalid_argument("module needs a ring");
  if (moduli.empty()) throw std::invalid_argument("carrier needs at least one modulus");
  std::size_t order = 1;
  for (unsigned d : moduli) {
    if (d < 1) throw std::invalid_argument("carrier moduli must be >= 1");
    order *= d;
    if (order > kMaxElements) break;
  }
  check_cap(order, cap);
  std::vector<Elem> add(order * order), act(ring->order() * order);
  for (Elem a = 0; a < order; ++a) {
    const auto ra = decode(a, moduli);
    for (Elem b = 0; b < order; ++b) {
      auto rb = decode(b, moduli);
      for (std::size_t i = 0; i < moduli.size(); ++i) rb[i] = (ra[i] + rb[i]) % moduli[i];
      add[a * order + b] = encode(rb, moduli);
    }
    for (Elem r = 0; r < ring->order(); ++r) {
      const Elem v = action(r, a);
      if (v >= order) throw std::invalid_argument("action value out of range");
      act[r * order + a] = v;
    }
  }
  Meta meta{std::move(name), std::move(moduli), {}};
  return from_tables(std::move(ring), order, std::move(add), std::move(act), 0, std::move(meta), cap);
}

std::vector<unsigned> Module::residues(Elem m) const {
  if (moduli_.empty()) return {m};
  return decode(m, moduli_);
}

ElementSet Module::scale(Elem r, ElementSet xs) const {
  ElementSet out;
  for (Elem x : xs) out.insert(act(r, x));
  return out;
}

bool operator==(const Module& a, const Module& b) {
  return a.order_ == b.order_ && *a.ring_ == *b.ring_ && a.zero_ == b.zero_ && a.add_ == b.add_ &&
         a.act_ == b.act_;
}

ModulePtr self_module(RingPtr ring) {
  const auto n = ring->order();
  std::vector<Elem> add(n * n), act(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = ring->add(a, b);
      act[a * n + b] = ring->mul(a, b);
    }
  Module::Meta meta{ring->name(), ring->moduli(), {}};
  for (Elem a = 0; a < n; ++a) meta.labels.push_back(ring->label(a));
  const Elem zero = ring->zero();
  return std::make_shared<const Module>(
      Module::from_tables(std::move(ring), n, std::move(add), std::move(act), zero, std::move(meta)));
}

ModulePtr divisor_module(RingPtr ring, unsigned d) {
  if (ring->presentation() != Presentation::zn_product || ring->moduli().size() != 1)
    throw std::invalid_argument("divisor modules need a ring Z_n");
  const unsigned n = ring->moduli()[0];
  if (d == 0 || n % d != 0) throw std::invalid_argument("divisor module needs d | n");
  std::string name = "Z" + std::to_string(d) + " over Z" + std::to_string(n);
  return std::make_shared<const Module>(
      Module::from_moduli(std::move(ring), {d}, [d](Elem r, Elem m) { return (r * m) % d; }, std::move(name)));
}

ModulePtr direct_sum(const Module& first, const Module& second, std::size_t cap) {
  if (!(first.ring() == second.ring())) throw std::invalid_argument("direct sum needs a common ring");
  const std::size_t n1 = first.order(), n2 = second.order(), n = n1 * n2;
  check_cap(n, cap);
  const auto rn = first.ring().order();
  std::vector<Elem> add(n * n), act(rn * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      add[a * n + b] = first.add(a / n2, b / n2) * n2 + second.add(a % n2, b % n2);
    for (Elem r = 0; r < rn; ++r) act[r * n + a] = first.act(r, a / n2) * n2 + second.act(r, a % n2);
  }
  Module::Meta meta;
  meta.name = first.name() + " + " + second.name();
  if (!first.moduli().empty() && !second.moduli().empty()) {
    meta.moduli = first.moduli();
    meta.moduli.insert(meta.moduli.end(), second.moduli().begin(), second.moduli().end());
  } else {
    for (Elem a = 0; a < n; ++a) meta.labels.push_back("(" + first.label(a / n2) + "," + second.label(a % n2) + ")");
  }
  return std::make_shared<const Module>(Module::from_tables(first.ring_ptr(), n, std::move(add), std::move(act),
                                                            first.zero() * n2 + second.zero(), std::move(meta),
                                                            cap));
}

ModulePtr product_module(const Module& first, const Module& second, std::size_t cap) {
  auto ring = product_ring(first.ring(), second.ring(), cap);
  const std::size_t n1 = first.order(), n2 = second.order(), n = n1 * n2;
  check_cap(n, cap);
  const auto r2 = second.ring().order();
  std::vector<Elem> add(n * n), act(ring->order() * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      add[a * n + b] = first.add(a / n2, b / n2) * n2 + second.add(a % n2, b % n2);
    for (Elem r = 0; r < ring->order(); ++r)
      act[r * n + a] = first.act(r / r2, a / n2) * n2 + second.act(r % r2, a % n2);
  }
  Module::Meta meta;
  meta.name = first.name() + " x " + second.name();
  for (Elem a = 0; a < n; ++a) meta.labels.push_back("(" + first.label(a / n2) + "," + second.label(a % n2) + ")");
  return std::make_shared<const Module>(Module::from_tables(std::move(ring), n, std::move(add), std::move(act),
                                                            first.zero() * n2 + second.zero(), std::move(meta),
                                                            cap));
}

ModulePtr quotient_module(const Module& m, ElementSet n) {
  if (!n.contains(m.zero()) || !n.subset_of(m.all())) throw std::invalid_argument("quotient by a non-submodule");
  std::vector<Elem> coset_of(m.order(), 0);
  std::vector<Elem> reps;
  std::vector<bool> done(m.order(), false);
  for (Elem a = 0; a < m.order(); ++a) {
    if (done[a]) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem x : n) {
      const Elem b = m.add(a, x);
      done[b] = true;
      coset_of[b] = id;
    }
  }
  const std::size_t q = reps.size();
  const auto rn = m.ring().order();
  std::vector<Elem> add(q * q), act(rn * q);
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) add[a * q + b] = coset_of[m.add(reps[a], reps[b])];
    for (Elem r = 0; r < rn; ++r) act[r * q + a] = coset_of[m.act(r, reps[a])];
  }
  Module::Meta meta;
  meta.name = m.name() + " / " + std::to_string(n.size());
  for (Elem rep : reps) meta.labels.push_back("[" + m.label(rep) + "]");
  return std::make_shared<const Module>(Module::from_tables(m.ring_ptr(), q, std::move(add), std::move(act),
                                                            coset_of[m.zero()], std::move(meta)));
}

ModulePtr submodule_as_module(const Module& m, ElementSet n) {
  const auto elems = n.elements();
  std::vector<Elem> index(m.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const std::size_t k = elems.size();
  const auto rn = m.ring().order();
  std::vector<Elem> add(k * k), act(rn * k);
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      const Elem s = m.add(elems[a], elems[b]);
      if (!n.contains(s)) throw std::invalid_argument("not closed under addition");
      add[a * k + b] = index[s];
    }
    for (Elem r = 0; r < rn; ++r) {
      const Elem v = m.act(r, elems[a]);
      if (!n.contains(v)) throw std::invalid_argument("not closed under the action");
      act[r * k + a] = index[v];
    }
  }
  if (!n.contains(m.zero())) throw std::invalid_argument("submodule must contain 0");
  Module::Meta meta;
  meta.name = m.name() + " > " + std::to_string(k);
  for (Elem e : elems) meta.labels.push_back(m.label(e));
  return std::make_shared<const Module>(Module::from_tables(m.ring_ptr(), k, std::move(add), std::move(act),
                                                            index[m.zero()], std::move(meta)));
}

ModulePtr cyclic_quotient(RingPtr ring, const Ideal& ideal) {
  auto self = self_module(std::move(ring));
  return quotient_module(*self, ideal.elements);
}

}  // namespace scomult
