#include "scomult/localization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "scomult/errors.hpp"
#include "scomult/submodules.hpp"

namespace scomult {

namespace {

struct Classes {
  std::vector<Elem> class_of;
  std::vector<std::pair<Elem, Elem>> reps;
};

/// Pairs (x, s) over a carrier of size n, with pair index x * |S| + i.
/// `scale(r, x)` is the ring action, `sub` and `zero` the carrier group.
Classes classify(std::size_t n, const std::vector<Elem>& s,
                 const std::function<Elem(Elem, Elem)>& scale, const std::function<Elem(Elem, Elem)>& sub, Elem zero,
                 PairRelation relation) {
  const std::size_t k = s.size();
  const std::size_t pairs = n * k;
  if (pairs > kMaxPairs) throw SizeCapExceeded("pair", pairs, kMaxPairs);
  const std::size_t words = (pairs + 63) / 64;
  std::vector<std::uint64_t> rel(pairs * words, 0);
  auto set = [&](std::size_t p, std::size_t q) { rel[p * words + q / 64] |= std::uint64_t{1} << (q % 64); };
  auto row = [&](std::size_t p) { return rel.begin() + static_cast<std::ptrdiff_t>(p * words); };

  for (std::size_t p = 0; p < pairs; ++p) {
    const Elem x = static_cast<Elem>(p / k), sx = s[p % k];
    for (std::size_t q = 0; q < pairs; ++q) {
      const Elem y = static_cast<Elem>(q / k), sy = s[q % k];
      const Elem diff = sub(scale(sy, x), scale(sx, y));
      bool related = false;
      if (relation == PairRelation::without_u_factor) {
        related = diff == zero;
      } else {
        for (Elem u : s)
          if (scale(u, diff) == zero) {
            related = true;
            break;
          }
      }
      if (related) set(p, q);
    }
  }

  // An equivalence relation: every related pair has identical rows.
  for (std::size_t p = 0; p < pairs; ++p) {
    if (!((rel[p * words + p / 64] >> (p % 64)) & 1U)) throw LocalizationError("pair relation is not reflexive");
    for (std::size_t q = 0; q < pairs; ++q) {
      if (!((rel[p * words + q / 64] >> (q % 64)) & 1U)) continue;
      if (!std::equal(row(p), row(p) + static_cast<std::ptrdiff_t>(words), row(q)))
        throw LocalizationError("pair relation is not transitive (pairs " + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
    }
  }

  Classes out;
  constexpr Elem kUnset = ~Elem{0};
  out.class_of.assign(pairs, kUnset);
  for (std::size_t p = 0; p < pairs; ++p) {
    if (out.class_of[p] != kUnset) continue;
    const auto id = static_cast<Elem>(out.reps.size());
    out.reps.emplace_back(static_cast<Elem>(p / k), s[p % k]);
    for (std::size_t q = p; q < pairs; ++q)
      if ((rel[p * words + q / 64] >> (q % 64)) & 1U) out.class_of[q] = id;
  }
  if (out.reps.size() > kMaxElements) throw SizeCapExceeded("localization", out.reps.size(), kMaxElements);
  return out;
}

std::size_t position(const std::vector<Elem>& s, Elem t) {
  auto it = std::find(s.begin(), s.end(), t);
  if (it == s.end()) throw std::invalid_argument("denominator not in S");
  return static_cast<std::size_t>(it - s.begin());
}

/// Every member pair of each class, so well-definedness can be checked on
/// two representatives.
std::vector<std::vector<std::size_t>> members(const std::vector<Elem>& class_of, std::size_t classes) {
  std::vector<std::vector<std::size_t>> out(classes);
  for (std::size_t p = 0; p < class_of.size(); ++p) out[class_of[p]].push_back(p);
  return out;
}

}  // namespace

Elem LocalizedRing::fraction(Elem r, Elem s) const { return class_of[r * denominators.size() + position(denominators, s)]; }
Elem LocalizedRing::canonical(Elem r) const { return fraction(r, base->one()); }

Elem LocalizedModule::fraction(Elem m, Elem s) const {
  return class_of[m * ring.denominators.size() + position(ring.denominators, s)];
}
Elem LocalizedModule::canonical(Elem m) const { return fraction(m, ring.base->one()); }

LocalizedRing localize_ring(const RingPtr& ring, const Mcs& s, PairRelation relation) {
  const Ring& r = *ring;
  LocalizedRing out;
  out.base = ring;
  out.denominators = s.sorted();
  const auto& den = out.denominators;
  auto cls = classify(
      r.order(), den, [&](Elem a, Elem x) { return r.mul(a, x); }, [&](Elem a, Elem b) { return r.sub(a, b); },
      r.zero(), relation);
  out.class_of = std::move(cls.class_of);
  out.representatives = std::move(cls.reps);

  const std::size_t n = out.representatives.size(), k = den.size();
  const auto groups = members(out.class_of, n);
  std::vector<Elem> add(n * n), mul(n * n);
  auto pair_of = [&](std::size_t p) { return std::pair<Elem, Elem>{static_cast<Elem>(p / k), den[p % k]}; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem sum = 0, prod = 0;
      bool first = true;
      for (std::size_t pa : {groups[a].front(), groups[a].back()})
        for (std::size_t pb : {groups[b].front(), groups[b].back()}) {
          const auto [x, sx] = pair_of(pa);
          const auto [y, sy] = pair_of(pb);
          const Elem ss = r.mul(sx, sy);
          const Elem this_sum = out.fraction(r.add(r.mul(sy, x), r.mul(sx, y)), ss);
          const Elem this_prod = out.fraction(r.mul(x, y), ss);
          if (first) {
            sum = this_sum;
            prod = this_prod;
            first = false;
          } else if (sum != this_sum || prod != this_prod) {
            throw LocalizationError("localized ring operations are not well defined");
          }
        }
      add[a * n + b] = sum;
      mul[a * n + b] = prod;
    }
  out.ring = std::make_shared<const Ring>(
      Ring::from_tables(n, std::move(add), std::move(mul), out.canonical(r.zero()), out.canonical(r.one())));
  return out;
}

LocalizedModule localize_module(const ModulePtr& m, const Mcs& s, PairRelation relation) {
  const Module& mod = *m;
  LocalizedModule out;
  out.base = m;
  out.ring = localize_ring(mod.ring_ptr(), s, relation);
  const auto& den = out.ring.denominators;
  const Ring& r = mod.ring();
  auto cls = classify(
      mod.order(), den, [&](Elem a, Elem x) { return mod.act(a, x); },
      [&](Elem a, Elem b) { return mod.sub(a, b); }, mod.zero(), relation);
  out.class_of = std::move(cls.class_of);
  out.representatives = std::move(cls.reps);

  const std::size_t n = out.representatives.size(), k = den.size();
  const std::size_t rn = out.ring.ring->order();
  const auto groups = members(out.class_of, n);
  const auto ring_groups = members(out.ring.class_of, rn);
  auto pair_of = [&](std::size_t p) { return std::pair<Elem, Elem>{static_cast<Elem>(p / k), den[p % k]}; };

  std::vector<Elem> add(n * n), act(rn * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem sum = 0;
      bool first = true;
      for (std::size_t pa : {groups[a].front(), groups[a].back()})
        for (std::size_t pb : {groups[b].front(), groups[b].back()}) {
          const auto [x, sx] = pair_of(pa);
          const auto [y, sy] = pair_of(pb);
          const Elem v = out.fraction(mod.add(mod.act(sy, x), mod.act(sx, y)), r.mul(sx, sy));
          if (first) {
            sum = v;
            first = false;
          } else if (v != sum) {
            throw LocalizationError("localized module addition is not well defined");
          }
        }
      add[a * n + b] = sum;
    }
    for (Elem c = 0; c < rn; ++c) {
      Elem val = 0;
      bool first = true;
      for (std::size_t pc : {ring_groups[c].front(), ring_groups[c].back()})
        for (std::size_t pa : {groups[a].front(), groups[a].back()}) {
          const auto [rr, sr] = pair_of(pc);
          const auto [x, sx] = pair_of(pa);
          const Elem v = out.fraction(mod.act(rr, x), r.mul(sr, sx));
          if (first) {
            val = v;
            first = false;
          } else if (v != val) {
            throw LocalizationError("localized action is not well defined");
          }
        }
      act[c * n + a] = val;
    }
  }
  Module::Meta meta;
  meta.name = "S^-1 " + mod.name();
  for (const auto& [x, t] : out.representatives) meta.labels.push_back(mod.label(x) + "/" + r.label(t));
  out.module = std::make_shared<const Module>(
      Module::from_tables(out.ring.ring, n, std::move(add), std::move(act), out.canonical(mod.zero()), std::move(meta)));
  return out;
}

ElementSet localize_submodule(const LocalizedModule& lm, ElementSet n) {
  ElementSet out;
  for (Elem x : n)
    for (Elem t : lm.ring.denominators) out.insert(lm.fraction(x, t));
  return out;
}

ElementSet localize_ideal(const LocalizedRing& lr, ElementSet ideal) {
  ElementSet out;
  for (Elem x : ideal)
    for (Elem t : lr.denominators) out.insert(lr.fraction(x, t));
  return out;
}

bool localized_colon_identity_check(const LocalizedModule& lm, ElementSet ideal) {
  const Module& m = *lm.base;
  const ElementSet lhs = localize_submodule(lm, colon_into_module(m, m.zero_set(), ideal));
  const ElementSet rhs =
      colon_into_module(*lm.module, lm.module->zero_set(), localize_ideal(lm.ring, ideal));
  return lhs == rhs;
}

bool mm_locally_nonzero(const ModulePtr& m, const Ideal& maximal) {
  if (m->is_zero()) return false;
  const Mcs complement = complement_mcs(m->ring(), maximal);
  return localize_module(m, complement).module->order() > 1;
}

ElementSet localization_kernel(const Module& m, const Mcs& s) {
  ElementSet out;
  for (Elem x = 0; x < m.order(); ++x)
    for (Elem t : s.elements())
      if (m.act(t, x) == m.zero()) {
        out.insert(x);
        break;
      }
  return out;
}

}  // namespace scomult
