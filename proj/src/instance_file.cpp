#include "scomult/instance_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "scomult/errors.hpp"
#include "scomult/submodules.hpp"

namespace scomult {

namespace {

template <class T>
const T& find_named(const InstanceBag::Named<T>& items, const std::string& name, const char* kind) {
  for (const auto& [n, v] : items)
    if (n == name) return v;
  throw std::out_of_range(std::string("unknown ") + kind + " '" + name + "'");
}

template <class T>
bool has_named(const InstanceBag::Named<T>& items, const std::string& name) {
  for (const auto& item : items)
    if (item.first == name) return true;
  return false;
}

/// An element literal: a bare index or a residue tuple.
struct Literal {
  bool tuple = false;
  std::vector<unsigned> values;
};

std::vector<Literal> scan_literals(const std::string& text) {
  std::vector<Literal> out;
  std::size_t i = 0;
  auto read_number = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected a number in '" + text + "'");
    unsigned long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > 1'000'000) throw std::invalid_argument("number too large in '" + text + "'");
      ++i;
    }
    return static_cast<unsigned>(v);
  };
  auto skip_space = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}') {
      ++i;
      continue;
    }
    if (c == '(') {
      ++i;
      Literal lit{true, {}};
      for (;;) {
        skip_space();
        lit.values.push_back(read_number());
        skip_space();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw std::invalid_argument("unterminated tuple in '" + text + "'");
      }
      out.push_back(std::move(lit));
      continue;
    }
    out.push_back(Literal{false, {read_number()}});
  }
  return out;
}

Elem resolve_ring(const Ring& ring, const Literal& lit) {
  if (lit.tuple) return ring.from_residues(lit.values);
  if (lit.values[0] >= ring.order()) throw std::out_of_range("ring element " + std::to_string(lit.values[0]) + " out of range");
  return lit.values[0];
}

Elem resolve_module(const Module& m, const Literal& lit) {
  if (lit.tuple) {
    const auto& moduli = m.moduli();
    if (moduli.size() != lit.values.size()) throw std::out_of_range("tuple does not match the carrier");
    Elem index = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      if (lit.values[i] >= moduli[i]) throw std::out_of_range("residue out of range");
      index = index * moduli[i] + lit.values[i];
    }
    return index;
  }
  if (lit.values[0] >= m.order()) throw std::out_of_range("module element " + std::to_string(lit.values[0]) + " out of range");
  return lit.values[0];
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Text after the first `count` whitespace-separated tokens.
std::string rest_after(const std::string& line, std::size_t count) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < count; ++k) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  }
  return line.substr(i);
}

unsigned to_unsigned(const std::string& tok) {
  if (tok.empty() || tok.size() > 7) throw std::invalid_argument("bad number '" + tok + "'");
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad number '" + tok + "'");
  return static_cast<unsigned>(std::stoul(tok));
}

struct Line {
  std::size_t number;
  std::string text;
  std::vector<std::string> tokens;
};

}  // namespace

RingPtr InstanceBag::ring(const std::string& name) const { return find_named(rings, name, "ring"); }
ModulePtr InstanceBag::module(const std::string& name) const { return find_named(modules, name, "module"); }
const InstanceBag::McsEntry& InstanceBag::mcs_entry(const std::string& name) const {
  return find_named(mcs, name, "mcs");
}
const InstanceBag::SetEntry& InstanceBag::ideal(const std::string& name) const {
  return find_named(ideals, name, "ideal");
}
const InstanceBag::SetEntry& InstanceBag::submodule(const std::string& name) const {
  return find_named(submodules, name, "submodule");
}
const ModuleHom& InstanceBag::hom(const std::string& name) const { return find_named(homs, name, "hom"); }

ModulePtr InstanceBag::first_module() const {
  if (modules.empty()) throw std::out_of_range("instance declares no module");
  return modules.front().second;
}

ElementSet parse_ring_elements(const Ring& ring, const std::string& text) {
  ElementSet out;
  for (const auto& lit : scan_literals(text)) out.insert(resolve_ring(ring, lit));
  return out;
}

ElementSet parse_module_elements(const Module& m, const std::string& text) {
  ElementSet out;
  for (const auto& lit : scan_literals(text)) out.insert(resolve_module(m, lit));
  return out;
}

InstanceBag parse_instance(std::istream& in) {
  std::vector<Line> lines;
  std::map<std::string, std::vector<const Line*>> rows;  // "add:R" -> row lines
  {
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto tokens = split(raw);
      if (tokens.empty()) continue;
      lines.push_back(Line{number, raw, std::move(tokens)});
    }
  }
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw == "add" || kw == "mul" || kw == "madd" || kw == "action") {
      if (line.tokens.size() < 2) throw ParseError(line.number, kw + " row needs a target name");
      rows[kw + ":" + line.tokens[1]].push_back(&line);
    }
  }

  InstanceBag bag;
  auto table_rows = [&](const std::string& key, std::size_t count, std::size_t width, std::size_t decl_line,
                        auto&& resolve) {
    auto it = rows.find(key);
    const std::size_t have = it == rows.end() ? 0 : it->second.size();
    if (have != count)
      throw ParseError(decl_line, "expected " + std::to_string(count) + " '" + key.substr(0, key.find(':')) +
                                      "' rows, found " + std::to_string(have));
    std::vector<Elem> out;
    out.reserve(count * width);
    for (const Line* row : it->second) {
      try {
        const auto lits = scan_literals(rest_after(row->text, 2));
        if (lits.size() != width)
          throw std::invalid_argument("row has " + std::to_string(lits.size()) + " entries, expected " +
                                      std::to_string(width));
        for (const auto& lit : lits) out.push_back(resolve(lit));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(row->number, e.what());
      }
    }
    return out;
  };

  for (const auto& line : lines) {
    const auto& t = line.tokens;
    const auto& kw = t[0];
    if (kw == "add" || kw == "mul" || kw == "madd" || kw == "action") continue;
    try {
      if (t.size() < 3) throw std::invalid_argument("incomplete '" + kw + "' declaration");
      const std::string& name = t[1];
      if (kw == "ring") {
        if (has_named(bag.rings, name)) throw std::invalid_argument("duplicate ring '" + name + "'");
        RingPtr ring;
        if (t[2] == "zn") {
          std::vector<unsigned> moduli;
          for (std::size_t i = 3; i < t.size(); ++i) moduli.push_back(to_unsigned(t[i]));
          ring = make_zn_ring(std::move(moduli));
        } else if (t[2] == "table") {
          if (t.size() < 4) throw std::invalid_argument("table ring needs an order");
          const unsigned order = to_unsigned(t[3]);
          if (order == 0 || order > kMaxElements) throw SizeCapExceeded("ring", order, kMaxElements);
          Elem zero = 0, one = 1;
          for (std::size_t i = 4; i + 1 < t.size(); i += 2) {
            if (t[i] == "zero") zero = to_unsigned(t[i + 1]);
            else if (t[i] == "one") one = to_unsigned(t[i + 1]);
            else throw std::invalid_argument("unknown ring option '" + t[i] + "'");
          }
          auto plain = [order](const Literal& lit) {
            if (lit.tuple || lit.values[0] >= order) throw std::out_of_range("table entry out of range");
            return static_cast<Elem>(lit.values[0]);
          };
          auto add = table_rows("add:" + name, order, order, line.number, plain);
          auto mul = table_rows("mul:" + name, order, order, line.number, plain);
          ring = std::make_shared<const Ring>(Ring::from_tables(order, std::move(add), std::move(mul), zero, one));
        } else if (t[2] == "product") {
          if (t.size() != 5) throw std::invalid_argument("ring product needs two rings");
          ring = product_ring(*bag.ring(t[3]), *bag.ring(t[4]));
        } else {
          throw std::invalid_argument("unknown ring presentation '" + t[2] + "'");
        }
        bag.rings.emplace_back(name, std::move(ring));
      } else if (kw == "module") {
        if (has_named(bag.modules, name)) throw std::invalid_argument("duplicate module '" + name + "'");
        const std::string& how = t[2];
        if (t.size() < 4) throw std::invalid_argument("module '" + name + "' needs arguments");
        ModulePtr m;
        if (how == "self") {
          m = self_module(bag.ring(t[3]));
        } else if (how == "divisor") {
          if (t.size() != 5) throw std::invalid_argument("divisor module needs a ring and d");
          m = divisor_module(bag.ring(t[3]), to_unsigned(t[4]));
        } else if (how == "quotient" || how == "submodule") {
          auto base = bag.module(t[3]);
          const ElementSet n = parse_module_elements(*base, rest_after(line.text, 4));
          if (!is_submodule(*base, n)) throw std::invalid_argument("elements do not form a submodule");
          m = how == "quotient" ? quotient_module(*base, n) : submodule_as_module(*base, n);
        } else if (how == "sum" || how == "product") {
          if (t.size() != 5) throw std::invalid_argument("module " + how + " needs two modules");
          auto a = bag.module(t[3]);
          auto b = bag.module(t[4]);
          m = how == "sum" ? direct_sum(*a, *b) : product_module(*a, *b);
        } else if (how == "explicit") {
          if (t.size() < 5) throw std::invalid_argument("explicit module needs a ring and an order");
          auto ring = bag.ring(t[3]);
          const unsigned order = to_unsigned(t[4]);
          if (order == 0 || order > kMaxElements) throw SizeCapExceeded("module", order, kMaxElements);
          Elem zero = 0;
          for (std::size_t i = 5; i + 1 < t.size(); i += 2) {
            if (t[i] == "zero") zero = to_unsigned(t[i + 1]);
            else throw std::invalid_argument("unknown module option '" + t[i] + "'");
          }
          auto plain = [order](const Literal& lit) {
            if (lit.tuple || lit.values[0] >= order) throw std::out_of_range("table entry out of range");
            return static_cast<Elem>(lit.values[0]);
          };
          auto add = table_rows("madd:" + name, order, order, line.number, plain);
          auto act = table_rows("action:" + name, ring->order(), order, line.number, plain);
          m = std::make_shared<const Module>(
              Module::from_tables(ring, order, std::move(add), std::move(act), zero, Module::Meta{name, {}, {}}));
        } else {
          throw std::invalid_argument("unknown module constructor '" + how + "'");
        }
        bag.modules.emplace_back(name, std::move(m));
      } else if (kw == "mcs") {
        if (has_named(bag.mcs, name)) throw std::invalid_argument("duplicate mcs '" + name + "'");
        if (t[2] == "product") {
          if (t.size() != 5) throw std::invalid_argument("mcs product needs two sets");
          const auto& a = bag.mcs_entry(t[3]);
          const auto& b = bag.mcs_entry(t[4]);
          auto ring = product_ring(*a.ring, *b.ring);
          bag.mcs.emplace_back(name, InstanceBag::McsEntry{ring, product_mcs(*a.ring, a.mcs, *b.ring, b.mcs)});
        } else {
          auto ring = bag.ring(t[2]);
          const ElementSet elems = parse_ring_elements(*ring, rest_after(line.text, 3));
          bag.mcs.emplace_back(name, InstanceBag::McsEntry{ring, validate_mcs(*ring, elems)});
        }
      } else if (kw == "ideal") {
        auto ring = bag.ring(t[2]);
        const ElementSet elems = parse_ring_elements(*ring, rest_after(line.text, 3));
        if (!is_ideal(*ring, elems)) throw std::invalid_argument("elements do not form an ideal");
        bag.ideals.emplace_back(name, InstanceBag::SetEntry{t[2], elems});
      } else if (kw == "submodule") {
        auto m = bag.module(t[2]);
        const ElementSet elems = parse_module_elements(*m, rest_after(line.text, 3));
        if (!is_submodule(*m, elems)) throw std::invalid_argument("elements do not form a submodule");
        bag.submodules.emplace_back(name, InstanceBag::SetEntry{t[2], elems});
      } else if (kw == "hom") {
        if (t.size() < 4) throw std::invalid_argument("hom needs source and target");
        auto src = bag.module(t[2]);
        auto dst = bag.module(t[3]);
        std::vector<Elem> table;
        for (const auto& lit : scan_literals(rest_after(line.text, 4))) table.push_back(resolve_module(*dst, lit));
        bag.homs.emplace_back(name, ModuleHom::make(src, dst, std::move(table)));
      } else {
        throw std::invalid_argument("unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return bag;
}

InstanceBag parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

InstanceBag parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

// -- writer ----------------------------------------------------------------

namespace {

std::string join(const std::vector<Elem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_set(ElementSet s) { return "{" + [&] {
  std::string out;
  bool first = true;
  for (Elem e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out;
}() + "}"; }

}  // namespace

std::string InstanceWriter::fresh(const char* prefix) { return prefix + std::to_string(++counter_); }

void InstanceWriter::comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) text_ += "# " + line + "\n";
}

std::string InstanceWriter::ring(const RingPtr& ring) {
  for (const auto& [r, name] : rings_)
    if (r == ring || *r == *ring) return name;
  const std::string name = fresh("R");
  if (ring->presentation() == Presentation::zn_product) {
    std::vector<Elem> moduli(ring->moduli().begin(), ring->moduli().end());
    text_ += "ring " + name + " zn " + join(moduli) + "\n";
  } else {
    const auto n = ring->order();
    text_ += "ring " + name + " table " + std::to_string(n) + " zero " + std::to_string(ring->zero()) + " one " +
             std::to_string(ring->one()) + "\n";
    for (const char* op : {"add", "mul"}) {
      const auto& tab = std::string(op) == "add" ? ring->add_table() : ring->mul_table();
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<Elem> row(tab.begin() + static_cast<std::ptrdiff_t>(a * n),
                              tab.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
        text_ += std::string(op) + " " + name + " " + join(row) + "\n";
      }
    }
  }
  rings_.emplace_back(ring, name);
  return name;
}

std::string InstanceWriter::module(const ModulePtr& m, bool reuse) {
  if (reuse)
    for (const auto& [x, name] : modules_)
      if (x == m || *x == *m) return name;
  const std::string ring_name = ring(m->ring_ptr());
  const std::string name = fresh("M");
  if (*m == *self_module(m->ring_ptr())) {
    text_ += "module " + name + " self " + ring_name + "\n";
  } else {
    const auto n = m->order();
    if (!m->name().empty()) comment(m->name());
    text_ += "module " + name + " explicit " + ring_name + " " + std::to_string(n) + " zero " +
             std::to_string(m->zero()) + "\n";
    const auto& add = m->add_table();
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Elem> row(add.begin() + static_cast<std::ptrdiff_t>(a * n),
                            add.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
      text_ += "madd " + name + " " + join(row) + "\n";
    }
    const auto& act = m->action_table();
    for (std::size_t r = 0; r < m->ring().order(); ++r) {
      std::vector<Elem> row(act.begin() + static_cast<std::ptrdiff_t>(r * n),
                            act.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
      text_ += "action " + name + " " + join(row) + "\n";
    }
  }
  modules_.emplace_back(m, name);
  return name;
}

std::string InstanceWriter::mcs(const RingPtr& r, const Mcs& s) {
  const std::string ring_name = ring(r);
  const std::string name = fresh("S");
  text_ += "mcs " + name + " " + ring_name + " " + join_set(s.elements()) + "\n";
  return name;
}

std::string InstanceWriter::ideal(const RingPtr& r, ElementSet elements) {
  const std::string ring_name = ring(r);
  const std::string name = fresh("I");
  text_ += "ideal " + name + " " + ring_name + " " + join_set(elements) + "\n";
  return name;
}

std::string InstanceWriter::submodule(const ModulePtr& m, ElementSet elements) {
  const std::string module_name = module(m);
  const std::string name = fresh("N");
  text_ += "submodule " + name + " " + module_name + " " + join_set(elements) + "\n";
  return name;
}

std::string InstanceWriter::hom(const ModuleHom& f) {
  const std::string src = module(f.source_ptr());
  const std::string dst = module(f.target_ptr());
  const std::string name = fresh("f");
  text_ += "hom " + name + " " + src + " " + dst + " " + join(f.table()) + "\n";
  return name;
}

}  // namespace scomult
