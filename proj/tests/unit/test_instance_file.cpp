#include <gtest/gtest.h>

#include <sstream>

#include "scomult/catalog.hpp"
#include "scomult/errors.hpp"
#include "scomult/instance_file.hpp"
#include "scomult/verifier.hpp"

using namespace scomult;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return 0;
}

std::string without_comments(const std::string& text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line))
    if (line.rfind('#', 0) != 0) out += line + "\n";
  return out;
}

}  // namespace

TEST(InstanceFile, ParsesZnAndSelfModule) {
  const auto bag = parse_instance_text("ring R zn 6\nmodule M self R\nmcs S R {1,5}\nsubmodule N M {0,3}\n");
  ASSERT_EQ(bag.rings.size(), 1u);
  EXPECT_EQ(bag.rings[0].second->order(), 6u);
  EXPECT_EQ(bag.first_module()->order(), 6u);
  EXPECT_EQ(bag.mcs_entry("S").mcs.elements(), (ElementSet{1, 5}));
  EXPECT_EQ(bag.submodule("N").elements, (ElementSet{0, 3}));
}

TEST(InstanceFile, ProductRingsUseTupleLiterals) {
  const auto bag = parse_instance_text("ring A zn 2\nring B zn 3\nring R product A B\nideal I R (0,0) (1,0)\n");
  EXPECT_EQ(bag.ring("R")->order(), 6u);
  EXPECT_EQ(bag.ideal("I").elements.size(), 2u);
}

TEST(InstanceFile, ErrorsCarryTheLine) {
  EXPECT_EQ(error_line("ring R zn 6\nmodule M self Q\n"), 2u);
  EXPECT_EQ(error_line("ring R zn 6\n\n# comment\nmcs S R {0,1}\n"), 4u);       // 0 in S
  EXPECT_EQ(error_line("ring R zn 6\nmodule M self R\nsubmodule N M {0,1}\n"), 3u);  // not closed
  EXPECT_EQ(error_line("frobnicate\n"), 1u);
  EXPECT_EQ(error_line("ring R zn 6\nring R zn 4\n"), 2u);  // duplicate name
  EXPECT_EQ(error_line("ring R zn 6\nideal I R {0,7}\n"), 2u);  // out of range
}

TEST(InstanceFile, TableRingAxiomsAreChecked) {
  // Z2 tables with a broken distributive law in the multiplication table.
  const std::string broken = "ring R table 2\nadd R 0 1\nadd R 1 0\nmul R 0 1\nmul R 1 1\n";
  EXPECT_THROW(parse_instance_text(broken), ParseError);
  const std::string good = "ring R table 2\nadd R 0 1\nadd R 1 0\nmul R 0 0\nmul R 0 1\n";
  EXPECT_EQ(parse_instance_text(good).ring("R")->order(), 2u);
}

TEST(InstanceFile, BadFileReportsThroughParseError) {
  EXPECT_THROW(parse_instance_file(SCOMULT_TEST_DATA "/bad.inst"), ParseError);
  EXPECT_THROW(parse_instance_file(SCOMULT_TEST_DATA "/missing.inst"), std::exception);
}

TEST(RoundTrip, EveryCatalogModuleReparsesEqual) {
  const Catalog c = generate_catalog();
  for (const auto& cm : c.modules) {
    InstanceWriter w;
    const std::string name = w.module(cm.module, false);
    const auto bag = parse_instance_text(w.text());
    EXPECT_EQ(*bag.module(name), *cm.module) << w.text();
  }
}

TEST(RoundTrip, CatalogHomsAndMcsReparseEqual) {
  const Catalog c = generate_catalog();
  for (std::size_t i = 0; i < c.homs.size(); i += 37) {
    InstanceWriter w;
    const std::string name = w.hom(c.homs[i].hom);
    EXPECT_EQ(parse_instance_text(w.text()).hom(name), c.homs[i].hom) << w.text();
  }
  for (const auto& cr : c.rings)
    for (const auto& s : cr.mcs) {
      InstanceWriter w;
      const std::string name = w.mcs(cr.ring, s);
      const auto bag = parse_instance_text(w.text());
      EXPECT_EQ(bag.mcs_entry(name).mcs, s);
      EXPECT_EQ(*bag.mcs_entry(name).ring, *cr.ring);
    }
}

TEST(RoundTrip, SerializedInstancesKeepEveryField) {
  const Catalog c = generate_catalog();
  Instance inst;
  const auto& h = c.homs[100];
  inst.modules = {h.hom.source_ptr(), h.hom.target_ptr()};
  inst.mcs = {{h.hom.source().ring_ptr(), c.rings[h.ring].mcs.back()}};
  inst.submodules = h.source->submodules();
  inst.ideals = {c.rings[h.ring].jacobson.elements};
  inst.hom = h.hom;
  const Instance back = deserialize(parse_instance_text(serialize(inst)));
  ASSERT_EQ(back.modules.size(), 2u);
  EXPECT_EQ(*back.modules[0], *inst.modules[0]);
  EXPECT_EQ(*back.modules[1], *inst.modules[1]);
  EXPECT_EQ(back.s(), inst.s());
  EXPECT_EQ(back.submodules, inst.submodules);
  EXPECT_EQ(back.ideals, inst.ideals);
  ASSERT_TRUE(back.hom.has_value());
  EXPECT_EQ(*back.hom, *inst.hom);
  // Display names travel as comments and are not read back.
  EXPECT_EQ(without_comments(serialize(back)), without_comments(serialize(inst)));
}
