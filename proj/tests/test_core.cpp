#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ea/core.hpp"
#include "ea/corpus.hpp"

using namespace ea;

static Table parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

TEST_CASE("parse accepts the three-element chain") {
  Table t = parse_str(
      "# three-element chain\n"
      "elements: a\n"
      "zero: 0\n"
      "one: 1\n"
      "sum: a a 1\n");
  REQUIRE(t.size() == 3);
  REQUIRE(t.name(0) == "0");
  REQUIRE(t.name(1) == "a");
  REQUIRE(t.name(2) == "1");
  REQUIRE(t.sum(1, 1) == 2);
  REQUIRE(t.sum(0, 1) == 1);  // implied zero row
  REQUIRE(verify_axioms(t).passed);
}

TEST_CASE("parse rejects malformed input") {
  SECTION("conflicting entries for the same unordered pair") {
    try {
      parse_str("elements: a b\nzero: 0\none: 1\nsum: a b 1\nsum: b a b\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      REQUIRE(e.line == 5);
    }
  }
  SECTION("unknown element") {
    REQUIRE_THROWS_AS(parse_str("elements: a\nzero: 0\none: 1\nsum: a q 1\n"), ParseError);
  }
  SECTION("reserved name") {
    REQUIRE_THROWS_AS(parse_str("elements: 1\nzero: 0\none: 1\n"), ParseError);
  }
  SECTION("duplicate name") {
    REQUIRE_THROWS_AS(parse_str("elements: a a\nzero: 0\none: 1\n"), ParseError);
  }
  SECTION("missing zero line") {
    REQUIRE_THROWS_AS(parse_str("elements: a\none: 1\nsum: a a 1\n"), ParseError);
  }
  SECTION("unknown directive") {
    REQUIRE_THROWS_AS(parse_str("element: a\nzero: 0\none: 1\n"), ParseError);
  }
  SECTION("inconsistent zero-operand sum") {
    REQUIRE_THROWS_AS(parse_str("elements: a b\nzero: 0\none: 1\nsum: a 0 b\n"), ParseError);
  }
}

TEST_CASE("serialization round-trips") {
  Table b3 = boolean_table(3);
  Table back = parse_str(format_table(b3));
  REQUIRE(back.size() == b3.size());
  for (Elem a = 0; a < b3.size(); ++a) {
    REQUIRE(back.name(a) == b3.name(a));
    for (Elem b = 0; b < b3.size(); ++b) REQUIRE(back.sum(a, b) == b3.sum(a, b));
  }
}

TEST_CASE("axiom verification") {
  SECTION("four-step chain passes") { REQUIRE(verify_axioms(chain_table(4)).passed); }

  SECTION("every standard corpus table passes") {
    for (const Table& t : standard_corpus()) {
      INFO(t.label);
      REQUIRE(verify_axioms(t).passed);
    }
  }

  SECTION("extra entry a1+a2=1 in mo(2) breaks unique orthosupplements") {
    Table t = mo_table(2);
    REQUIRE(t.add_sum(*t.index("a1"), *t.index("a2"), t.one()));
    AxiomReport rep = verify_axioms(t);
    REQUIRE_FALSE(rep.passed);
    bool saw_iii = false;
    for (const auto& v : rep.violations) saw_iii |= v.axiom == Axiom::Orthosupplement;
    REQUIRE(saw_iii);
  }

  SECTION("broken associativity is caught") {
    // (a+a)+b = b+b = 1 is defined but a+(a+b) = a+c is not.
    Table t = Table::with_elements({"0", "a", "b", "c", "1"}, 0, 4);
    t.add_sum(1, 1, 2);  // a+a=b
    t.add_sum(1, 2, 3);  // a+b=c
    t.add_sum(2, 2, 4);  // b+b=1
    AxiomReport rep = verify_axioms(t);
    REQUIRE_FALSE(rep.passed);
    bool saw_ii = false;
    for (const auto& v : rep.violations) saw_ii |= v.axiom == Axiom::Associativity;
    REQUIRE(saw_ii);
  }

  SECTION("zero equal to one is rejected") {
    Table t = Table::with_elements({"0"}, 0, 0);
    REQUIRE_FALSE(verify_axioms(t).passed);
  }
}

TEST_CASE("derived order matches subset inclusion on boolean(3)") {
  // Independent oracle: element names encode atom subsets, so order,
  // orthosupplement, meet and join are all mask arithmetic.
  Table t = boolean_table(3);
  Algebra alg(t);
  auto mask_of = [&](Elem e) {
    unsigned m = 0;
    const std::string& nm = t.name(e);
    if (nm == "0") return 0u;
    if (nm == "1") return 7u;
    for (size_t i = 1; i < nm.size(); ++i) m |= 1u << (nm[i] - '1');
    return m;
  };
  for (Elem a = 0; a < t.size(); ++a) {
    REQUIRE(mask_of(alg.orthosupplement(a)) == (7u & ~mask_of(a)));
    for (Elem b = 0; b < t.size(); ++b) {
      bool subset = (mask_of(a) & ~mask_of(b)) == 0;
      REQUIRE(alg.leq(a, b) == subset);
      auto m = alg.meet(a, b);
      REQUIRE(m.has_value());
      REQUIRE(mask_of(*m) == (mask_of(a) & mask_of(b)));
      auto j = alg.join(a, b);
      REQUIRE(j.has_value());
      REQUIRE(mask_of(*j) == (mask_of(a) | mask_of(b)));
    }
  }
}

TEST_CASE("difference in the four-step chain") {
  Algebra alg(chain_table(3));
  Elem g1 = *alg.table().index("g1");
  Elem g2 = *alg.table().index("g2");
  REQUIRE(alg.difference(g1, alg.one()) == g2);
  REQUIRE(alg.difference(g1, g1) == alg.zero());
  REQUIRE_THROWS_AS(alg.difference(alg.one(), g1), std::invalid_argument);
}

TEST_CASE("meets and joins that do not exist") {
  Algebra parity(parity_table(6));
  Elem c1234 = *parity.table().index("c1234");
  Elem c1235 = *parity.table().index("c1235");
  REQUIRE_FALSE(parity.meet(c1234, c1235).has_value());

  // Maximal common lower bounds c12, c13, c23 are pairwise incomparable.
  Elem c12 = *parity.table().index("c12");
  REQUIRE(parity.leq(c12, c1234));
  REQUIRE(parity.leq(c12, c1235));

  // Disjoint two-point sets still meet at 0.
  Elem c34 = *parity.table().index("c34");
  auto m = parity.meet(c12, c34);
  REQUIRE(m.has_value());
  REQUIRE(*m == parity.zero());

  // Two-point sets with one common point have no join: three incomparable
  // minimal upper bounds.
  Elem c13 = *parity.table().index("c13");
  REQUIRE_FALSE(parity.join(c12, c13).has_value());
}

TEST_CASE("homomorphism check") {
  Algebra c4(chain_table(3));  // 0 < g1 < g2 < 1
  Algebra c2(chain_table(2));  // 0 < g1 < 1

  SECTION("collapse g1 to 0 breaks the doubled sum") {
    // g1+g1=g2 would need 0+0=image(g2).
    std::vector<Elem> map{0, 0, *c2.table().index("g1"), c2.one()};
    HomReport r = is_homomorphism(c4, c2, map);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witness == std::vector<Elem>{1, 1});
  }

  SECTION("identity is a homomorphism") {
    std::vector<Elem> map{0, 1, 2, 3};
    REQUIRE(is_homomorphism(c4, c4, map).ok);
  }

  SECTION("doubling chain(2) into chain(4)") {
    Algebra c_4(chain_table(4));
    std::vector<Elem> map{0, 2, 4};  // 0, g2, 1
    REQUIRE(is_homomorphism(c2, c_4, map).ok);
  }
}

TEST_CASE("corpus generators have the advertised shapes") {
  REQUIRE(boolean_table(1).size() == 2);
  REQUIRE(boolean_table(4).size() == 16);
  REQUIRE(chain_table(2).size() == 3);
  REQUIRE(grid_table(2, 3).size() == 12);
  REQUIRE(mo_table(2).size() == 6);
  REQUIRE(parity_table(6).size() == 32);
  REQUIRE(product_table(chain_table(2), chain_table(3)).size() == 12);

  SECTION("grid and product of chains agree element for element") {
    Table g = grid_table(2, 3);
    Table p = product_table(chain_table(2), chain_table(3));
    REQUIRE(g.size() == p.size());
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem b = 0; b < g.size(); ++b) REQUIRE(g.sum(a, b) == p.sum(a, b));
  }

  SECTION("argument caps") {
    REQUIRE_THROWS_AS(boolean_table(9), std::invalid_argument);
    REQUIRE_THROWS_AS(parity_table(5), std::invalid_argument);
    REQUIRE_THROWS_AS(exhaustive_tables(6), std::invalid_argument);
  }
}

TEST_CASE("exhaustive enumeration at small sizes") {
  SECTION("three elements or fewer: exactly the two chains") {
    auto ts = exhaustive_tables(3);
    REQUIRE(ts.size() == 2);
    REQUIRE(ts[0].size() == 2);
    REQUIRE(ts[1].size() == 3);
    REQUIRE(ts[1].sum(1, 1) == 2);  // a+a=1 is forced
  }

  SECTION("four elements: hand-enumerated list of six") {
    // Size 4 admits exactly: a+b=1 alone; the chain with generator a;
    // the chain with generator b; and the horizontal sum a+a=1, b+b=1.
    auto ts = exhaustive_tables(4);
    REQUIRE(ts.size() == 6);
    const Table& horiz = ts[5];
    REQUIRE(horiz.sum(1, 1) == horiz.one());
    REQUIRE(horiz.sum(2, 2) == horiz.one());
    REQUIRE(horiz.sum(1, 2) == -1);
    const Table& booleanish = ts[2];
    REQUIRE(booleanish.sum(1, 2) == booleanish.one());
    REQUIRE(booleanish.sum(1, 1) == -1);
  }

  SECTION("five elements: 16 tables, all from known families") {
    // Hand count: 6 relabelings of the four-step chain, 6 of the three-step
    // chain plus a self-inverse atom, 3 of the diamond plus a self-inverse
    // atom, 1 triple horizontal sum.
    auto ts = exhaustive_tables(5);
    REQUIRE(ts.size() == 22);
    int five = 0;
    for (const Table& t : ts) {
      INFO(t.label);
      REQUIRE(verify_axioms(t).passed);
      five += t.size() == 5;
    }
    REQUIRE(five == 16);
  }
}

TEST_CASE("corpus expression parser") {
  REQUIRE(corpus("boolean(2)").size() == 1);
  REQUIRE(corpus("product(boolean(2),chain(2))")[0].size() == 12);
  REQUIRE(corpus("exhaustive(3)").size() == 2);
  REQUIRE_THROWS_AS(corpus("boolean(2"), std::invalid_argument);
  REQUIRE_THROWS_AS(corpus("nope(2)"), std::invalid_argument);
  REQUIRE_THROWS_AS(corpus("boolean(2)x"), std::invalid_argument);
  REQUIRE_THROWS_AS(corpus("product(exhaustive(3),chain(2))"), std::invalid_argument);
}
