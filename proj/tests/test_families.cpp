#include <doctest.h>

#include "skew/char_poly.hpp"
#include "skew/families.hpp"
#include "skew/graph_io.hpp"
#include "skew/orientations.hpp"

using namespace skew;

TEST_CASE("family spec parsing") {
  const FamilySpec b = parse_family_spec("B:n=7,d=4,orient=---");
  CHECK(b.kind == FamilyKind::bicyclic);
  CHECK(b.n == 7);
  CHECK(b.d == 4);
  CHECK(b.orientation.size() == 3);
  CHECK(to_string(b) == "B:n=7,d=4,orient=---");
  CHECK(to_string(parse_family_spec("U:n=9,d=5,orient=-")) == "U:n=9,d=5,orient=-");
  CHECK(to_string(parse_family_spec("T:n=8,d=3")) == "T:n=8,d=3");
  CHECK(to_string(parse_family_spec("C:n=4")) == "C:n=4,orient=-");
  CHECK(parse_family_spec("C:n=4,orient=+").orientation == std::vector<CycleSign>{CycleSign::plus});
  CHECK(parse_family_spec("S:n=5").kind == FamilyKind::star);
  CHECK(parse_family_spec("P:n=2").kind == FamilyKind::path);
}

TEST_CASE("family spec errors carry positions") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_family_spec(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("X:n=3") == 0);
  CHECK(position_of("B:n=7,d=x") == 8);
  CHECK(position_of("B:n=7,d=4,orient=-*-") == 18);
  CHECK(position_of("B:n=7,d=4,orient=--") == 17);
  CHECK(position_of("T:n=7,q=2") == 6);
  CHECK(position_of("T:n=7") == 5);
  CHECK(position_of("P:d=3,n=4") == 9);
  CHECK(position_of("B7") == 1);
}

TEST_CASE("build rejects out-of-range parameters") {
  CHECK_THROWS_AS(build(parse_family_spec("T:n=7,d=7")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("T:n=7,d=1")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("U:n=7,d=6")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("U:n=7,d=2")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("B:n=7,d=5")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("B:n=7,d=2")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("S:n=1")), std::invalid_argument);
  CHECK_THROWS_AS(build(parse_family_spec("C:n=2")), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build(parse_family_spec("B:n=7,d=4,orient=+--")), "orientation not realizable",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build(parse_family_spec("B:n=7,d=4,orient=+++")), "orientation not realizable",
                       std::invalid_argument);
}

TEST_CASE("family examples") {
  const OrientedGraph t = build(parse_family_spec("T:n=7,d=4"));
  CHECK(t.order() == 7);
  CHECK(t.size() == 6);
  CHECK(diameter(t.base()) == 4);
  const OrientedGraph u = build(parse_family_spec("U:n=7,d=4,orient=-"));
  CHECK(u.size() == 7);
  CHECK(diameter(u.base()) == 4);
  CHECK(cycle_parity(u, all_cycles(u.base())[0]) == CycleParity::evenly);
  const OrientedGraph b = build(parse_family_spec("B:n=7,d=4,orient=---"));
  CHECK(char_poly_expansion(b).to_string() == "x^7 + 8x^5 + 7x^3");
  CHECK(path_polynomial(0) == SkewPolynomial::edgeless(0));
  CHECK(star_polynomial(1) == SkewPolynomial::edgeless(1));
  CHECK(star_polynomial(2) == path_polynomial(2));
}

TEST_CASE("every valid family spec up to 12 vertices builds a graph of its own shape") {
  int checked = 0;
  const std::vector<std::vector<CycleSign>> triples{
      {CycleSign::minus, CycleSign::minus, CycleSign::minus},
      {CycleSign::plus, CycleSign::plus, CycleSign::minus},
      {CycleSign::plus, CycleSign::minus, CycleSign::plus},
      {CycleSign::minus, CycleSign::plus, CycleSign::plus}};
  for (int n = 1; n <= 12; ++n) {
    std::vector<FamilySpec> specs{{FamilyKind::path, n, {}, {}}};
    if (n >= 2) specs.push_back({FamilyKind::star, n, {}, {}});
    for (CycleSign s : {CycleSign::minus, CycleSign::plus})
      if (n >= 3) specs.push_back({FamilyKind::cycle, n, {}, {s}});
    for (int d = 2; d <= n - 1; ++d) specs.push_back({FamilyKind::tree, n, d, {}});
    for (int d = 3; d <= n - 2; ++d)
      for (CycleSign s : {CycleSign::minus, CycleSign::plus}) specs.push_back({FamilyKind::unicyclic, n, d, {s}});
    for (int d = 3; d <= n - 3; ++d)
      for (const auto& triple : triples) specs.push_back({FamilyKind::bicyclic, n, d, triple});
    for (const FamilySpec& spec : specs) {
      const OrientedGraph og = build(spec);
      CHECK_MESSAGE(verify_family_shape(og, spec), to_string(spec));
      CHECK(parse_family_spec(to_string(spec)) == spec);
      ++checked;
      if (spec.kind == FamilyKind::bicyclic) {
        const auto shape = classify_bicyclic(og.base());
        CHECK(og.size() == static_cast<std::size_t>(n + 1));
        CHECK(shape.t == 3);
        CHECK(shape.c == 4);
      }
      if (spec.kind == FamilyKind::unicyclic) CHECK(og.size() == static_cast<std::size_t>(n));
    }
  }
  CHECK(checked > 250);
}

TEST_CASE("shape verification rejects mismatches") {
  CHECK_FALSE(verify_family_shape(bicyclic_B(8, 4), parse_family_spec("B:n=8,d=3")));
  CHECK_FALSE(verify_family_shape(bicyclic_B(8, 4), parse_family_spec("B:n=8,d=4,orient=++-")));
  CHECK_FALSE(verify_family_shape(unicyclic_U(8, 4, CycleSign::plus), parse_family_spec("U:n=8,d=4,orient=-")));
  CHECK_FALSE(verify_family_shape(cycle_graph(5, CycleSign::plus), parse_family_spec("C:n=5,orient=-")));
  CHECK_FALSE(verify_family_shape(path_graph(5), parse_family_spec("S:n=5")));
  CHECK_FALSE(verify_family_shape(path_graph(5), parse_family_spec("T:n=8,d=3")));
}

TEST_CASE("B triples with two plus signs are other orientation classes of the same graph") {
  const OrientedGraph base = bicyclic_B(8, 4);
  std::vector<OrientedGraph> classes{base};
  for (auto [a, b, c] : {std::tuple{CycleSign::plus, CycleSign::plus, CycleSign::minus},
                          std::tuple{CycleSign::plus, CycleSign::minus, CycleSign::plus},
                          std::tuple{CycleSign::minus, CycleSign::plus, CycleSign::plus}}) {
    const OrientedGraph og = bicyclic_B(8, 4, a, b, c);
    CHECK(og.base() == base.base());
    for (const auto& other : classes) CHECK_FALSE(switching_equivalent(og, other));
    classes.push_back(og);
  }
}
