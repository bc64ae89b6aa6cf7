#include <catch2/catch.hpp>

#include "latgen/enumerate.hpp"
#include "latgen/finite_lattice.hpp"

using namespace latgen;

namespace {

FiniteLattice diamond() {
  return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FiniteLattice m3() {
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("from_covers builds chains and diamonds") {
  auto c3 = from_covers(3, {{0, 1}, {1, 2}});
  CHECK(c3.bottom == 0);
  CHECK(c3.top == 2);
  CHECK(is_chain(c3));
  CHECK(c3 == chain(3));

  auto b2 = diamond();
  CHECK(b2.meet(1, 2) == 0);
  CHECK(b2.join(1, 2) == 3);
  CHECK(b2.bottom == 0);
  CHECK(b2.top == 3);

  CHECK_NOTHROW(validate_lattice(m3()));
}

TEST_CASE("from_covers rejects bad inputs") {
  CHECK_THROWS_AS(from_covers(2, {}), Error);  // two-point antichain: no glb
  try {
    from_covers(2, {});
    FAIL();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
  try {
    from_covers(3, {{0, 1}, {1, 2}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CyclicCovers);
  }
  try {
    from_covers(3, {{0, 1}, {0, 1}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateCover);
  }
  try {
    from_covers(2, {{0, 5}});
    FAIL();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("product is the componentwise lattice") {
  auto sq = product(chain(2), chain(2));
  CHECK(sq == diamond());

  auto grid = product(chain(3), chain(2));
  REQUIRE(grid.n == 6);
  // (2,0) has index 4, (1,1) index 3; componentwise meet is (1,0) = index 2
  CHECK(grid.meet(4, 3) == 2);
  CHECK(grid.join(4, 3) == 5);
  CHECK_NOTHROW(validate_lattice(grid));

  // ladder built from covers must agree with the product construction
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
      covers.emplace_back(2 * i, 2 * (i + 1));      // (i,0) -- (i+1,0)
      covers.emplace_back(2 * i + 1, 2 * (i + 1) + 1);
    }
    for (int i = 0; i <= n; ++i) covers.emplace_back(2 * i, 2 * i + 1);  // rungs
    auto ladder = from_covers(2 * (n + 1), covers);
    CHECK(ladder == product(chain(n + 1), chain(2)));
  }

  CHECK_THROWS_AS(product(chain(70), chain(70)), Error);
}

TEST_CASE("lex_product concatenates chains") {
  auto c6 = lex_product(chain(2), chain(3));
  CHECK(c6 == chain(6));
  CHECK(c6.le(2, 3));  // 0x2 < 1x0

  CHECK(lex_product(chain(1), chain(5)) == chain(5));

  auto k = add_top(lex_product(chain(3), chain(3)));
  auto trunc = product(k, chain(2));
  CHECK(trunc.n == 20);
  CHECK_NOTHROW(validate_lattice(trunc));

  CHECK_THROWS_AS(lex_product(diamond(), chain(2)), Error);
}

TEST_CASE("add_top and add_bottom adjoin fresh extremes") {
  CHECK(add_top(chain(3)) == chain(4));

  auto b2t = add_top(diamond());
  REQUIRE(b2t.n == 5);
  CHECK(b2t.top == 4);
  auto cov = covers_of(Poset{b2t.n, b2t.leq});
  CHECK(std::count(cov.begin(), cov.end(), std::make_pair(3, 4)) == 1);

  // two incomparable points get completed to a diamond
  auto p = add_bottom(add_top(poset_from_covers(2, {})));
  auto l = lattice_from_poset(p);
  CHECK(canonical_form(Poset{l.n, l.leq}) == canonical_form(Poset{4, diamond().leq}));
}

TEST_CASE("cover-list JSON round-trips bit-exactly") {
  for (const auto& l : {chain(3), diamond(), m3(), product(chain(3), chain(2))}) {
    auto j = to_json(l);
    CHECK(lattice_from_json(j) == l);
    // serialization is deterministic: covers sorted lexicographically
    auto cov = j["covers"];
    for (std::size_t i = 1; i < cov.size(); ++i) {
      auto a = std::make_pair(cov[i - 1][0].get<int>(), cov[i - 1][1].get<int>());
      auto b = std::make_pair(cov[i][0].get<int>(), cov[i][1].get<int>());
      CHECK(a < b);
    }
  }
  auto labeled = from_covers(2, {{0, 1}}, {"lo", "hi"});
  auto j = to_json(labeled);
  CHECK(j["labels"][1] == "hi");
  CHECK(lattice_from_json(j).labels == labeled.labels);

  CHECK_THROWS_AS(lattice_from_json(nlohmann::json{{"n", 2}}), Error);
}

TEST_CASE("products are associative up to reindexing") {
  // ((a,b),c) and (a,(b,c)) land on the same flat index, so the tables agree verbatim
  auto triples = {std::array<FiniteLattice, 3>{chain(2), chain(3), diamond()},
                  std::array<FiniteLattice, 3>{diamond(), chain(2), chain(2)}};
  for (const auto& [a, b, c] : triples) {
    auto left = product(product(a, b), c);
    auto right = product(a, product(b, c));
    CHECK(left == right);
  }
  auto lex_l = lex_product(lex_product(chain(2), chain(3)), chain(2));
  auto lex_r = lex_product(chain(2), lex_product(chain(3), chain(2)));
  CHECK(lex_l == lex_r);
}

TEST_CASE("meet-semilattice construction requires glbs and a maximum") {
  // top over two incomparable children over bottom: the 4-element "tree"
  auto tree = meet_semilattice_from_poset(poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(tree.top == 3);
  CHECK(tree.meet(1, 2) == 0);

  // two maximal points: no maximum
  CHECK_THROWS_AS(meet_semilattice_from_poset(poset_from_covers(3, {{0, 1}, {0, 2}})), Error);
}
