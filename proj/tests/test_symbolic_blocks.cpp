#include <catch2/catch.hpp>

#include <random>

#include "latgen/blocks.hpp"
#include "latgen/ordinal.hpp"

using namespace latgen;

TEST_CASE("componentwise meets and joins on the product carrier") {
  // lex order on the first coordinate, bit max/min on the second
  auto j = sym_join(elem(Family::OmegaSq, 1, 2, 0), elem(Family::OmegaSq, 0, 5, 1));
  CHECK(j == elem(Family::OmegaSq, 1, 2, 1));

  for (std::uint32_t n : {0u, 2u, 7u}) {
    for (auto k : {OrdK::pair(n, 1), OrdK::pair(n, 9), OrdK::pair(n + 3, 0), OrdK::limit_top()}) {
      auto m = sym_meet(elem(Family::OmegaSq, n, 1, 1), SymElem{Family::OmegaSq, k, 0});
      CHECK(m == elem(Family::OmegaSq, n, 1, 0));
    }
  }

  auto x = elem(Family::Omega, 0, 4, 0);
  CHECK(sym_meet(x, top_elem(Family::Omega, 1)) == x);
  CHECK(sym_join(x, sym_bottom(Family::Omega)) == x);

  CHECK_THROWS_AS(sym_meet(x, elem(Family::OmegaSq, 0, 4, 0)), Error);
}

TEST_CASE("well-order: sampled subsets have attained minima") {
  auto grid = sample_grid(Family::OmegaSq, 6, 6);
  std::mt19937_64 rng(0xA11CE);
  for (int t = 0; t < 200; ++t) {
    std::vector<SymElem> subset;
    for (int i = 0; i < 5; ++i) subset.push_back(grid[rng() % grid.size()]);
    SymElem inf = subset[0];
    for (const auto& e : subset) inf = sym_meet(inf, e);
    // the infimum is realized by a pair: one element of least ordinal, one of least bit
    SymElem lo_ord = subset[0], lo_bit = subset[0];
    for (const auto& e : subset) {
      if (e.k < lo_ord.k) lo_ord = e;
      if (e.bit < lo_bit.bit) lo_bit = e;
    }
    CHECK(sym_meet(lo_ord, lo_bit) == inf);
    SymElem sup = subset[0];
    for (const auto& e : subset) sup = sym_join(sup, e);
    CHECK(sym_le(subset[2], sup));
  }
}

TEST_CASE("block membership is decided directly") {
  auto row = Block::row_tail(2, 3, 0);
  CHECK(block_contains(Family::OmegaSq, row, elem(Family::OmegaSq, 2, 3, 0)));
  CHECK(block_contains(Family::OmegaSq, row, elem(Family::OmegaSq, 2, 99, 0)));
  CHECK_FALSE(block_contains(Family::OmegaSq, row, elem(Family::OmegaSq, 2, 2, 0)));
  CHECK_FALSE(block_contains(Family::OmegaSq, row, elem(Family::OmegaSq, 3, 3, 0)));
  CHECK_FALSE(block_contains(Family::OmegaSq, row, elem(Family::OmegaSq, 2, 3, 1)));

  auto col = Block::zero_col_tail(4, 1);
  CHECK(block_contains(Family::OmegaSq, col, elem(Family::OmegaSq, 7, 0, 1)));
  CHECK_FALSE(block_contains(Family::OmegaSq, col, elem(Family::OmegaSq, 7, 1, 1)));
  CHECK_FALSE(block_contains(Family::OmegaSq, col, elem(Family::OmegaSq, 3, 0, 1)));
  CHECK_FALSE(block_contains(Family::OmegaSq, col, top_elem(Family::OmegaSq, 1)));

  auto full = Block::full_tail(OrdK::pair(1, 5), 0);
  CHECK(block_contains(Family::OmegaSq, full, elem(Family::OmegaSq, 1, 5, 0)));
  CHECK(block_contains(Family::OmegaSq, full, elem(Family::OmegaSq, 2, 0, 0)));
  CHECK(block_contains(Family::OmegaSq, full, top_elem(Family::OmegaSq, 0)));
  CHECK_FALSE(block_contains(Family::OmegaSq, full, elem(Family::OmegaSq, 1, 4, 0)));
}

TEST_CASE("family validation rejects foreign blocks") {
  CHECK_THROWS_AS(positive_desc(Family::Omega, {Block::zero_col_tail(0, 0)}), Error);
  CHECK_THROWS_AS(positive_desc(Family::Omega, {Block::row_tail(1, 0, 0)}), Error);
  CHECK_THROWS_AS(positive_desc(Family::Omega, {Block::point(OrdK::pair(2, 1), 0)}), Error);
  CHECK_NOTHROW(positive_desc(Family::Omega, {Block::row_tail(0, 4, 1)}));
}

TEST_CASE("normalization merges adjacent and absorbed blocks") {
  Family f = Family::OmegaSq;

  // a point glued below a row tail extends it
  auto a = positive_desc(f, {Block::row_tail(1, 3, 0), Block::point(OrdK::pair(1, 2), 0)});
  CHECK(a.blocks == std::vector<Block>{Block::row_tail(1, 2, 0)});

  // absorbed points disappear
  auto b = positive_desc(f, {Block::row_tail(1, 2, 0), Block::point(OrdK::pair(1, 7), 0)});
  CHECK(b.blocks == std::vector<Block>{Block::row_tail(1, 2, 0)});

  // a full row tail below a limit-anchored full tail folds into it
  auto c = positive_desc(f, {Block::row_tail(2, 4, 1), Block::full_tail(OrdK::pair(3, 0), 1)});
  CHECK(c.blocks == std::vector<Block>{Block::full_tail(OrdK::pair(2, 4), 1)});

  // a lone top point is the degenerate full tail
  auto d = positive_desc(f, {Block::point(OrdK::limit_top(), 0)});
  CHECK(d.blocks == std::vector<Block>{Block::full_tail(OrdK::limit_top(), 0)});

  // the column keeps minimal start even when a row supplies its first element
  auto e = positive_desc(f, {Block::row_tail(2, 0, 0), Block::zero_col_tail(3, 0)});
  CHECK(e.blocks == std::vector<Block>{Block::row_tail(2, 0, 0), Block::zero_col_tail(2, 0)});

  // column segments below a full tail collapse to points, tails inside it vanish
  auto g = positive_desc(f, {Block::zero_col_tail(2, 0), Block::full_tail(OrdK::pair(2, 0), 0),
                             Block::row_tail(5, 1, 0)});
  CHECK(g.blocks == std::vector<Block>{Block::full_tail(OrdK::pair(2, 0), 0)});

  // in ω+1 the single row tail plus the top is an interval
  auto h = positive_desc(Family::Omega, {Block::row_tail(0, 5, 1), Block::point(OrdK::limit_top(), 1)});
  CHECK(h.blocks == std::vector<Block>{Block::full_tail(OrdK::pair(0, 5), 1)});
}

namespace {

Block random_block(Family f, std::mt19937_64& rng, std::uint32_t pmax) {
  auto ord = [&](bool allow_top) {
    if (allow_top && rng() % 8 == 0) return OrdK::limit_top();
    std::uint32_t q = f == Family::Omega ? 0 : static_cast<std::uint32_t>(rng() % (pmax + 1));
    return OrdK::pair(q, static_cast<std::uint32_t>(rng() % (pmax + 1)));
  };
  int bit = rng() & 1;
  switch (rng() % (f == Family::Omega ? 3 : 4)) {
    case 0: return Block::point(ord(true), bit);
    case 1: {
      std::uint32_t n = f == Family::Omega ? 0 : static_cast<std::uint32_t>(rng() % (pmax + 1));
      return Block::row_tail(n, static_cast<std::uint32_t>(rng() % (pmax + 1)), bit);
    }
    case 2: return Block::full_tail(ord(true), bit);
    default: return Block::zero_col_tail(static_cast<std::uint32_t>(rng() % (pmax + 1)), bit);
  }
}

// Splits one block into pieces with the same denotation.
std::vector<Block> equivalent_split(Family f, const Block& b, std::mt19937_64& rng) {
  switch (b.kind) {
    case BlockKind::RowTail:
      return {Block::point(OrdK::pair(b.n, b.m), b.bit), Block::row_tail(b.n, b.m + 1, b.bit)};
    case BlockKind::ZeroColTail:
      return {Block::point(OrdK::pair(b.n, 0), b.bit), Block::zero_col_tail(b.n + 1, b.bit)};
    case BlockKind::FullTail:
      if (b.at.top) return {Block::point(b.at, b.bit)};
      if (f == Family::Omega || b.at.r > 0 || rng() % 2)
        return {Block::point(b.at, b.bit), Block::full_tail(OrdK::pair(b.at.q, b.at.r + 1), b.bit)};
      return {Block::row_tail(b.at.q, 0, b.bit), Block::full_tail(OrdK::pair(b.at.q + 1, 0), b.bit)};
    case BlockKind::Point:
      return {b, b};
  }
  return {b};
}

}  // namespace

TEST_CASE("normal forms are canonical under denotation-preserving rewrites") {
  std::mt19937_64 rng(0xA11CE);
  for (Family f : {Family::Omega, Family::OmegaSq}) {
    auto grid = sample_grid(f, 14, 14);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Block> blocks;
      std::uint32_t nb = 1 + rng() % 4;
      for (std::uint32_t i = 0; i < nb; ++i) blocks.push_back(random_block(f, rng, 9));
      auto original = positive_desc(f, blocks);

      std::vector<Block> rewritten;
      for (const auto& b : blocks) {
        if (rng() % 2) {
          auto split = equivalent_split(f, b, rng);
          rewritten.insert(rewritten.end(), split.begin(), split.end());
        } else {
          rewritten.push_back(b);
        }
      }
      std::shuffle(rewritten.begin(), rewritten.end(), rng);
      auto renorm = positive_desc(f, rewritten);
      CHECK(renorm == original);

      // normalization is idempotent and preserves the denotation on the grid
      CHECK(positive_desc(f, original.blocks) == original);
      SetDesc raw{f, false, blocks, {}};
      for (const auto& e : grid) CHECK(contains(original, e) == contains(raw, e));
    }
  }
}

TEST_CASE("denotation is sound on a wide sampling grid") {
  std::mt19937_64 rng(0xA11CE);
  for (Family f : {Family::Omega, Family::OmegaSq}) {
    auto grid = sample_grid(f, 50, 50);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Block> blocks;
      for (std::uint32_t i = 0; i < 1 + rng() % 4; ++i) blocks.push_back(random_block(f, rng, 40));
      auto normalized = positive_desc(f, blocks);
      SetDesc raw{f, false, blocks, {}};
      for (const auto& e : grid)
        if (contains(normalized, e) != contains(raw, e)) FAIL("normalization changed the denotation");
    }
  }
  SUCCEED();
}

TEST_CASE("closed-form descriptions contain exactly the stated elements") {
  auto grid = sample_grid(Family::OmegaSq, 10, 10);
  // column at bit 0, column from 1 at bit 1, plus the top at bit 1
  SetDesc g = positive_desc(Family::OmegaSq, {Block::zero_col_tail(0, 0), Block::zero_col_tail(1, 1),
                                              Block::point(OrdK::limit_top(), 1)});
  for (const auto& e : grid) {
    bool expect = (!e.k.top && e.k.r == 0 && e.bit == 0) ||
                  (!e.k.top && e.k.r == 0 && e.k.q >= 1 && e.bit == 1) || (e.k.top && e.bit == 1);
    CHECK(contains(g, e) == expect);
  }
}

TEST_CASE("co-finite descriptions convert to positive form") {
  std::mt19937_64 rng(7);
  for (Family f : {Family::Omega, Family::OmegaSq}) {
    auto grid = sample_grid(f, 9, 9);
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<SymElem> ex;
      std::uint32_t k = 1 + rng() % 4;
      for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t q = f == Family::Omega ? 0 : static_cast<std::uint32_t>(rng() % 7);
        ex.push_back(elem(f, q, static_cast<std::uint32_t>(rng() % 7), rng() & 1));
      }
      auto cof = cofinite_desc(f, ex);
      auto pos = cofinite_to_positive(cof);
      CHECK_FALSE(pos.cofinite);
      for (const auto& e : grid) CHECK(contains(pos, e) == contains(cof, e));
    }
  }

  // in ω+1 a removed top leaves the naturals row; in ω²+1 that set has no finite form
  auto no_top = cofinite_to_positive(cofinite_desc(Family::Omega, {top_elem(Family::Omega, 0)}));
  CHECK(contains(no_top, elem(Family::Omega, 0, 123, 0)));
  CHECK_FALSE(contains(no_top, top_elem(Family::Omega, 0)));
  CHECK(contains(no_top, top_elem(Family::Omega, 1)));
  CHECK_THROWS_AS(cofinite_to_positive(cofinite_desc(Family::OmegaSq, {top_elem(Family::OmegaSq, 0)})),
                  Error);
}

TEST_CASE("description JSON round-trips") {
  std::mt19937_64 rng(0xA11CE);
  for (Family f : {Family::Omega, Family::OmegaSq}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Block> blocks;
      for (std::uint32_t i = 0; i < 1 + rng() % 4; ++i) blocks.push_back(random_block(f, rng, 9));
      auto d = positive_desc(f, blocks);
      CHECK(desc_from_json(desc_to_json(d)) == d);
    }
  }
  auto cof = cofinite_desc(Family::OmegaSq, {elem(Family::OmegaSq, 2, 5, 0), top_elem(Family::OmegaSq, 1)});
  CHECK(desc_from_json(desc_to_json(cof)) == cof);
  CHECK_THROWS_AS(desc_from_json(nlohmann::json{{"family", "omega"}, {"kind", "weird"}}), Error);
}

TEST_CASE("full and empty descriptions") {
  for (Family f : {Family::Omega, Family::OmegaSq}) {
    CHECK(is_full(full_desc(f)));
    CHECK_FALSE(is_full(empty_desc(f)));
    auto grid = sample_grid(f, 5, 5);
    for (const auto& e : grid) {
      CHECK(contains(full_desc(f), e));
      CHECK_FALSE(contains(empty_desc(f), e));
    }
  }
}
