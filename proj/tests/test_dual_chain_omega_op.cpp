#include <catch2/catch.hpp>

#include <random>

#include "latgen/dual_chain.hpp"
#include "latgen/enumerate.hpp"
#include "latgen/omega_op.hpp"

using namespace latgen;

TEST_CASE("dual chain: the bottom is forced only by countable meets") {
  DualChainDesc tail;
  tail.tail = 0;

  auto fin = dual_chain_closure(tail, Completeness::Finitary);
  CHECK_FALSE(fin.has_d);
  CHECK(fin.tail == 0u);

  auto cnt = dual_chain_closure(tail, Completeness::CountablyComplete);
  CHECK(cnt.has_d);

  DualChainDesc pts;
  pts.points = {3, 7};
  CHECK(dual_chain_closure(pts, Completeness::Finitary) == pts);
  CHECK(dual_chain_closure(pts, Completeness::CountablyComplete) == pts);

  CHECK(dual_chain_d_indispensable(Completeness::Finitary));
  CHECK_FALSE(dual_chain_d_indispensable(Completeness::CountablyComplete));
  CHECK(dual_chain_d_nongenerator(Completeness::CountablyComplete));
  CHECK_FALSE(dual_chain_d_nongenerator(Completeness::Finitary));
}

TEST_CASE("dual chain descriptions normalize") {
  DualChainDesc d;
  d.tail = 4;
  d.points = {2, 3, 9};
  auto n = dual_chain_normalize(d);
  CHECK(n.tail == 2u);       // 3 and 2 glue onto the tail
  CHECK(n.points.empty());   // 9 was absorbed
  CHECK(dual_chain_contains_c(n, 2));
  CHECK(dual_chain_contains_c(n, 100));
  CHECK_FALSE(dual_chain_contains_c(n, 1));
}

TEST_CASE("the single countable operation evaluates exactly") {
  auto b2 = product(chain(2), chain(2));
  // constant sequence
  CHECK(omega_op_eval(b2, EventuallyConstantSeq<int>{{}, 2}) == 2);
  // pair encoding of the meet: atoms 1 and 2 meet at 0
  CHECK(omega_op_eval(b2, encode_meet(1, 2, b2.meet(1, 2))) == 0);
  // doubled encoding of the join: 1 v 2 = 3
  CHECK(omega_op_eval(b2, encode_join(std::vector<int>{1, 2})) == 3);
  // odd prefixes are padded with the tail value
  CHECK(omega_op_eval(b2, EventuallyConstantSeq<int>{{3}, 0}) == 0);

  auto e1 = elem(Family::OmegaSq, 2, 1, 0);
  auto e2 = elem(Family::OmegaSq, 1, 5, 1);
  CHECK(omega_op_eval(encode_meet(e1, e2, sym_meet(e1, e2))) == sym_meet(e1, e2));
  CHECK(omega_op_eval(encode_join(std::vector<SymElem>{e1, e2})) == sym_join(e1, e2));
}

TEST_CASE("the encodings agree with direct folds on random tuples") {
  std::mt19937_64 rng(kDefaultSeed);
  std::vector<FiniteLattice> corpus;
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_lattice(n, [&](const FiniteLattice& l) { corpus.push_back(l); });
  for (int t = 0; t < 400; ++t) {
    const auto& l = corpus[rng() % corpus.size()];
    int x = static_cast<int>(rng() % l.n), y = static_cast<int>(rng() % l.n);
    CHECK(omega_op_eval(l, encode_meet(x, y, l.meet(x, y))) == l.meet(x, y));
    std::vector<int> xs;
    for (std::uint64_t i = 0, k = 1 + rng() % 6; i < k; ++i)
      xs.push_back(static_cast<int>(rng() % l.n));
    int fold = xs[0];
    for (int v : xs) fold = l.join(fold, v);
    CHECK(omega_op_eval(l, encode_join(xs)) == fold);
  }
}
