#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pmx/pmx.hpp"

using namespace pmx;

namespace {

std::vector<int> L(const GroupWord& w) { return w.letters(); }

}  // namespace

TEST(Normalize, CancelsSquares) { EXPECT_TRUE(normalize({0, 0}, 3).is_identity()); }

TEST(Normalize, PicksLexLeastCommutationRepresentative) {
  EXPECT_EQ(L(normalize({2, 0}, 3)), (std::vector<int>{0, 2}));
}

TEST(Normalize, CommutesThenCancels) { EXPECT_EQ(L(normalize({0, 2, 0}, 3)), (std::vector<int>{2})); }

TEST(Normalize, LeavesBraidOfNeighboursAlone) {
  EXPECT_EQ(L(normalize({0, 1, 0}, 3)), (std::vector<int>{0, 1, 0}));
}

TEST(Normalize, CancelsAcrossLongCommutingRuns) {
  EXPECT_EQ(L(normalize({3, 0, 5, 1, 3}, 6)), (std::vector<int>{0, 1, 5}));
  EXPECT_TRUE(normalize({4, 0, 2, 0, 4, 2}, 5).is_identity());
}

TEST(Normalize, RejectsLettersOutsideRank) {
  EXPECT_THROW(normalize({0, 3}, 3), InvalidGenerator);
  EXPECT_THROW(normalize({-1}, 3), InvalidGenerator);
}

TEST(Multiply, Examples) {
  GroupWord r0 = GroupWord::generator(3, 0);
  EXPECT_TRUE(multiply(r0, r0).is_identity());
  GroupWord p = multiply(GroupWord::generator(3, 1), normalize({0, 2}, 3));
  EXPECT_EQ(L(p), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(oracle::tits_matrix(p.letters(), 3), oracle::tits_matrix({1, 2, 0}, 3));
}

TEST(Multiply, RankMismatchThrows) {
  EXPECT_THROW(multiply(GroupWord::generator(3, 0), GroupWord::generator(4, 0)), RankMismatch);
}

TEST(Inverse, Examples) {
  EXPECT_TRUE(inverse(GroupWord::identity(3)).is_identity());
  EXPECT_EQ(L(inverse(normalize({0, 1}, 3))), (std::vector<int>{1, 0}));
  EXPECT_EQ(L(inverse(normalize({0, 2}, 3))), (std::vector<int>{0, 2}));
}

TEST(IsEven, Examples) {
  EXPECT_TRUE(is_even(GroupWord::identity(3)));
  EXPECT_FALSE(is_even(GroupWord::generator(3, 0)));
  EXPECT_TRUE(is_even(normalize({0, 2, 1, 0}, 3)));
}

TEST(ToString, Formats) {
  EXPECT_EQ(GroupWord::identity(3).to_string(), "1");
  EXPECT_EQ(normalize({2, 0}, 3).to_string(), "r0r2");
  EXPECT_EQ(normalize({11, 0}, 12).to_string(), "r0.r11");
}

TEST(Act, IdentityAndGenerator) {
  Premaniplex hex = polygon(6);
  for (Vertex v = 0; v < hex.vertex_count(); ++v) {
    EXPECT_EQ(act(GroupWord::identity(2), hex, v), v);
    EXPECT_EQ(act(GroupWord::generator(2, 1), hex, v), hex.neighbor(1, v));
  }
}

TEST(Act, AppliesRightmostLetterFirst) {
  Premaniplex hex = polygon(6);
  ASSERT_EQ(hex.vertex_count(), 12u);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(act(normalize({0, 1}, 2), hex, v), hex.neighbor(0, hex.neighbor(1, v)));
}

TEST(Act, Errors) {
  Premaniplex hex = polygon(6);
  EXPECT_THROW(act(GroupWord::generator(3, 0), hex, 0), RankMismatch);
  EXPECT_THROW(act(GroupWord::generator(2, 0), hex, 12), OutOfRange);
}

TEST(WordKernel, PartitionMatchesMoveClosureRank3) {
  auto wc = oracle::brute_word_classes(3, 7);
  std::map<std::size_t, GroupWord> seen;
  for (std::size_t id = 0; id < wc.words.size(); ++id) {
    GroupWord w = normalize(wc.words[id], 3);
    auto [it, fresh] = seen.emplace(wc.cls[id], w);
    ASSERT_EQ(it->second, w) << "word " << id;
  }
  std::set<GroupWord> distinct;
  for (auto& [k, w] : seen) distinct.insert(w);
  EXPECT_EQ(distinct.size(), seen.size());
}

TEST(WordKernel, AgreesWithTitsRepresentation) {
  std::mt19937 rng(7);
  for (int k = 0; k < 3000; ++k) {
    const int rank = 2 + static_cast<int>(rng() % 4);
    auto a = oracle::random_letters(rank, static_cast<int>(rng() % 12), rng);
    auto b = oracle::random_letters(rank, static_cast<int>(rng() % 12), rng);
    const bool same_group = oracle::tits_matrix(a, rank) == oracle::tits_matrix(b, rank);
    ASSERT_EQ(normalize(a, rank) == normalize(b, rank), same_group);
    ASSERT_EQ(oracle::tits_matrix(normalize(a, rank).letters(), rank), oracle::tits_matrix(a, rank));
  }
}

TEST(WordKernel, IdempotentAndNonIncreasing) {
  std::mt19937 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const int rank = 1 + static_cast<int>(rng() % 6);
    auto w = oracle::random_letters(rank, static_cast<int>(rng() % 16), rng);
    GroupWord n = normalize(w, rank);
    ASSERT_EQ(normalize(n.letters(), rank), n);
    ASSERT_LE(n.length(), w.size());
    ASSERT_TRUE(multiply(n, inverse(n)).is_identity());
    ASSERT_EQ(is_even(n), w.size() % 2 == 0);
  }
}

TEST(WordKernel, MultiplyIsAssociativeAndMatchesConcatenation) {
  std::mt19937 rng(13);
  for (int k = 0; k < 1000; ++k) {
    auto a = oracle::random_letters(4, 5, rng), b = oracle::random_letters(4, 5, rng),
         c = oracle::random_letters(4, 5, rng);
    GroupWord A = normalize(a, 4), B = normalize(b, 4), C = normalize(c, 4);
    ASSERT_EQ(multiply(multiply(A, B), C), multiply(A, multiply(B, C)));
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    ASSERT_EQ(multiply(A, B), normalize(ab, 4));
  }
}
