#include "apsum/modring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "apsum/errors.hpp"

using namespace apsum;

namespace {

ResidueSet random_set(Modulus m, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Residue> members;
  for (Residue r = 0; r < m.value(); ++r) {
    if (coin(rng)) members.push_back(r);
  }
  return ResidueSet::from_members(m, members);
}

ResidueSet random_small_set(Modulus m, std::size_t max_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<Residue> elem(0, static_cast<Residue>(m.value() - 1));
  std::vector<Residue> members;
  const std::size_t size = size_dist(rng);
  for (std::size_t i = 0; i < size; ++i) members.push_back(elem(rng));
  return ResidueSet::from_members(m, members);
}

}  // namespace

TEST(Modulus, FourNPlusOne) {
  EXPECT_EQ(make_modulus(1).value(), 5U);
  EXPECT_EQ(make_modulus(5).value(), 21U);
  EXPECT_EQ(make_modulus(100).value(), 401U);
  EXPECT_EQ(make_modulus(100).interval_bound(), 100U);
  EXPECT_FALSE(Modulus::arbitrary(7).interval_bound().has_value());
}

TEST(Modulus, RejectsDegenerate) {
  EXPECT_THROW(make_modulus(0), std::invalid_argument);
  EXPECT_THROW(Modulus::arbitrary(0), std::invalid_argument);
  EXPECT_THROW(Modulus::arbitrary(Modulus::kMaxValue + 1), std::invalid_argument);
}

TEST(ResidueSet, RejectsOutOfRangeMember) {
  EXPECT_THROW(ResidueSet::from_members(Modulus::arbitrary(5), {5}), std::out_of_range);
  EXPECT_THROW(ResidueSet(Modulus::arbitrary(5), Bitset(6)), std::invalid_argument);
}

TEST(ReduceIntegers, Examples) {
  const auto m = make_modulus(1);
  const std::vector<std::int64_t> small{1, 2, 3};
  EXPECT_EQ(reduce_integers(small, m).members(), (std::vector<Residue>{1, 2, 3}));
  const std::vector<std::int64_t> six{6};
  EXPECT_EQ(reduce_integers(six, m).members(), (std::vector<Residue>{1}));
  const std::vector<std::int64_t> collide{1, 6};
  const auto r = reduce_integers(collide, m);
  EXPECT_EQ(r.members(), (std::vector<Residue>{1}));
  EXPECT_EQ(r.cardinality(), 1U);
  const std::vector<std::int64_t> negative{-1};
  EXPECT_EQ(reduce_integers(negative, m).members(), (std::vector<Residue>{4}));
}

TEST(Negate, Examples) {
  const auto m = make_modulus(1);
  EXPECT_EQ(negate(ResidueSet::from_members(m, {0})).members(), (std::vector<Residue>{0}));
  EXPECT_EQ(negate(ResidueSet::from_members(m, {1, 2})).members(), (std::vector<Residue>{3, 4}));
  const auto sym = ResidueSet::from_members(m, {2, 3});
  EXPECT_EQ(negate(sym), sym);
  EXPECT_TRUE(sym.is_symmetric());
  EXPECT_FALSE(ResidueSet::from_members(m, {1, 2}).is_symmetric());
}

TEST(Translate, Examples) {
  const auto m = make_modulus(1);
  EXPECT_EQ(translate(ResidueSet::from_members(m, {0, 1}), 2).members(), (std::vector<Residue>{2, 3}));
  EXPECT_EQ(translate(ResidueSet::from_members(m, {4}), 1).members(), (std::vector<Residue>{0}));
  EXPECT_EQ(translate(ResidueSet::from_members(m, {0, 1}), 5).members(), (std::vector<Residue>{0, 1}));
  EXPECT_EQ(translate(ResidueSet::from_members(m, {0, 1}), -1).members(), (std::vector<Residue>{0, 4}));
}

TEST(Sumset, Examples) {
  const auto m45 = Modulus::arbitrary(45);
  EXPECT_EQ(sumset(ResidueSet::from_members(m45, {1, 2}), ResidueSet::from_members(m45, {10})).members(),
            (std::vector<Residue>{11, 12}));
  const auto m5 = make_modulus(1);
  EXPECT_EQ(sumset(ResidueSet::from_members(m5, {4}), ResidueSet::from_members(m5, {4})).members(),
            (std::vector<Residue>{3}));
  const auto m = Modulus::arbitrary(77);
  EXPECT_EQ(sumset(ResidueSet::full(m), ResidueSet::from_members(m, {0})), ResidueSet::full(m));
}

TEST(Sumset, ModulusMismatch) {
  const auto a = ResidueSet::from_members(Modulus::arbitrary(5), {1});
  const auto b = ResidueSet::from_members(Modulus::arbitrary(7), {1});
  EXPECT_THROW(sumset(a, b), ModulusMismatch);
  EXPECT_THROW(cross_correlation(a, b), ModulusMismatch);
  EXPECT_THROW(intersect(a, b), ModulusMismatch);
}

TEST(Sumset, MatchesPairEnumerationAndBounds) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const auto m = Modulus::arbitrary(1 + rng() % 150);
    const auto s = random_small_set(m, 12, rng);
    const auto t = random_set(m, rng, 0.2);
    std::set<Residue> expect;
    for (Residue x : s.members())
      for (Residue y : t.members()) expect.insert(static_cast<Residue>((x + y) % m.value()));
    const auto st = sumset(s, t);
    EXPECT_EQ(st.members(), std::vector<Residue>(expect.begin(), expect.end()));
    EXPECT_EQ(st, sumset(t, s));
    EXPECT_LE(st.cardinality(), std::min<std::uint64_t>(m.value(), s.cardinality() * t.cardinality()));
  }
}

TEST(Negate, Involutive) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto m = Modulus::arbitrary(1 + rng() % 300);
    const auto s = random_set(m, rng, 0.3);
    EXPECT_EQ(negate(negate(s)), s);
    EXPECT_EQ(negate(s).cardinality(), s.cardinality());
  }
}

TEST(CrossCorrelation, Examples) {
  const auto m = make_modulus(1);
  const auto prof = cross_correlation(ResidueSet::from_members(m, {0, 1}), ResidueSet::from_members(m, {2, 3}));
  EXPECT_EQ(std::vector<std::uint64_t>(prof.counts().begin(), prof.counts().end()),
            (std::vector<std::uint64_t>{0, 1, 2, 1, 0}));
  const auto single = cross_correlation(ResidueSet::from_members(m, {0}), ResidueSet::from_members(m, {0}));
  EXPECT_EQ(std::vector<std::uint64_t>(single.counts().begin(), single.counts().end()),
            (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
}

TEST(CrossCorrelation, DefinitionTotalsAndNttAgree) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    const auto m = Modulus::arbitrary(1 + rng() % 260);
    const auto a = random_set(m, rng, 0.4);
    const auto b = random_set(m, rng, 0.25);
    const auto prof = cross_correlation(a, b);
    EXPECT_EQ(prof.total(), a.cardinality() * b.cardinality());
    for (std::size_t j = 0; j < m.value(); ++j) {
      ASSERT_EQ(prof[j], intersect(translate(a, static_cast<std::int64_t>(j)), b).cardinality());
      ASSERT_LE(prof[j], std::min(a.cardinality(), b.cardinality()));
    }
    EXPECT_EQ(cross_correlation(a, b, CorrelationMethod::ntt), prof);
  }
}

TEST(DifferenceRepresentation, Examples) {
  const auto m = make_modulus(1);
  const auto r0 = difference_representation_counts(ResidueSet::from_members(m, {0}));
  EXPECT_EQ(std::vector<std::uint64_t>(r0.counts().begin(), r0.counts().end()),
            (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
  const auto r23 = difference_representation_counts(ResidueSet::from_members(m, {2, 3}));
  EXPECT_EQ(std::vector<std::uint64_t>(r23.counts().begin(), r23.counts().end()),
            (std::vector<std::uint64_t>{2, 1, 0, 0, 1}));
  const auto rfull = difference_representation_counts(ResidueSet::full(m));
  for (auto c : rfull.counts()) EXPECT_EQ(c, 5U);
}

// r(u) against direct enumeration of ordered pairs for |S| <= 8, M <= 41.
TEST(DifferenceRepresentation, MatchesPairEnumeration) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    const auto m = Modulus::arbitrary(1 + rng() % 41);
    const auto s = random_small_set(m, 8, rng);
    std::vector<std::uint64_t> expect(m.value(), 0);
    for (Residue y : s.members())
      for (Residue z : s.members()) ++expect[(y + m.value() - z) % m.value()];
    const auto r = difference_representation_counts(s);
    EXPECT_EQ(std::vector<std::uint64_t>(r.counts().begin(), r.counts().end()), expect);
    EXPECT_EQ(r.total(), s.cardinality() * s.cardinality());
    EXPECT_EQ(r[0], s.cardinality());
    EXPECT_EQ(difference_representation_counts(s, CorrelationMethod::ntt), r);
    if (s.is_symmetric()) {
      const auto ss = sumset(s, s);
      for (std::size_t u = 0; u < m.value(); ++u) EXPECT_EQ(r[u] > 0, ss.contains(static_cast<Residue>(u)));
    }
  }
}
