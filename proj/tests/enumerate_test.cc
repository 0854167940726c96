#include "mawkit/enumerate.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "mawkit/oracle.h"
#include "test_util.h"

namespace mawkit {
namespace {

using oracle::StringSet;
using testing::AllMasks;
using testing::Collect;
using testing::Maws;
using testing::Ranks;

LabelSet L(const char* bits) { return LabelSet::FromBitString(bits); }

// Per-document reading of the MAW definition: aub is a MAW of S_i iff it is
// absent from S_i while au and ub are present.
bool DefinitionSaysMaw(const LabelSet& au, const LabelSet& ub, const LabelSet* aub,
                       const LabelSet& mask) {
  for (std::size_t i = 0; i < mask.k(); ++i) {
    const bool in_aub = aub != nullptr && aub->test(i);
    const bool maw_i = !in_aub && au.test(i) && ub.test(i);
    if (maw_i != mask.test(i)) return false;
  }
  return true;
}

TEST(CandidatePredicateTest, Examples) {
  EXPECT_TRUE(CandidatePresent(L("11"), L("11"), L("01"), L("10")));
  for (const char* m : {"10", "01", "11"}) {
    EXPECT_FALSE(CandidatePresent(L("11"), L("11"), L("11"), L(m)));
  }
  EXPECT_TRUE(CandidateAbsent(L("11"), L("10"), L("10")));
  EXPECT_TRUE(CandidateAbsent(L("11"), L("11"), L("11")));
  EXPECT_FALSE(CandidateAbsent(L("01"), L("11"), L("10")));
}

TEST(CandidatePredicateTest, ExhaustiveTwoBitTruthTable) {
  const std::vector<const char*> values{"01", "10", "11"};
  for (const char* mask : {"10", "01", "11"}) {
    for (const char* au : values) {
      for (const char* ub : values) {
        const bool expect_absent = DefinitionSaysMaw(L(au), L(ub), nullptr, L(mask));
        EXPECT_EQ(CandidateAbsent(L(au), L(ub), L(mask)), expect_absent)
            << au << " " << ub << " " << mask;
        for (const char* aub : values) {
          const LabelSet aub_set = L(aub);
          EXPECT_EQ(CandidatePresent(L(au), L(ub), aub_set, L(mask)),
                    DefinitionSaysMaw(L(au), L(ub), &aub_set, L(mask)))
              << au << " " << ub << " " << aub << " " << mask;
        }
      }
    }
  }
}

TEST(CandidatePredicateTest, WideMasksAgreeWithDefinition) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng() % 150;
    LabelSet au(k), ub(k), aub(k), mask(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (rng() % 4) au.set(i);
      if (rng() % 4) ub.set(i);
      if (au.test(i) && ub.test(i) && rng() % 3 == 0) aub.set(i);
    }
    // Half the trials use the mask the definition produces.
    for (std::size_t i = 0; i < k; ++i) {
      const bool maw_i = au.test(i) && ub.test(i) && !aub.test(i);
      if (trial % 2 ? maw_i : (rng() & 1)) mask.set(i);
    }
    EXPECT_EQ(CandidatePresent(au, ub, aub, mask), DefinitionSaysMaw(au, ub, &aub, mask));
    EXPECT_EQ(CandidateAbsent(au, ub, mask), DefinitionSaysMaw(au, ub, nullptr, mask));
  }
}

class ExampleCollection : public ::testing::Test {
 protected:
  const std::vector<std::string> docs_{"abaab", "aacbba"};
  const DocumentCollection coll_ = InternCollection(docs_, "abcd");
  const Dawg dawg_ = BuildDawg(coll_);
};

TEST_F(ExampleCollection, AllMasks) {
  EXPECT_EQ(Maws(coll_, dawg_, "10"), (StringSet{"aaba", "bab", "bb", "c"}));
  EXPECT_EQ(Maws(coll_, dawg_, "01"),
            (StringSet{"ab", "baa", "bac", "bbb", "bc", "ca", "cba", "cc"}));
  EXPECT_EQ(Maws(coll_, dawg_, "11"), (StringSet{"aaa", "d"}));
}

TEST_F(ExampleCollection, SkipListOfSourceForFullMask) {
  const SkipIndex skip = BuildSkipIndex(dawg_, QueryMask::Parse("11", 2));
  std::string listed;
  for (const Edge& e : skip.list(dawg_.source())) {
    listed.push_back(static_cast<char>(coll_.table.symbol(e.symbol)));
  }
  EXPECT_EQ(listed, "ab");
}

TEST_F(ExampleCollection, RejectsBadMasks) {
  EXPECT_THROW(QueryMask::Parse("00", 2), std::invalid_argument);
  EXPECT_THROW(QueryMask::Parse("1", 2), std::invalid_argument);
  EXPECT_THROW(EnumerateMaws(dawg_, QueryMask::Parse("111", 3), [](const MawRef&) {}),
               std::invalid_argument);
}

TEST_F(ExampleCollection, DecodeReferences) {
  // a·"ab" with "ab" read from document 1 positions 4..5.
  EXPECT_EQ(DecodeMaw(MawRef{*coll_.table.rank('a'), 1, 4, 5}, coll_), "aab");
  EXPECT_EQ(DecodeMaw(MawRef{*coll_.table.rank('b'), 2, 6, 6}, coll_), "ba");
  EXPECT_EQ(DecodeMaw(MawRef{*coll_.table.rank('d'), 1, 1, 0}, coll_), "d");
  EXPECT_THROW(DecodeMaw(MawRef{0, 1, 5, 6}, coll_), std::logic_error);  // sentinel
  EXPECT_THROW(DecodeMaw(MawRef{0, 3, 1, 1}, coll_), std::logic_error);
  EXPECT_THROW(DecodeMaw(MawRef{4, 1, 1, 1}, coll_), std::logic_error);

  std::vector<std::string> decoded;
  EnumerateMaws(dawg_, QueryMask::Parse("10", 2), [&](const MawRef& r) {
    EXPECT_EQ(r.length(), DecodeMaw(r, coll_).size());
    decoded.push_back(DecodeMaw(r, coll_));
  });
  std::sort(decoded.begin(), decoded.end());
  EXPECT_EQ(decoded, (std::vector<std::string>{"aaba", "bab", "bb", "c"}));
}

TEST_F(ExampleCollection, SetOperations) {
  auto run = [&](SetOp op) {
    std::size_t dups = 0;
    auto out = Collect(coll_, [&](const MawSink& s) { EnumerateSetOp(dawg_, op, s); }, &dups);
    EXPECT_EQ(dups, 0u);
    return out;
  };
  const StringSet symdiff = run(SetOp::kSymmetricDifference);
  EXPECT_EQ(symdiff.size(), 12u);
  EXPECT_EQ(run(SetOp::kIntersection), (StringSet{"aaa", "d"}));
  EXPECT_EQ(run(SetOp::kUnion).size(), 14u);
}

TEST_F(ExampleCollection, PrimeContainsIntersection) {
  const auto prime =
      Collect(coll_, [&](const MawSink& s) { EnumerateMawPrime(dawg_, s); });
  EXPECT_TRUE(prime.count("aaa"));
  EXPECT_EQ(prime, oracle::OraclePrime(coll_));
}

TEST_F(ExampleCollection, SpecificStrings) {
  const std::vector<std::uint32_t> t{1}, r{2};
  const auto got =
      Collect(coll_, [&](const MawSink& s) { EnumerateSpecific(dawg_, t, r, s); });
  EXPECT_EQ(got, (StringSet{"ab", "baa"}));
  const std::vector<std::uint32_t> both{1, 2}, none;
  EXPECT_THROW(EnumerateSpecific(dawg_, both, r, [](const MawRef&) {}),
               std::invalid_argument);
  EXPECT_THROW(EnumerateSpecific(dawg_, none, r, [](const MawRef&) {}),
               std::invalid_argument);
}

TEST(EnumerateMawsTest, SingleStringExample) {
  const std::vector<std::string> docs{"bbacccbaa"};
  const auto coll = InternCollection(docs, "abcd");
  EXPECT_EQ(Maws(coll, BuildDawg(coll), "1"),
            (StringSet{"aaa", "bbb", "cccc", "d", "ab", "ca", "bc", "aac", "acb", "cbb",
                       "accb", "cbac", "bbaa"}));
}

TEST(EnumerateMawsTest, TwoSingleLetterDocuments) {
  const std::vector<std::string> docs{"a", "a"};
  const auto coll = InternCollection(docs);
  const Dawg dawg = BuildDawg(coll);
  EXPECT_EQ(Maws(coll, dawg, "11"), (StringSet{"aa"}));
  EXPECT_TRUE(Maws(coll, dawg, "10").empty());
}

TEST(EnumerateMawsTest, EmptyDocumentMissesEverySymbol) {
  const std::vector<std::string> docs{"", "ab"};
  const auto coll = InternCollection(docs, "abc");
  const Dawg dawg = BuildDawg(coll);
  EXPECT_EQ(Maws(coll, dawg, "10"), (StringSet{"a", "b"}));
  EXPECT_EQ(Maws(coll, dawg, "11"), (StringSet{"c"}));
}

TEST(EnumerateMawsTest, RandomInstancesMatchOracleAndPartition) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::RandomCollection(rng, {4, 20, 4, 1});
    const auto coll = inst.Intern();
    const Dawg dawg = BuildDawg(coll);
    std::map<std::string, int> seen;
    for (const auto& mask : AllMasks(coll.k())) {
      std::size_t dups = 0;
      const auto got = Maws(coll, dawg, mask.ToBitString(), &dups);
      EXPECT_EQ(dups, 0u) << inst.Describe();
      ASSERT_EQ(got, oracle::OracleMaws(coll, mask))
          << inst.Describe() << " mask " << mask.ToBitString();
      for (const auto& w : got) ++seen[w];
    }
    StringSet all;
    for (std::size_t i = 1; i <= coll.k(); ++i) {
      for (const auto& w : oracle::SingleMaws(coll.raw(i), coll.table.alphabet())) {
        all.insert(w);
      }
    }
    EXPECT_EQ(seen.size(), all.size());
    for (const auto& [w, count] : seen) {
      EXPECT_EQ(count, 1) << w;
      EXPECT_TRUE(all.count(w));
    }
  }
}

TEST(EnumerateMawsTest, ComparisonCountIsOutputSensitive) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::RandomCollection(rng, {4, 20, 4, 1});
    const auto coll = inst.Intern();
    const Dawg dawg = BuildDawg(coll);
    std::map<std::string, std::size_t> sizes;
    for (const auto& m : AllMasks(coll.k())) {
      sizes[m.ToBitString()] = oracle::OracleMaws(coll, m).size();
    }
    for (const auto& m : AllMasks(coll.k())) {
      std::size_t supersets = 0;
      for (const auto& other : AllMasks(coll.k())) {
        if (labels::Covers(other, m)) supersets += sizes[other.ToBitString()];
      }
      ScanStats stats;
      EnumerateMaws(dawg, QueryMask(m), [](const MawRef&) {}, &stats);
      EXPECT_LE(stats.comparisons, 8 * (coll.total_length() + supersets));
      EXPECT_LE(stats.label_word_ops,
                (stats.comparisons + dawg.num_nodes() + coll.sigma()) * dawg.label_words());
      EXPECT_EQ(stats.emitted, sizes[m.ToBitString()]);
    }
  }
}

TEST(SkipIndexTest, ListsExactlyCoveringChildren) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::RandomCollection(rng, {4, 20, 4, 2});
    const auto coll = inst.Intern();
    const Dawg dawg = BuildDawg(coll);
    for (const auto& m : AllMasks(coll.k())) {
      const SkipIndex skip = BuildSkipIndex(dawg, QueryMask(m));
      EXPECT_LE(skip.size(), dawg.num_edges());
      for (NodeId v = 0; v < dawg.num_nodes(); ++v) {
        std::set<Symbol> listed;
        for (const Edge& e : skip.list(v)) {
          EXPECT_FALSE(coll.table.is_sentinel(e.symbol));
          listed.insert(e.symbol);
        }
        for (const Edge& e : dawg.edges(v)) {
          const bool keep =
              !coll.table.is_sentinel(e.symbol) && labels::Covers(dawg.label(e.target), m);
          EXPECT_EQ(listed.count(e.symbol) == 1, keep);
        }
      }
    }
  }
}

TEST(EnumerateMawsParallelTest, MatchesSequentialOutput) {
  std::mt19937_64 rng(404);
  std::vector<std::string> docs(3, std::string(3000, 'a'));
  for (auto& d : docs) {
    for (char& c : d) c = static_cast<char>('a' + rng() % 3);
  }
  const auto coll = InternCollection(docs);
  const Dawg dawg = BuildDawg(coll);
  for (const char* mask : {"100", "011", "111"}) {
    const auto q = QueryMask::Parse(mask, 3);
    std::vector<MawRef> seq;
    EnumerateMaws(dawg, q, [&](const MawRef& r) { seq.push_back(r); });
    auto par = EnumerateMawsParallel(dawg, q, 4);
    auto key = [](const MawRef& a, const MawRef& b) {
      return std::tie(a.first, a.doc, a.start, a.end) < std::tie(b.first, b.doc, b.start, b.end);
    };
    std::sort(seq.begin(), seq.end(), key);
    std::sort(par.begin(), par.end(), key);
    EXPECT_EQ(seq, par);
  }
}

TEST(SetOpTest, IdenticalDocumentsHaveNoSymmetricDifference) {
  const std::vector<std::string> docs{"abcabba", "abcabba"};
  const auto coll = InternCollection(docs);
  const Dawg dawg = BuildDawg(coll);
  std::size_t n = 0;
  EnumerateSetOp(dawg, SetOp::kSymmetricDifference, [&](const MawRef&) { ++n; });
  EXPECT_EQ(n, 0u);
}

TEST(SetOpTest, RequiresTwoDocuments) {
  const std::vector<std::string> docs{"ab", "ba", "a"};
  const auto coll = InternCollection(docs);
  EXPECT_THROW(EnumerateSetOp(BuildDawg(coll), SetOp::kUnion, [](const MawRef&) {}),
               std::invalid_argument);
}

TEST(SetOpTest, RandomPairsMatchSingleStringOracles) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::RandomCollection(rng, {2, 20, 4, 2});
    const auto coll = inst.Intern();
    const Dawg dawg = BuildDawg(coll);
    const auto m1 = oracle::SingleMaws(coll.raw(1), coll.table.alphabet());
    const auto m2 = oracle::SingleMaws(coll.raw(2), coll.table.alphabet());
    StringSet inter, uni = m1, sym;
    for (const auto& w : m1) {
      (m2.count(w) ? inter : sym).insert(w);
    }
    for (const auto& w : m2) {
      uni.insert(w);
      if (!m1.count(w)) sym.insert(w);
    }
    auto run = [&](SetOp op) {
      return Collect(coll, [&](const MawSink& s) { EnumerateSetOp(dawg, op, s); });
    };
    EXPECT_EQ(run(SetOp::kIntersection), inter) << inst.Describe();
    EXPECT_EQ(run(SetOp::kUnion), uni) << inst.Describe();
    EXPECT_EQ(run(SetOp::kSymmetricDifference), sym) << inst.Describe();
  }
}

TEST(VariantTest, PrimeOnSingleDocumentIsLongMaws) {
  const std::vector<std::string> docs{"bbacccbaa"};
  const auto coll = InternCollection(docs, "abcd");
  const Dawg dawg = BuildDawg(coll);
  StringSet expected;
  for (const auto& w : oracle::SingleMaws("bbacccbaa", "abcd")) {
    if (w.size() >= 2) expected.insert(w);
  }
  EXPECT_EQ(Collect(coll, [&](const MawSink& s) { EnumerateMawPrime(dawg, s); }), expected);
}

TEST(VariantTest, SpecificWithEqualStringsIsEmpty) {
  const std::vector<std::string> docs{"abab", "abab"};
  const auto coll = InternCollection(docs);
  const std::vector<std::uint32_t> t{1}, r{2};
  std::size_t n = 0;
  EnumerateSpecific(BuildDawg(coll), t, r, [&](const MawRef&) { ++n; });
  EXPECT_EQ(n, 0u);
}

TEST(VariantTest, RandomInstancesMatchOracle) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::RandomCollection(rng, {4, 20, 4, 1});
    const auto coll = inst.Intern();
    const Dawg dawg = BuildDawg(coll);
    std::size_t dups = 0;
    EXPECT_EQ(Collect(coll, [&](const MawSink& s) { EnumerateMawPrime(dawg, s); }, &dups),
              oracle::OraclePrime(coll))
        << inst.Describe();
    EXPECT_EQ(dups, 0u);
    if (coll.k() < 2) continue;
    std::vector<std::uint32_t> t, r;
    for (std::uint32_t d = 1; d <= coll.k(); ++d) {
      (rng() & 1 ? t : r).push_back(d);
    }
    if (t.empty()) {
      t.push_back(r.back());
      r.pop_back();
    }
    if (r.empty()) {
      r.push_back(t.back());
      t.pop_back();
    }
    EXPECT_EQ(Collect(coll, [&](const MawSink& s) { EnumerateSpecific(dawg, t, r, s); }, &dups),
              oracle::OracleSpecific(coll, t, r))
        << inst.Describe();
    EXPECT_EQ(dups, 0u);
  }
}

}  // namespace
}  // namespace mawkit
