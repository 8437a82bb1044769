// Copyright 2026 The WikiTransfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wikitransfer/rouge.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "reference.h"
#include "rouge_fixtures.h"
#include "synthetic.h"
#include "wikitransfer/corpus.h"

namespace wikitransfer {
namespace {

using testing::Tokens;

RougeScores Score(const Tokens& c, const Tokens& r, MetricKind kind) {
  switch (kind) {
    case MetricKind::kRouge1:
      return RougeN(c, r, 1);
    case MetricKind::kRouge2:
      return RougeN(c, r, 2);
    case MetricKind::kRougeL:
      return RougeL(c, r);
  }
  return {};
}

Tokens RandomTokens(testing::Rng& rng, std::size_t max_len,
                    std::size_t alphabet) {
  Tokens out(rng.Below(max_len + 1));
  for (auto& t : out) t = std::string(1, static_cast<char>('a' + rng.Below(alphabet)));
  return out;
}

TEST(RougeTest, HandComputedFixtures) {
  for (const auto& f : testing::kRougeFixtures) {
    SCOPED_TRACE(std::string(f.candidate) + " | " + f.reference + " | " +
                 std::string(MetricKindName(f.kind)));
    const RougeScores s =
        Score(Tokenize(f.candidate), Tokenize(f.reference), f.kind);
    EXPECT_NEAR(s.precision, f.precision, 1e-6);
    EXPECT_NEAR(s.recall, f.recall, 1e-6);
    EXPECT_NEAR(s.f1, f.f1, 1e-6);
  }
}

TEST(RougeTest, IdentityIsPerfectForEveryKind) {
  const Tokens t = Tokenize("a short sentence about rivers");
  for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                       MetricKind::kRougeL}) {
    const RougeScores s = Score(t, t, k);
    EXPECT_DOUBLE_EQ(s.precision, 1.0);
    EXPECT_DOUBLE_EQ(s.recall, 1.0);
    EXPECT_DOUBLE_EQ(s.f1, 1.0);
  }
}

TEST(RougeTest, DisjointAndEmptyGiveZeros) {
  const Tokens a = {"x", "y"};
  const Tokens b = {"p", "q"};
  const Tokens empty;
  for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                       MetricKind::kRougeL}) {
    for (const auto& [c, r] : {std::pair(a, b), std::pair(empty, a),
                               std::pair(a, empty), std::pair(empty, empty)}) {
      const RougeScores s = Score(c, r, k);
      EXPECT_EQ(s.precision, 0.0);
      EXPECT_EQ(s.recall, 0.0);
      EXPECT_EQ(s.f1, 0.0);
    }
  }
}

TEST(RougeTest, NgramOrderMustBePositive) {
  const Tokens t = {"a"};
  EXPECT_THROW(RougeN(t, t, 0), std::invalid_argument);
}

TEST(RougeTest, OracleMetricDispatch) {
  const Tokens c = Tokenize("the cat sat");
  const Tokens r = Tokenize("the cat ran");
  EXPECT_NEAR(OracleMetric(c, r), 2.0 / 3, 1e-6);
  EXPECT_NEAR(OracleMetric(c, r, {MetricKind::kRouge1, ScoreField::kPrecision}),
              2.0 / 3, 1e-6);
  EXPECT_NEAR(OracleMetric(c, r, {MetricKind::kRouge2, ScoreField::kRecall}),
              0.5, 1e-6);
  for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                       MetricKind::kRougeL}) {
    EXPECT_DOUBLE_EQ(OracleMetric(r, r, {k, ScoreField::kF1}), 1.0);
  }
}

TEST(RougeTest, LcsMatchesRecursiveOracleOnShortSequences) {
  testing::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    // Plain recursion is exponential; length 8 keeps it quick.
    const Tokens a = RandomTokens(rng, 8, 3);
    const Tokens b = RandomTokens(rng, 8, 3);
    EXPECT_EQ(LcsLength(a, b), testing::RecursiveLcs(a, b));
  }
}

TEST(RougeTest, LcsMatchesEnumerationUpToLengthTwelve) {
  testing::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Tokens a = RandomTokens(rng, 12, 1 + rng.Below(5));
    const Tokens b = RandomTokens(rng, 12, 1 + rng.Below(5));
    ASSERT_EQ(LcsLength(a, b), testing::EnumeratedLcs(a, b));
  }
}

TEST(RougeTest, AgreesWithNaiveImplementation) {
  testing::Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Tokens c = RandomTokens(rng, 15, 4);
    const Tokens r = RandomTokens(rng, 15, 4);
    for (int n : {1, 2, 3}) {
      const auto expected = testing::NaiveRougeN(c, r, n);
      const auto got = RougeN(c, r, n);
      ASSERT_DOUBLE_EQ(got.precision, expected.precision);
      ASSERT_DOUBLE_EQ(got.recall, expected.recall);
      ASSERT_DOUBLE_EQ(got.f1, expected.f1);
    }
    const auto expected = testing::NaiveRougeL(c, r);
    const auto got = RougeL(c, r);
    ASSERT_DOUBLE_EQ(got.f1, expected.f1);
  }
}

TEST(RougeTest, ClippedOverlapIsSymmetric) {
  testing::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Tokens c = RandomTokens(rng, 20, 5);
    const Tokens r = RandomTokens(rng, 20, 5);
    for (int n : {1, 2}) {
      EXPECT_EQ(ClippedOverlap(CountNgrams(c, n), CountNgrams(r, n)),
                ClippedOverlap(CountNgrams(r, n), CountNgrams(c, n)));
      const auto forward = RougeN(c, r, n);
      const auto backward = RougeN(r, c, n);
      EXPECT_DOUBLE_EQ(forward.precision, backward.recall);
      EXPECT_DOUBLE_EQ(forward.recall, backward.precision);
      EXPECT_DOUBLE_EQ(forward.f1, backward.f1);
    }
  }
}

TEST(RougeTest, AppendingReferenceTokenNeverLowersRecall) {
  testing::Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    Tokens c = RandomTokens(rng, 10, 5);
    const Tokens r = RandomTokens(rng, 10, 5);
    if (r.empty()) continue;
    for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                         MetricKind::kRougeL}) {
      Tokens longer = c;
      longer.push_back(r[rng.Below(r.size())]);
      EXPECT_GE(Score(longer, r, k).recall, Score(c, r, k).recall);
    }
  }
}

TEST(RougeTest, ScoresStayInUnitInterval) {
  testing::Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    const Tokens c = RandomTokens(rng, 12, 6);
    const Tokens r = RandomTokens(rng, 12, 6);
    for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                         MetricKind::kRougeL}) {
      const RougeScores s = Score(c, r, k);
      for (double v : {s.precision, s.recall, s.f1}) {
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 1.0);
      }
      if (s.precision + s.recall == 0) {
        ASSERT_EQ(s.f1, 0.0);
      }
    }
  }
}

TEST(RougeTest, ReferenceScorerMatchesDirectScoring) {
  testing::Rng rng(17);
  for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                       MetricKind::kRougeL}) {
    const Tokens r = RandomTokens(rng, 20, 6);
    const ReferenceScorer scorer(r, {k, ScoreField::kF1});
    for (int i = 0; i < 200; ++i) {
      const Tokens c = RandomTokens(rng, 20, 6);
      EXPECT_DOUBLE_EQ(scorer.Score(c), Score(c, r, k).f1);
    }
  }
}

TEST(RougeTest, NameRoundTrips) {
  for (MetricKind k : {MetricKind::kRouge1, MetricKind::kRouge2,
                       MetricKind::kRougeL}) {
    EXPECT_EQ(ParseMetricKind(MetricKindName(k)), k);
  }
  for (ScoreField f :
       {ScoreField::kPrecision, ScoreField::kRecall, ScoreField::kF1}) {
    EXPECT_EQ(ParseScoreField(ScoreFieldName(f)), f);
  }
  EXPECT_FALSE(ParseMetricKind("rouge4"));
  EXPECT_FALSE(ParseScoreField("accuracy"));
}

}  // namespace
}  // namespace wikitransfer
