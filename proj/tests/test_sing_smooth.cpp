#include "oracles.hpp"

#include <cycov/sing_smooth.hpp>

#include <gtest/gtest.h>

using namespace cycov;

namespace {

SmoothLocus L(int g, int d, std::vector<int> c) { return locus(g, BranchingSequence(d, std::move(c))); }

std::set<std::string> names(const std::vector<ClassificationRecord>& rs) {
    std::set<std::string> out;
    for (const auto& r : rs) out.insert(r.locus.name());
    return out;
}

} // namespace

TEST(CasePattern, Examples) {
    auto a = case_pattern(L(4, 3, {0, 0}));
    ASSERT_TRUE(a);
    EXPECT_EQ(a->tag, CaseTag::Case1);
    EXPECT_EQ(a->shape, NormalizerShape::Dihedral);

    auto b = case_pattern(L(3, 7, {1, 1, 0, 1, 0, 0}));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->tag, CaseTag::Case4_Z3);

    EXPECT_FALSE(case_pattern(L(3, 3, {1, 4})));

    auto c = case_pattern(L(3, 7, {2, 0, 0, 0, 1, 0}));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->tag, CaseTag::Case4_Z2);
    EXPECT_EQ(c->shape, NormalizerShape::Cyclic2p);

    auto d = case_pattern(L(3, 3, {1, 1}));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->tag, CaseTag::Case2);
}

TEST(CasePattern, Case3Shapes) {
    // p=5, h=0, k=4 with M = -M: {1,1,4,4} and {1,2,3,4}; both are genus 4
    auto a = case_pattern(L(4, 5, {2, 0, 0, 2}));
    ASSERT_TRUE(a);
    EXPECT_EQ(a->tag, CaseTag::Case3);
    EXPECT_EQ(a->shape, NormalizerShape::DihedralTimesZ2);
    auto b = case_pattern(L(4, 5, {1, 1, 1, 1}));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->tag, CaseTag::Case3);
    EXPECT_EQ(b->shape, NormalizerShape::Dihedral);
}

TEST(CasePattern, RejectsCompositeOrder) {
    auto l = L(3, 4, {0, 2, 0});
    EXPECT_THROW(case_pattern(l), UsageError);
    EXPECT_THROW(classify(l), UsageError);
}

TEST(Container, Examples) {
    auto c1 = container_locus(L(6, 5, {0, 0, 0, 0}), CaseTag::Case1);
    ASSERT_TRUE(c1.locus);
    EXPECT_EQ(c1.name(), "M_{6;2,[(6)]}");
    EXPECT_EQ(c1.dim, 3 * (5 - 3) / 2 + 6);

    auto c2 = container_locus(L(3, 3, {1, 1}), CaseTag::Case2);
    EXPECT_EQ(c2.name(), "M_{3;2,[(4)]}");
    EXPECT_EQ(c2.dim, 4);

    auto c4 = container_locus(L(3, 7, {2, 0, 0, 0, 1, 0}), CaseTag::Case4_Z2);
    ASSERT_TRUE(c4.locus);
    EXPECT_EQ(c4.locus->h, 0);
    EXPECT_EQ(c4.locus->k, 8);
    EXPECT_TRUE(c4.may_be_excluded);

    auto partial = container_locus(L(3, 7, {1, 1, 0, 1, 0, 0}), CaseTag::Case4_Z3);
    EXPECT_FALSE(partial.exact);
    EXPECT_EQ(partial.q, 3);
    EXPECT_EQ(partial.name(), "M_{3;3,[?]}");
    EXPECT_EQ(partial.dim, 2);
}

TEST(Container, Case1OddPrimeQuotientGenus) {
    for (int p : primes_up_to(29)) {
        if (p == 2) continue;
        const int g = p + 1;
        auto l = L(g, p, std::vector<int>(p - 1, 0));
        ASSERT_EQ(l.h, 2);
        auto c = container_locus(l, CaseTag::Case1);
        ASSERT_TRUE(c.locus);
        EXPECT_EQ(c.locus->h, 1 + (p - 3) / 2);
        EXPECT_EQ(c.dim, 3 * (p - 3) / 2 + 6);
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(L(3, 2, {8})).verdict, Verdict::ExcludedPseudoreflection);
    auto r = classify(L(3, 3, {1, 1}));
    EXPECT_EQ(r.verdict, Verdict::Redundant);
    EXPECT_EQ(r.case_tag, CaseTag::Case2);
    EXPECT_EQ(r.container->name(), "M_{3;2,[(4)]}");
    auto c = classify(L(3, 2, {4}));
    EXPECT_EQ(c.verdict, Verdict::Component);
    EXPECT_FALSE(c.case_tag);
    EXPECT_THROW(classify(L(2, 2, {6})), UsageError);
}

TEST(Decompose, GenusThree) {
    auto dec = decompose_sing(3);
    EXPECT_EQ(names(dec.components), (std::set<std::string>{"M_{3;2,[(4)]}", "M_{3;3,[(4,1)]}"}));
    for (const auto& r : dec.components)
        EXPECT_EQ(r.locus.dim, r.locus.d == 2 ? 4 : 2);
    EXPECT_EQ(names(dec.redundant),
              (std::set<std::string>{"M_{3;2,[(0)]}", "M_{3;3,[(1,1)]}", "M_{3;7,[(1,1,0,1,0,0)]}"}));
    EXPECT_EQ(names(dec.excluded), (std::set<std::string>{"M_{3;2,[(8)]}"}));
    // the Case4_Z2 locus only sits inside the hyperelliptic locus
    ASSERT_EQ(dec.manual_review.size(), 1u);
    EXPECT_EQ(dec.manual_review[0].locus.name(), "M_{3;7,[(0,2,1,0,0,0)]}");
    EXPECT_EQ(dec.manual_review[0].case_tag, CaseTag::Case4_Z2);
}

TEST(Decompose, RejectsGenusTwo) { EXPECT_THROW(decompose_sing(2), UsageError); }

TEST(Decompose, MatchesOracle) {
    for (int g = 3; g <= 6; ++g) {
        auto dec = decompose_sing(g);
        std::map<std::pair<int, std::vector<int>>, std::string> got, want;
        auto add = [&](const std::vector<ClassificationRecord>& rs) {
            for (const auto& r : rs) got[{r.locus.d, r.locus.datum.sequence().counts()}] = to_string(r.verdict);
        };
        add(dec.components);
        add(dec.redundant);
        add(dec.excluded);
        add(dec.manual_review);
        for (int p = 2; p <= 2 * g + 1; ++p) {
            if (!oracle::prime(p)) continue;
            for (const auto& [counts, h] : oracle::admissible(g, p)) {
                auto v = oracle::classify(g, p, h, counts);
                want[{p, counts}] = v.verdict;
            }
        }
        EXPECT_EQ(got, want) << "g=" << g;
    }
}

TEST(Decompose, GenusFourComponents) {
    auto dec = decompose_sing(4);
    EXPECT_EQ(names(dec.components),
              (std::set<std::string>{"M_{4;2,[(2)]}", "M_{4;2,[(6)]}", "M_{4;2,[(10)]}", "M_{4;3,[(3,0)]}",
                                     "M_{4;3,[(3,3)]}", "M_{4;3,[(6,0)]}", "M_{4;5,[(3,1,0,0)]}"}));
    EXPECT_EQ(names(dec.redundant).size(), 3u);
    EXPECT_TRUE(dec.excluded.empty());
}

TEST(Decompose, EveryLocusGetsOneVerdict) {
    for (int g = 3; g <= 8; ++g) {
        auto dec = decompose_sing(g);
        std::size_t total = 0;
        for (int p : primes_up_to(prime_order_bound(g))) total += enumerate_admissible(g, p).size();
        EXPECT_EQ(dec.components.size() + dec.redundant.size() + dec.excluded.size() + dec.manual_review.size(), total);
        for (const auto& r : dec.redundant) {
            ASSERT_TRUE(r.case_tag && r.container);
            EXPECT_GT(r.container->dim, r.locus.dim);
        }
        for (const auto& r : dec.components) EXPECT_FALSE(case_pattern(r.locus));
    }
}

TEST(Classify, UnitInvariance) {
    for (int g = 3; g <= 7; ++g)
        for (int p : primes_up_to(prime_order_bound(g)))
            for (const auto& a : enumerate_admissible(g, p)) {
                const auto base = classify(locus(g, a.datum));
                for (int u : units(p)) {
                    auto moved = a.datum.sequence().act(u);
                    auto r = classify(locus(g, moved));
                    EXPECT_EQ(r.verdict, base.verdict);
                    EXPECT_EQ(r.case_tag, base.case_tag);
                }
            }
}
