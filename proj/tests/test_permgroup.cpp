#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "pmass/errors.hpp"
#include "pmass/group_verify.hpp"
#include "pmass/perm.hpp"

using namespace pmass;
using namespace pmass::perm;

TEST(Perm, Basics) {
    const Perm c = Perm::cycle(5);
    EXPECT_EQ(c.order(), 5);
    EXPECT_EQ(c.str(), "(0 1 2 3 4)");
    EXPECT_TRUE((c * c.inverse()).is_identity());
    EXPECT_EQ(Perm::identity(3).str(), "()");
    EXPECT_EQ(Perm::transposition(4, 1, 3).order(), 2);
    EXPECT_EQ(Perm::affine(5, 2, 0).order(), 4);
    // (a * b)(x) = a(b(x))
    const Perm a = Perm::transposition(3, 0, 1);
    const Perm b = Perm::cycle(3);
    EXPECT_EQ((a * b)(0), a(b(0)));
    const std::array<int, 3> bad{0, 0, 1};
    EXPECT_THROW(Perm{bad}, InvalidParameter);
}

TEST(Perm, RankRoundTrip) {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r < factorial(n); ++r) EXPECT_EQ(Perm::unrank(n, r).rank(), r);
    }
    EXPECT_EQ(factorial(7), 5040);
}

TEST(Subgroup, Closures) {
    const std::array<Perm, 1> cyc{Perm::cycle(5)};
    const SubgroupRecord c5 = subgroup_closure(5, cyc);
    EXPECT_EQ(c5.order, 5);
    EXPECT_TRUE(c5.transitive);
    EXPECT_TRUE(c5.solvable);
    EXPECT_TRUE(c5.abelian);
    EXPECT_EQ(c5.sylow_p_count, 1);

    const std::array<Perm, 2> gens{Perm::cycle(5), Perm::transposition(5, 0, 1)};
    const SubgroupRecord s5 = subgroup_closure(5, gens);
    EXPECT_EQ(s5.order, 120);
    EXPECT_FALSE(s5.solvable);
    EXPECT_EQ(s5.sylow_p_count, 6);

    const SubgroupRecord trivial = subgroup_closure(5, std::span<const Perm>{});
    EXPECT_EQ(trivial.order, 1);
    EXPECT_FALSE(trivial.transitive);
}

TEST(Subgroup, Operations) {
    const std::array<Perm, 2> gens{Perm::cycle(4), Perm::transposition(4, 0, 1)};
    const Subgroup s4 = Subgroup::generate(4, gens);
    EXPECT_EQ(s4.order(), 24);
    EXPECT_EQ(s4.derived().order(), 12);
    EXPECT_EQ(s4.derived().derived().order(), 4);
    EXPECT_TRUE(s4.solvable());
    const std::array<Perm, 1> c{Perm::cycle(4)};
    const Subgroup c4 = Subgroup::generate(4, c);
    EXPECT_TRUE(s4.contains(c4));
    EXPECT_EQ(c4.intersect(s4.derived()).order(), 2);
    EXPECT_EQ(c4.join(s4.derived()), s4);
}

TEST(Subgroup, ScaleGuard) {
    const std::array<int, 8> images{1, 2, 3, 4, 5, 6, 7, 0};
    EXPECT_THROW(Perm{images}, ScaleExceeded);
    try {
        (void)Subgroup::generate(8, std::span<const Perm>{});
        FAIL();
    } catch (const ScaleExceeded& e) {
        EXPECT_STREQ(e.what(), "verification scale exceeded");
    }
    EXPECT_THROW((void)verify_normalizer(11), ScaleExceeded);
}

TEST(GroupVerify, Normalizers) {
    EXPECT_EQ(verify_normalizer(2).normalizer_order, 2);
    EXPECT_EQ(verify_normalizer(3).normalizer_order, 6);
    EXPECT_EQ(verify_normalizer(5).normalizer_order, 20);
    const NormalizerResult r = verify_normalizer(7);
    EXPECT_EQ(r.normalizer_order, 42);
    EXPECT_EQ(r.kernel_order, 7);
    EXPECT_EQ(r.character_image, 6);
    EXPECT_EQ(r.complement_order, 6);
}

TEST(GroupVerify, SolvabilityCriterion) {
    const GaloisCriterionResult r3 = verify_galois_criterion(3);
    EXPECT_TRUE(r3.exhaustive);
    ASSERT_EQ(r3.transitive.size(), 2U);
    EXPECT_EQ(r3.transitive[0].order, 3);
    EXPECT_EQ(r3.transitive[1].order, 6);

    const GaloisCriterionResult r5 = verify_galois_criterion(5);
    std::map<int, int> by_order;
    for (const SubgroupRecord& rec : r5.transitive) {
        ++by_order[rec.order];
        EXPECT_EQ(rec.solvable, rec.order <= 20);
        EXPECT_EQ(rec.sylow_p_count, rec.order <= 20 ? 1 : 6);
    }
    EXPECT_EQ(by_order, (std::map<int, int>{{5, 6}, {10, 6}, {20, 6}, {60, 1}, {120, 1}}));

    const GaloisCriterionResult r2 = verify_galois_criterion(2);
    ASSERT_EQ(r2.transitive.size(), 1U);
    EXPECT_EQ(r2.transitive[0].order, 2);

    const GaloisCriterionResult r7 = verify_galois_criterion(7);
    EXPECT_FALSE(r7.exhaustive);
    std::set<int> orders7;
    for (const SubgroupRecord& rec : r7.transitive) orders7.insert(rec.order);
    EXPECT_EQ(orders7, (std::set<int>{7, 14, 21, 42, 168, 2520, 5040}));
}

TEST(GroupVerify, IndexPSubgroups) {
    const IndexPResult r3 = verify_index_p_subgroups(3);
    ASSERT_EQ(r3.entries.size(), 2U);
    EXPECT_TRUE(r3.entries[0].skipped_commutative);
    EXPECT_EQ(r3.entries[1].order, 6);
    EXPECT_EQ(r3.entries[1].index_p_subgroups, 3);
    EXPECT_TRUE(r3.entries[1].pairwise_trivial);
    EXPECT_TRUE(r3.entries[1].pairwise_generate);

    const IndexPResult r5 = verify_index_p_subgroups(5);
    ASSERT_EQ(r5.entries.size(), 3U);
    EXPECT_TRUE(r5.entries[0].skipped_commutative);
    EXPECT_EQ(r5.entries[2].order, 20);
    EXPECT_EQ(r5.entries[2].index_p_subgroups, 5);

    EXPECT_EQ(verify_index_p_subgroups(7).entries.size(), 4U);
}
