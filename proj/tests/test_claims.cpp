#include <gtest/gtest.h>

#include <set>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

TEST(Claims, RegistryIsSortedAndUnique) {
    const auto& reg = claim_registry();
    EXPECT_GE(reg.size(), 25u);
    std::set<std::string> ids;
    for (const auto& d : reg) EXPECT_TRUE(ids.insert(d.id).second) << d.id;
    EXPECT_TRUE(std::is_sorted(reg.begin(), reg.end(), [](auto& a, auto& b) { return a.id < b.id; }));
}

TEST(Claims, Examples) {
    EXPECT_EQ(run_claim("slope-k3-equals-7").status, ClaimStatus::Pass);
    const ClaimResult b = run_claim("ineq-b-constants");
    EXPECT_EQ(b.status, ClaimStatus::Pass);
    EXPECT_EQ(b.computed, "45045/631, 6435/631");
    EXPECT_THROW(run_claim("no-such-claim"), std::out_of_range);
}

TEST(Claims, DiscrepanciesAreTheTwoFlaggedItems) {
    const ClaimResult u = run_claim("universal-curve-slope");
    EXPECT_EQ(u.status, ClaimStatus::Discrepancy);
    EXPECT_NE(u.computed.find("printed"), std::string::npos);
    const ClaimResult m = run_claim("tails-pullback-m5");
    EXPECT_EQ(m.status, ClaimStatus::Discrepancy);
    EXPECT_EQ(m.expected, "-3/2 B_2");
    EXPECT_EQ(m.computed, "-1/2 B_2");
}

TEST(Claims, FullSuite) {
    const ClaimReport rep = run_all_claims();
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.internal_error());
    EXPECT_EQ(rep.count(ClaimStatus::Discrepancy), 2u);
    for (const auto& r : rep.results)
        EXPECT_NE(r.status, ClaimStatus::Fail) << r.id << ": " << r.detail;
    // Deterministic: rerunning a claim gives the same value.
    for (const auto& r : rep.results) {
        if (r.id != "ineq-b-constants" && r.id != "tails-pullback-m5" && r.id != "universal-curve-slope") continue;
        const ClaimResult again = run_claim(r.id);
        EXPECT_EQ(again.status, r.status) << r.id;
        EXPECT_EQ(again.computed, r.computed) << r.id;
    }
}
