#include "fixtures.hpp"

#include "gtprobe/reproduce.hpp"

#include <gtest/gtest.h>

using namespace gtprobe;
using fixtures::orbit;

TEST(Reproduce, CaseNamesAndDefaults)
{
    EXPECT_EQ(repro_case_from_string("b-neg"), ReproCase::BNeg);
    EXPECT_EQ(to_string(ReproCase::Monotone), "monotone");
    EXPECT_THROW(repro_case_from_string("b-zero"), std::invalid_argument);
    EXPECT_EQ(default_orbit(ReproCase::BPos).str(), fixtures::b_pos().str());
    EXPECT_EQ(applicable_lemmas(fixtures::b_neg()), (std::vector<std::string>{"fromf1", "fromf4", "fromf3"}));
    EXPECT_EQ(applicable_lemmas(fixtures::monotone()), (std::vector<std::string>{"fromf1", "fromf4"}));
}

TEST(Reproduce, LemmaSuitesAtCoarseGrid)
{
    for (const auto& o : {fixtures::b_neg(), fixtures::b_pos(), orbit({5, 2, -7}), orbit({5, -2, -3})}) {
        for (const auto& lemma : applicable_lemmas(o)) {
            const LemmaSuite s = run_lemma_suite(o, lemma, 4);
            EXPECT_TRUE(s.failures.empty()) << o.str() << " " << lemma << ": " << s.failures.front();
            EXPECT_EQ(s.named_witnesses.size(), s.points.size());
            EXPECT_EQ(s.search_witnesses.size(), s.points.size());
        }
    }
    EXPECT_THROW(run_lemma_suite(fixtures::b_neg(), "fromf2"), std::invalid_argument);
    EXPECT_THROW(run_lemma_suite(fixtures::b_pos(), "fromf3"), std::invalid_argument);
    EXPECT_THROW(run_lemma_suite(fixtures::b_pos(), "fromf9"), std::invalid_argument);
}

TEST(Reproduce, OverrideMustMatchSign)
{
    ReproductionOptions opts;
    opts.which = ReproCase::BNeg;
    opts.orbit_override = fixtures::b_pos();
    EXPECT_THROW(reproduce(opts), std::invalid_argument);
    opts.orbit_override = orbit({3, 1, 0, -4});
    EXPECT_THROW(reproduce(opts), std::invalid_argument);
}

TEST(Reproduce, OverrideOrbitPasses)
{
    ReproductionOptions opts;
    opts.which = ReproCase::BPos;
    opts.orbit_override = orbit({5, 1, -6});
    opts.sweep_denominator = 8;
    opts.lemma_denominator = 2;
    const ReproductionReport r = reproduce(opts);
    EXPECT_TRUE(r.passed()) << (r.failing_ids().empty() ? "" : r.failing_ids().front());
    const json j = reproduction_to_json(r);
    EXPECT_EQ(j.at("kind"), "reproduction-report");
    EXPECT_EQ(j.at("summary").at("passed"), true);
    EXPECT_TRUE(check_document(j).ok());
}

TEST(Reproduce, MonotoneChecksPresent)
{
    ReproductionOptions opts;
    opts.which = ReproCase::Monotone;
    opts.sweep_denominator = 8;
    opts.lemma_denominator = 2;
    const ReproductionReport r = reproduce(opts);
    std::vector<std::string> ids;
    for (const auto& c : r.checks) ids.push_back(c.id);
    EXPECT_EQ(ids, (std::vector<std::string>{"lemma-fromf1", "lemma-fromf4", "corollary-candidates",
                                             "monotone-segment-N", "sphere-vertex", "non-smooth-vertex",
                                             "f5-direction-family", "witnesses-revalidate",
                                             "certificates-revalidate"}));
    EXPECT_TRUE(r.passed());
}
