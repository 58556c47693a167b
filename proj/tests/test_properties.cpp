#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace {

constexpr std::size_t cases = 1000;

void expect_ok(const props::Result& r) {
    EXPECT_GE(r.cases, cases);
    EXPECT_TRUE(r.ok()) << r.failures << " failing case(s); first: " << r.first_failure;
}

} // namespace

TEST(Properties, RoundTripIngestion) { expect_ok(props::round_trip_ingestion(cases, 1)); }
TEST(Properties, TokenizationIdempotence) { expect_ok(props::tokenization_idempotence(cases, 2)); }
TEST(Properties, StatsAdditivity) { expect_ok(props::stats_additivity(cases, 3)); }
TEST(Properties, TruncationIdempotence) { expect_ok(props::truncation_idempotence(cases, 4)); }
TEST(Properties, FindingLocalityUnderShuffle) { expect_ok(props::locality_under_shuffle(cases, 5)); }
TEST(Properties, ExitStatusPurity) { expect_ok(props::exit_status_purity(cases, 6)); }

TEST(Oracle, PipelineCountsMatchNaiveCounter) {
    const auto r = props::oracle_equivalence(100, 1000);
    EXPECT_EQ(r.cases, 100u);
    EXPECT_TRUE(r.ok()) << r.failures << " mismatching corpora; first: " << r.first_failure;
}
