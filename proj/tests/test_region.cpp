#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vrsqueeze/errors.hpp"
#include "vrsqueeze/region.hpp"

using namespace vrsqueeze;
using testing::reference_rates;
using testing::timing_for;

TEST_CASE("classify_region")
{
    CHECK(classify_region(timing_for(2.1)) == Region::MinimumResourceLimited);
    CHECK(classify_region(timing_for(0.9)) == Region::UnconditionalTradeoff);
    CHECK(classify_region(timing_for(1.5)) == Region::ConditionalTradeoff);
}

TEST_CASE("region boundaries are closed on the right")
{
    CHECK(classify_region(timing_for(1.0)) == Region::UnconditionalTradeoff);
    CHECK(classify_region(timing_for(2.0)) == Region::ConditionalTradeoff);
    CHECK(classify_region(timing_for(std::nextafter(2.0, 3.0))) == Region::MinimumResourceLimited);
    CHECK(classify_region(timing_for(std::nextafter(1.0, 2.0))) == Region::ConditionalTradeoff);
}

TEST_CASE("classify_case")
{
    CHECK(classify_case(reference_rates(), timing_for(1.5)) == OperatingCase::Case1_ResourceLimited);
    CHECK(classify_case({7e8, 7e8}, timing_for(2.0)) == OperatingCase::Case2_Tradeoff);
    CHECK(classify_case({7e8, 7e8}, timing_for(1.2)) == OperatingCase::Case2_Tradeoff);
    CHECK(classify_case(reference_rates(), timing_for(0.9)) == OperatingCase::Case2_Tradeoff);
    CHECK_THROWS_AS((void)classify_case({0, 0}, timing_for(1.0)), DegenerateRates);
}

TEST_CASE("efficient_condition")
{
    CHECK_FALSE(efficient_condition(reference_rates(), timing_for(1.5)));
    CHECK(efficient_condition({5e8, 5e8}, timing_for(1.5)));
    CHECK(efficient_condition({5e8, 5e8}, timing_for(2.0)));
    CHECK_FALSE(efficient_condition({5e8, 5e8}, timing_for(2.2)));
    CHECK_THROWS_AS((void)efficient_condition({0, 0}, timing_for(1.0)), DegenerateRates);
}

TEST_CASE("assess sets the limiting resource only when resource-limited")
{
    const auto computing = assess(reference_rates(), timing_for(1.5));
    REQUIRE(computing.limiting_resource.has_value());
    CHECK(*computing.limiting_resource == Resource::Computing);

    const auto comm = assess({4e8, 9e8}, timing_for(2.1));
    REQUIRE(comm.limiting_resource.has_value());
    CHECK(*comm.limiting_resource == Resource::Communication);

    CHECK_FALSE(assess(reference_rates(), timing_for(0.9)).limiting_resource.has_value());
    CHECK_FALSE(assess({5e8, 5e8}, timing_for(3.0)).limiting_resource.has_value());
}

TEST_CASE("property: region and case relations")
{
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> tcc(0.01, 4.0);
    std::uniform_real_distribution<double> lambda(0.01, 100.0);
    for (int i = 0; i < 5000; ++i) {
        const ResourceRates r{testing::log_uniform(rng, 1e6, 1e10), testing::log_uniform(rng, 1e6, 1e10)};
        const auto t = timing_for(tcc(rng));
        const Region region = classify_region(t);
        const OperatingCase c = classify_case(r, t);
        const bool efficient = efficient_condition(r, t);

        if (region == Region::UnconditionalTradeoff) {
            CHECK(c == OperatingCase::Case2_Tradeoff);
        } else if (region == Region::MinimumResourceLimited) {
            CHECK(c == OperatingCase::Case1_ResourceLimited);
        } else {
            CHECK((c == OperatingCase::Case2_Tradeoff) == efficient);
        }

        const double k = lambda(rng);
        const ResourceRates scaled{r.c_com_equiv * k, r.c_cpt * k};
        CHECK(classify_case(scaled, t) == c);
        CHECK(efficient_condition(scaled, t) == efficient);
    }
}

TEST_CASE("sweep cells")
{
    const VideoParams video = reference_video();
    const std::vector<double> half{5e8};
    const auto one = sweep(half, timing_for(0.9), video);
    REQUIRE(one.size() == 1);
    CHECK(one[0].verdict.op_case == OperatingCase::Case2_Tradeoff);
    CHECK(one[0].s_cc_star == doctest::Approx(0.37676).epsilon(1e-5));

    const std::vector<double> zero{0.0};
    const auto z = sweep(zero, timing_for(1.5), video);
    REQUIRE(z.size() == 1);
    CHECK(z[0].s_cc_star == 0.0);
    CHECK_FALSE(z[0].verdict.limiting_resource.has_value());

    const std::vector<double> axis{1e8, 2e8, 3e8};
    const auto grid = sweep(axis, timing_for(1.5), video);
    REQUIRE(grid.size() == 9);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const auto& cell = grid[i * 3 + j];
            CHECK(cell.c_com_equiv == axis[i]);
            CHECK(cell.c_cpt == axis[j]);
            const auto opt = optimize_durations({axis[i], axis[j]}, timing_for(1.5), video);
            CHECK(cell.s_cc_star == opt.s_cc_star);
            CHECK(cell.t_cpt_star == opt.plan.t_cpt);
            CHECK(cell.t_com_star == opt.plan.t_com);
        }
    }
}

TEST_CASE("linear_axis")
{
    const auto a = linear_axis(0.0, 1e9, 101);
    REQUIRE(a.size() == 101);
    CHECK(a.front() == 0.0);
    CHECK(a[37] == 3.7e8);
    CHECK(a.back() == 1e9);
    CHECK(linear_axis(2e8, 9e8, 1) == std::vector<double>{2e8});
    CHECK_THROWS_AS((void)linear_axis(0.0, 1.0, 0), InvalidSweep);
    CHECK_THROWS_AS((void)linear_axis(1.0, 0.0, 3), InvalidSweep);
}
