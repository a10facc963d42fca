#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "qseries/etaq.hpp"

using namespace qseries;

namespace {

void check_expansion(const TruncatedSeries &s, const std::map<std::size_t, long> &nonzero)
{
    for (std::size_t i = 0; i < s.order(); ++i) {
        const auto it = nonzero.find(i);
        const long want = it == nonzero.end() ? 0 : it->second;
        CHECK_MESSAGE(s[i] == want, "index " << i << " got " << s[i].get_str());
    }
}

} // namespace

TEST_CASE("parse_spec normalizes")
{
    const auto b = parse_spec("9^3*3^-1");
    REQUIRE(b.factors().size() == 2);
    CHECK(b.factors()[0] == EtaFactor{3, -1});
    CHECK(b.factors()[1] == EtaFactor{9, 3});
    CHECK(b.offset() == 1);

    const auto a = parse_spec("3^8");
    CHECK(a.factors() == std::vector<EtaFactor>{{3, 8}});
    CHECK(a.offset() == 1);

    CHECK(parse_spec("3^4 * 3^4") == a);
    CHECK(parse_spec("  3 ^ +8 ") == a);
    CHECK(parse_spec("1^24").offset() == 1);
    CHECK(parse_spec("1^24*2^1*2^-1") == parse_spec("1^24"));
}

TEST_CASE("parse_spec errors")
{
    auto position_of = [](const char *text) -> std::size_t {
        try {
            parse_spec(text);
        } catch (const SpecError &e) {
            return e.position();
        }
        FAIL("no error for " << text);
        return 0;
    };
    CHECK(position_of("3^") == 2);
    CHECK(position_of("3*8") == 1);
    CHECK(position_of("3^8 x") == 4);
    CHECK(position_of("3^8*") == 4);
    CHECK(position_of("0^24") == 0);
    CHECK(position_of("") == 0);
    CHECK(position_of("^8") == 0);
    CHECK(position_of("3^1") == std::string::npos);     // mod 24
    CHECK(position_of("3^4*3^-4") == std::string::npos); // empty after merge
    CHECK_THROWS_WITH_AS(parse_spec("3^1"), doctest::Contains("not divisible by 24"), SpecError);
}

TEST_CASE("render round-trips")
{
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 200) {
        std::vector<EtaFactor> factors;
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < terms; ++i) {
            factors.push_back({1 + rng() % 30, static_cast<std::int64_t>(rng() % 41) - 20});
        }
        try {
            const auto spec = EtaQuotientSpec::from_factors(factors);
            CHECK(parse_spec(render(spec)) == spec);
            ++checked;
        } catch (const SpecError &) {
            // mod-24 rejections are expected for most random draws
        }
    }
    CHECK(render(parse_spec("9^3*3^-1")) == "3^-1*9^3");
}

TEST_CASE("expand the named forms to order 29")
{
    check_expansion(expand(parse_spec("9^3*3^-1"), 29),
                    {{1, 1}, {4, 1}, {7, 2}, {13, 2}, {16, 1}, {19, 2}, {25, 1}, {28, 2}});
    check_expansion(expand(parse_spec("3^8"), 29),
                    {{1, 1}, {4, -8}, {7, 20}, {13, -70}, {16, 64}, {19, 56}, {25, -125}, {28, -160}});
    check_expansion(expand(parse_spec("3^2*9^2"), 29),
                    {{1, 1}, {4, -2}, {7, -1}, {13, 5}, {16, 4}, {19, -7}, {25, -5}, {28, 2}});
}

TEST_CASE("expand below the offset is all zeros")
{
    const auto z = expand(parse_spec("3^8"), 1);
    CHECK(z.order() == 1);
    CHECK(z[0] == 0);
    CHECK(expand(parse_spec("1^48"), 2) == TruncatedSeries(2));
    CHECK_THROWS_AS(expand(parse_spec("1^-24"), 5), std::domain_error);
}

TEST_CASE("expand reindexes the x-series onto q^{3n+1}")
{
    const std::size_t order = 301;
    const std::size_t x_order = (order - 1) / 3 + 1;

    const auto f9 = oracle::naive_product(x_order, 8);
    auto c3 = oracle::naive_product(x_order, 3, 3);
    oracle::divide_by_product(c3, 1);
    const auto c = oracle::naive_mul(oracle::naive_product(x_order, 2), oracle::naive_product(x_order, 2, 3));

    const auto a_exp = expand(named_form(FormId::A).spec, order);
    const auto b_exp = expand(named_form(FormId::B).spec, order);
    const auto c_exp = expand(named_form(FormId::C).spec, order);
    for (std::size_t i = 0; i < order; ++i) {
        if (i % 3 != 1) {
            CHECK(sgn(a_exp[i]) == 0);
            CHECK(sgn(b_exp[i]) == 0);
            CHECK(sgn(c_exp[i]) == 0);
            continue;
        }
        const std::size_t n = i / 3;
        CHECK(a_exp[i] == f9[n]);
        CHECK(b_exp[i] == c3[n]);
        CHECK(c_exp[i] == c[n]);
    }
}

TEST_CASE("named forms")
{
    const auto &a = named_form(FormId::A);
    CHECK(render(a.spec) == "3^8");
    CHECK(a.weight == 4);
    CHECK(a.level == 9);
    CHECK(a.offset == 1);

    const auto &c = named_form(FormId::C);
    CHECK(c.spec == parse_spec("3^2*9^2"));
    CHECK(c.weight == 2);
    CHECK(c.level == 27);

    const auto &b = named_form(FormId::B);
    CHECK(b.spec == parse_spec("9^3*3^-1"));
    CHECK(b.level == 27);
    CHECK(b.offset == 1);

    for (const FormId id : kAllForms) {
        CHECK(named_form(id).spec.offset() == named_form(id).offset);
    }
    CHECK(parse_form_id("b") == FormId::B);
    CHECK_THROWS_AS(parse_form_id("D"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_id("AB"), std::invalid_argument);
}
