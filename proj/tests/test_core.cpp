#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

#include "gdm/errors.hpp"
#include "gdm/population.hpp"
#include "gdm/population_io.hpp"
#include "test_util.hpp"

using namespace gdm;

TEST_CASE("landscape invariants") {
    CHECK_THROWS_AS(Landscape({{1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Landscape({{2.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Landscape(std::vector<Interval>{}), std::invalid_argument);

    const Landscape ls = Landscape::cube(-1.0, 1.0, 2);
    CHECK(ls.dimension() == 2);
    CHECK(ls.volume() == doctest::Approx(4.0));
    CHECK(ls.width(0) == doctest::Approx(2.0));
}

TEST_CASE("make_population validates rows") {
    const Landscape unit = Landscape::cube(0.0, 1.0, 2);

    SUBCASE("corner individuals are valid (closed box)") {
        const auto pop = make_population({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, unit);
        CHECK(pop.size() == 4);
        CHECK(pop.dimension() == 2);
        CHECK(pop.gene(2, 1) == 1.0);
    }
    SUBCASE("interior singleton") {
        const auto pop = make_population({{0.5, 0.5}}, unit);
        CHECK(pop.size() == 1);
    }
    SUBCASE("out-of-bounds gene reports individual and gene") {
        try {
            make_population({{2.0, 0.0}}, unit);
            FAIL("expected a throw");
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            CHECK(msg.find("individual 1") != std::string::npos);
            CHECK(msg.find("gene 1") != std::string::npos);
        }
    }
    SUBCASE("dimensionality mismatch") {
        CHECK_THROWS_AS(make_population({{0.5, 0.5, 0.5}}, unit), std::invalid_argument);
        CHECK_THROWS_AS(make_population({}, unit), std::invalid_argument);
    }
    SUBCASE("bound tolerance is 1e-12 absolute") {
        CHECK_NOTHROW(make_population({{1.0 + 1e-13, 0.5}}, unit));
        CHECK_THROWS_AS(make_population({{1.0 + 1e-11, 0.5}}, unit), std::invalid_argument);
    }
}

TEST_CASE("uniform_population builds the exact grid") {
    const Landscape ls = Landscape::cube(-1.0, 1.0, 2);

    SUBCASE("10x10 grid over [-1,1]^2") {
        const auto pop = uniform_population(ls, 100);
        REQUIRE(pop.size() == 100);
        // axis spacing 2/9, both bounds included, g distinct values per axis
        for (int k = 0; k < 2; ++k) {
            std::set<double> values;
            for (int i = 0; i < 100; ++i) values.insert(pop.gene(i, k));
            CHECK(values.size() == 10);
            CHECK(*values.begin() == -1.0);
            CHECK(*values.rbegin() == 1.0);
            auto it = values.begin();
            const double first = *it++;
            CHECK(*it - first == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
        }
        // lexicographic row order, no duplicate rows
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < 100; ++i) rows.push_back({pop.gene(i, 0), pop.gene(i, 1)});
        CHECK(std::is_sorted(rows.begin(), rows.end()));
        CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
    }
    SUBCASE("g=2 grid is the four corners") {
        const auto pop = uniform_population(Landscape::cube(0.0, 1.0, 2), 4);
        std::set<std::pair<double, double>> got;
        for (int i = 0; i < 4; ++i) got.insert({pop.gene(i, 0), pop.gene(i, 1)});
        CHECK(got == std::set<std::pair<double, double>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    }
    SUBCASE("N must be a perfect n-th power") {
        CHECK_THROWS_AS(uniform_population(ls, 5), std::invalid_argument);
        CHECK_THROWS_AS(uniform_population(ls, 1), std::invalid_argument);
        CHECK_THROWS_AS(uniform_population(Landscape::cube(0.0, 1.0, 3), 100),
                        std::invalid_argument);
        CHECK_NOTHROW(uniform_population(Landscape::cube(0.0, 1.0, 3), 27));
    }
}

TEST_CASE("population CSV round trip is exact") {
    const Landscape ls = Landscape::cube(-5.0, 5.0, 3);
    SplitMix64 rng(99);
    const auto pop = test_util::random_population(rng, 60, ls);

    const auto path = std::filesystem::temp_directory_path() / "gdm_roundtrip.csv";
    save_population(pop, path.string());
    const auto loaded = load_population(path.string(), ls);
    std::filesystem::remove(path);

    REQUIRE(loaded.size() == pop.size());
    for (int i = 0; i < pop.size(); ++i)
        for (int k = 0; k < pop.dimension(); ++k)
            CHECK(loaded.gene(i, k) == pop.gene(i, k)); // 17 significant digits round-trip
}

TEST_CASE("population CSV parsing errors") {
    const Landscape ls = Landscape::cube(0.0, 1.0, 2);

    SUBCASE("empty data section") {
        CHECK_THROWS_WITH_AS(parse_population_csv("x1,x2\n", ls),
                             "population must contain at least one individual", ParseError);
    }
    SUBCASE("header arity mismatch") {
        CHECK_THROWS_AS(parse_population_csv("x1,x2,x3\n0.1,0.2,0.3\n", ls), ParseError);
    }
    SUBCASE("header names checked") {
        CHECK_THROWS_AS(parse_population_csv("a,b\n0.1,0.2\n", ls), ParseError);
    }
    SUBCASE("bad token reports the line number") {
        try {
            parse_population_csv("x1,x2\n0.1,0.2\n0.3,oops\n", ls);
            FAIL("expected a throw");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("row arity reports the line number") {
        try {
            parse_population_csv("x1,x2\n0.1\n", ls);
            FAIL("expected a throw");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("crlf input accepted") {
        const auto pop = parse_population_csv("x1,x2\r\n0.25,0.75\r\n", ls);
        CHECK(pop.gene(0, 1) == 0.75);
    }
}
