#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "dyck/colours.hpp"
#include "dyck/enumeration.hpp"

using namespace dyck;

namespace {

std::vector<ColourSystem> structural_systems() {
    return {ColourSystem::catalan(),          ColourSystem::trivial(),
            ColourSystem::bounded_ascent(1),  ColourSystem::bounded_ascent(2),
            ColourSystem::bounded_ascent(3),  ColourSystem::fibonacci(1),
            ColourSystem::fibonacci(2),       ColourSystem::fibonacci(3),
            ColourSystem::fibonacci_free(),   ColourSystem::schroeder()};
}

/// The closed form that goes with each system, where one exists.
Integer closed_form(const ColourSystem& system, int n) {
    switch (system.kind()) {
    case ColourSystem::Kind::Catalan: return count_catalan_coloured(n);
    case ColourSystem::Kind::BoundedAscent: return count_bounded(n, system.bound());
    case ColourSystem::Kind::Fibonacci: return count_fibonacci(n, system.bound());
    case ColourSystem::Kind::FibonacciFree: return count_little_schroeder(n);
    case ColourSystem::Kind::Schroeder: return count_schroeder_coloured(n);
    case ColourSystem::Kind::Trivial: return catalan_number(n);
    case ColourSystem::Kind::Custom: break;
    }
    throw std::logic_error("no closed form");
}

} // namespace

TEST_CASE("colour streams agree with colour counts") {
    for (const ColourSystem& system : structural_systems()) {
        for (int k = 0; k <= 6; ++k) {
            const std::vector<Colour> colours = system.colours_of(k);
            CHECK(Integer(colours.size()) == system.colour_count(k));
            std::set<std::string> distinct;
            for (const Colour& c : colours) {
                distinct.insert(colour_str(c));
                CHECK(system.contains(k, c));
            }
            CHECK(distinct.size() == colours.size());
        }
    }
}

TEST_CASE("colour sets: worked examples") {
    const std::vector<Colour> catalan2 = ColourSystem::catalan().colours_of(2);
    REQUIRE(catalan2.size() == 2);
    CHECK(colour_str(catalan2[0]) == "UUDD");
    CHECK(colour_str(catalan2[1]) == "UDUD");

    const std::vector<Colour> schroeder1 = ColourSystem::schroeder().colours_of(1);
    REQUIRE(schroeder1.size() == 2);
    CHECK(colour_str(schroeder1[0]) == "UD");
    CHECK(colour_str(schroeder1[1]) == "L");

    CHECK(ColourSystem::fibonacci_free().colours_of(3).size() == 4);
    CHECK(ColourSystem::fibonacci_free().colour_count(3) == 4);
}

TEST_CASE("the trivial system has one colour, the alternating path") {
    const ColourSystem trivial = ColourSystem::trivial();
    for (int k = 0; k <= 5; ++k) {
        const std::vector<Colour> colours = trivial.colours_of(k);
        REQUIRE(colours.size() == 1);
        std::string expected;
        for (int i = 0; i < k; ++i) expected += "UD";
        CHECK(colour_str(colours[0]) == expected);
    }
}

TEST_CASE("custom systems only count") {
    const ColourSystem custom = ColourSystem::custom({1, 2, 3});
    CHECK(custom.colour_count(0) == 1);
    CHECK(custom.colour_count(2) == 3);
    CHECK(custom.colour_count(9) == 3); // repeats the last weight
    CHECK_THROWS_AS(custom.colours_of(2), CountOnlySystem);
    CHECK_THROWS_AS(enumerate_coloured(2, custom), CountOnlySystem);
    CHECK_THROWS_AS(ColourSystem::custom({}), InvalidBound);
    CHECK_THROWS_AS(ColourSystem::custom({0, 1}), InvalidBound);
}

TEST_CASE("coloured enumeration: worked examples") {
    const std::vector<ColouredDyckPath> catalan2 = enumerate_coloured(2, ColourSystem::catalan());
    REQUIRE(catalan2.size() == 3);
    CHECK(str(catalan2[0]) == "UUDD;UUDD");
    CHECK(str(catalan2[1]) == "UUDD;UDUD");
    CHECK(str(catalan2[2]) == "UDUD;UD,UD");

    CHECK(enumerate_coloured(0, ColourSystem::catalan()).size() == 1);
    CHECK(str(enumerate_coloured(0, ColourSystem::catalan())[0]).empty());

    CHECK(enumerate_coloured(2, ColourSystem::schroeder()).size() == 10);
}

TEST_CASE("brute-force counts: worked examples") {
    CHECK(count_coloured_bruteforce(3, ColourSystem::catalan()) == 12); // 5+2+2+2+1
    for (int n = 0; n <= 8; ++n) {
        CHECK(count_coloured_bruteforce(n, ColourSystem::trivial()) == catalan_number(n));
    }
    CHECK(count_coloured_bruteforce(2, ColourSystem::fibonacci_free()) == 3); // 2 + 1
}

TEST_CASE("enumeration, brute force, series and closed forms all agree") {
    for (const ColourSystem& system : structural_systems()) {
        const std::vector<Integer> weights = system.weight_sequence(8);
        const Series series = solve_master(weights, 8);
        for (int n = 0; n <= 8; ++n) {
            const Integer brute = count_coloured_bruteforce(n, system);
            CHECK(brute == series.coeff(n));
            CHECK(brute == closed_form(system, n));
            if (n <= 5) {
                CHECK(Integer(enumerate_coloured(n, system).size()) == brute);
            }
        }
    }
}

TEST_CASE("custom weights drive the same pipeline") {
    // all-ones weights written as a short list
    const ColourSystem ones = ColourSystem::custom({1, 1, 1});
    const Series series = solve_master(ones.weight_sequence(6), 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(series.coeff(n) == catalan_number(n));
        CHECK(count_coloured_bruteforce(n, ones) == catalan_number(n));
    }
    const ColourSystem only_empty = ColourSystem::custom({1, 0});
    for (int n = 1; n <= 5; ++n) CHECK(count_coloured_bruteforce(n, only_empty) == 0);
}

TEST_CASE("coloured text form round trips bit-exactly") {
    const ColourSystem catalan = ColourSystem::catalan();
    const ColouredDyckPath cp = parse_coloured("UUDUDD;UDUD,UD", catalan);
    CHECK(cp.base.str() == "UUDUDD");
    REQUIRE(cp.colours.size() == 2);
    CHECK(colour_str(cp.colours[0]) == "UDUD");
    CHECK(colour_str(cp.colours[1]) == "UD");
    CHECK(str(cp) == "UUDUDD;UDUD,UD");

    for (int n = 0; n <= 4; ++n) {
        for (const ColouredDyckPath& p : enumerate_coloured(n, ColourSystem::schroeder())) {
            CHECK(parse_coloured(str(p), ColourSystem::schroeder()) == p);
        }
    }
}

TEST_CASE("coloured parsing rejects mismatches") {
    const ColourSystem catalan = ColourSystem::catalan();
    CHECK_THROWS_AS(parse_coloured("UUDD", catalan), WrongColourSystem);       // missing colour
    CHECK_THROWS_AS(parse_coloured("UUDD;UD", catalan), WrongColourSystem);    // wrong size
    CHECK_THROWS_AS(parse_coloured("UUDD;UDUD,UD", catalan), WrongColourSystem);
    CHECK_THROWS_AS(parse_coloured("UUDD;ULD", catalan), UnknownLetter);       // L is not Dyck
    CHECK_THROWS_AS(parse_coloured("UUDD;UUDD", ColourSystem::bounded_ascent(1)),
                    WrongColourSystem); // 2-ascent colour above the bound
    CHECK(parse_coloured("UUDD;ULD", ColourSystem::schroeder()).colours.size() == 1);
    CHECK_THROWS_AS(parse_coloured("UUDD;UUDD", ColourSystem::custom({1, 1})), CountOnlySystem);
}

TEST_CASE("coloured decomposition splits colours with their parts") {
    const ColourSystem catalan = ColourSystem::catalan();
    const ColouredDyckPath cp = parse_coloured("UUDUDDUD;UDUD,UD,UD", catalan);
    const ColouredDecomposition dec = primary_decompose(cp);
    CHECK(dec.base_size == 2);
    CHECK(colour_str(dec.base_colour) == "UDUD");
    REQUIRE(dec.parts.size() == 2);
    CHECK(str(dec.parts[0]) == "UD;UD");
    CHECK(str(dec.parts[1]) == "UD;UD");
    CHECK(recombine(dec.base_size, dec.base_colour, dec.parts) == cp);

    for (const ColouredDyckPath& p : enumerate_coloured(4, catalan)) {
        if (p.base.empty()) continue;
        const ColouredDecomposition d = primary_decompose(p);
        CHECK(recombine(d.base_size, d.base_colour, d.parts) == p);
    }
}
