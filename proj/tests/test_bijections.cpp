#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyck/bijections.hpp"
#include "dyck/enumeration.hpp"

using namespace dyck;

namespace {

NCTree tree(int n, std::vector<std::pair<int, int>> edges) {
    return NCTree(n, std::move(edges));
}

ColouredDyckPath coloured(const std::string& text, const ColourSystem& system) {
    return parse_coloured(text, system);
}

const ColourSystem kCatalan = ColourSystem::catalan();
const ColourSystem kSchroeder = ColourSystem::schroeder();
const ColourSystem kFree = ColourSystem::fibonacci_free();

} // namespace

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

TEST_CASE("theta: worked examples") {
    CHECK(theta(DyckPath::parse("UD")).tree() == tree(2, {{1, 2}}));
    CHECK(theta(DyckPath::parse("UUDD")).tree() == tree(3, {{1, 2}, {1, 3}}));
    CHECK(theta(DyckPath::parse("UDUD")).tree() == tree(3, {{1, 2}, {2, 3}}));
    CHECK(theta(DyckPath{}).tree() == tree(1, {}));
}

TEST_CASE("theta: roundtrip, image validity and bijectivity onto NCO trees") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> images;
        const auto domain = enumerate_dyck(n);
        for (const DyckPath& p : domain) {
            const NCOTree t = theta(p);
            CHECK(t.vertex_count() == n + 1);
            CHECK(theta_inv(t) == p);
            images.insert(t.to_json());
        }
        CHECK(images.size() == domain.size());

        // surjectivity against the independent oracle
        std::set<std::string> oracle;
        for (const NCOTree& t : enumerate_nco_trees(n + 1)) oracle.insert(t.to_json());
        CHECK(images == oracle);
    }
}

TEST_CASE("theta_inv rejects non-NCO trees at the type boundary") {
    CHECK_THROWS_AS(NCOTree(tree(3, {{1, 3}, {2, 3}})), NotAnNCOTree);
    CHECK_THROWS_AS(NCOTree(tree(4, {{1, 3}, {2, 4}, {1, 2}})), NotAnNCOTree);
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

TEST_CASE("phi: worked examples exhaust the trees on three vertices") {
    CHECK(phi(coloured("UUDD;UUDD", kCatalan)) == tree(3, {{1, 2}, {1, 3}}));
    CHECK(phi(coloured("UUDD;UDUD", kCatalan)) == tree(3, {{1, 2}, {2, 3}}));
    CHECK(phi(coloured("UDUD;UD,UD", kCatalan)) == tree(3, {{1, 3}, {2, 3}}));
    CHECK(phi(coloured("", kCatalan)) == tree(1, {}));
    // on pyramids phi is theta of the colour
    for (const DyckPath& c : enumerate_dyck(3)) {
        ColouredDyckPath pyramid;
        pyramid.base = DyckPath::parse("UUUDDD");
        pyramid.colours = {Colour(c)};
        CHECK(phi(pyramid) == theta(c).tree());
    }
}

TEST_CASE("phi: roundtrip and bijectivity onto NC trees") {
    for (int n = 0; n <= 4; ++n) {
        std::set<std::string> images;
        const auto domain = enumerate_coloured(n, kCatalan);
        for (const ColouredDyckPath& p : domain) {
            const NCTree t = phi(p);
            CHECK(t.vertex_count() == n + 1);
            CHECK(t.validate().ok());
            CHECK(phi_inv(t) == p);
            images.insert(t.to_json());
        }
        CHECK(images.size() == domain.size());

        std::set<std::string> oracle;
        for (const NCTree& t : enumerate_nc_trees(n + 1)) oracle.insert(t.to_json());
        CHECK(images == oracle);
    }
}

TEST_CASE("phi rejects malformed inputs") {
    CHECK_THROWS_AS(phi_inv(tree(4, {{1, 3}, {2, 4}, {1, 2}})), NotAnNCTree);
    CHECK_THROWS_AS(phi(coloured("UD;L", kSchroeder)), WrongColourSystem);
    ColouredDyckPath missing;
    missing.base = DyckPath::parse("UD");
    CHECK_THROWS_AS(phi(missing), WrongColourSystem);
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

TEST_CASE("psi: worked examples") {
    CHECK(psi(DyckPath::parse("UD")) == NonCrossingPartition(1, {{1}}));
    CHECK(psi(DyckPath::parse("UUDDUD")) == NonCrossingPartition(3, {{1, 2}, {3}}));
    CHECK(psi(DyckPath::parse("UUDUDD")) == NonCrossingPartition(3, {{1, 3}, {2}}));
    CHECK(psi(DyckPath{}) == NonCrossingPartition(0, {}));
}

TEST_CASE("psi: roundtrip and bijectivity onto non-crossing partitions") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> images;
        const auto domain = enumerate_dyck(n);
        for (const DyckPath& p : domain) {
            const NonCrossingPartition q = psi(p);
            CHECK(q.points() == n);
            CHECK(q.validate().ok());
            CHECK(psi_inv(q) == p);
            images.insert(q.to_json());
        }
        CHECK(images.size() == domain.size());

        std::set<std::string> oracle;
        for (const auto& q : enumerate_nc_partitions(n)) oracle.insert(q.to_json());
        CHECK(images == oracle);
    }
    CHECK_THROWS_AS(psi_inv(NonCrossingPartition(4, {{1, 3}, {2, 4}})), InvalidPartition);
}

// ---------------------------------------------------------------------------
// rho
// ---------------------------------------------------------------------------

TEST_CASE("rho: worked examples") {
    CHECK(rho(coloured("UD;UD", kCatalan), 1).partition() ==
          NonCrossingPartition(2, {{1, 2}}));
    CHECK(rho(coloured("UUDD;UDUD", kCatalan), 1).partition() ==
          NonCrossingPartition(4, {{1, 2}, {3, 4}}));
    CHECK(rho(coloured("UUDD;UUDD", kCatalan), 2).partition() ==
          NonCrossingPartition(4, {{1, 2, 3, 4}}));
    CHECK(rho(coloured("UDUD;UD,UD", kCatalan), 1).partition() ==
          NonCrossingPartition(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("rho: roundtrip, validity, counts and surjectivity") {
    for (int m = 1; m <= 3; ++m) {
        const ColourSystem system = ColourSystem::bounded_ascent(m);
        for (int n = 0; n <= 4; ++n) {
            std::set<std::string> images;
            const auto domain = enumerate_coloured(n, system);
            for (const ColouredDyckPath& p : domain) {
                const EvenPartition e = rho(p, m);
                CHECK(e.points() == 2 * n);
                CHECK(e.validate().ok());
                CHECK(rho_inv(e) == p);
                images.insert(e.to_json());
            }
            CHECK(Integer(images.size()) == count_bounded(n, m));

            std::set<std::string> oracle;
            for (const auto& e : enumerate_even_partitions(2 * n, m)) oracle.insert(e.to_json());
            CHECK(images == oracle);
        }
    }
}

TEST_CASE("rho: each k-ascent contributes blocks totalling 2k points") {
    for (const ColouredDyckPath& p : enumerate_coloured(4, ColourSystem::bounded_ascent(2))) {
        // the image block sizes are exactly the doubled psi-block sizes of
        // the colours, since insertion only relabels
        std::multiset<int> expected;
        for (const Colour& c : p.colours) {
            for (const auto& block : psi(std::get<DyckPath>(c)).blocks()) {
                expected.insert(2 * static_cast<int>(block.size()));
            }
        }
        std::multiset<int> actual;
        for (const auto& block : rho(p, 2).blocks()) actual.insert(static_cast<int>(block.size()));
        CHECK(actual == expected);
    }
}

TEST_CASE("rho rejects bound violations and crossings") {
    CHECK_THROWS_AS(rho(coloured("UUDD;UUDD", kCatalan), 1), WrongColourSystem);
    CHECK_THROWS_AS(rho_inv(EvenPartition(NonCrossingPartition(4, {{1, 3}, {2, 4}}), 1)),
                    InvalidPartition);
    CHECK_THROWS_AS(rho_inv(EvenPartition(NonCrossingPartition(2, {{1}, {2}}), 1)),
                    InvalidPartition);
}

// ---------------------------------------------------------------------------
// sigma
// ---------------------------------------------------------------------------

TEST_CASE("sigma: worked examples") {
    CHECK(sigma(coloured("UD;UD", kFree), 1) == Dissection(1, {}, 3));
    CHECK(sigma(coloured("UUUDDD;UDUUDD", kFree), 2) == Dissection(3, {{0, 2}}, 4));
    CHECK(sigma(coloured("UUDD;UUDD", kFree), 2) == Dissection(2, {}, 4));
    // cell sizes 3 and 4 for the pentagon example
    const auto cells = sigma(coloured("UUUDDD;UDUUDD", kFree), 2).cells();
    std::multiset<std::size_t> sizes;
    for (const auto& cell : cells) sizes.insert(cell.size());
    CHECK(sizes == std::multiset<std::size_t>{3, 4});
}

TEST_CASE("sigma: roundtrip, cell bounds, counts and surjectivity") {
    for (int m = 1; m <= 3; ++m) {
        const ColourSystem system = ColourSystem::fibonacci(m);
        for (int n = 0; n <= 4; ++n) {
            std::set<std::string> images;
            const auto domain = enumerate_coloured(n, system);
            for (const ColouredDyckPath& p : domain) {
                const Dissection d = sigma(p, m);
                CHECK(d.k() == n);
                CHECK(d.validate().ok());
                for (const auto& cell : d.cells()) {
                    CHECK(cell.size() >= 3);
                    CHECK(cell.size() <= static_cast<std::size_t>(m) + 2);
                }
                CHECK(sigma_inv(d) == p);
                images.insert(d.to_json());
            }
            CHECK(Integer(images.size()) == count_fibonacci(n, m));

            std::set<std::string> oracle;
            for (const auto& d : enumerate_dissections(n, m + 2)) oracle.insert(d.to_json());
            CHECK(images == oracle);
        }
    }
}

TEST_CASE("sigma: pyramid cells match the colour's pyramid sizes") {
    for (const ColouredDyckPath& p : enumerate_coloured(4, kFree)) {
        // every pyramid of size j in a colour becomes one (j+2)-cell
        std::multiset<int> expected;
        for (const Colour& c : p.colours) {
            const DyckPath& path = std::get<DyckPath>(c);
            std::size_t i = 0;
            const auto& steps = path.steps();
            while (i < steps.size()) {
                std::size_t a = 0;
                while (i + a < steps.size() && steps[i + a] == DyckStep::U) ++a;
                expected.insert(static_cast<int>(a) + 2);
                i += 2 * a;
            }
        }
        std::multiset<int> actual;
        for (const auto& cell : sigma(p).cells()) actual.insert(static_cast<int>(cell.size()));
        CHECK(actual == expected);
    }
}

TEST_CASE("sigma rejects non-pyramid colours and bad dissections") {
    CHECK_THROWS_AS(sigma(coloured("UUUDDD;UUDUDD", kCatalan), 3), WrongColourSystem);
    CHECK_THROWS_AS(sigma_inv(Dissection(4, {{0, 2}, {1, 3}}, 6)), InvalidDissection);
}

// ---------------------------------------------------------------------------
// fib_to_ls
// ---------------------------------------------------------------------------

TEST_CASE("fib_to_ls: worked examples") {
    CHECK(fib_to_ls(coloured("UUDD;UUDD", kFree)).str() == "ULD");
    CHECK(fib_to_ls(coloured("UUDD;UDUD", kFree)).str() == "UUDD");
    CHECK(fib_to_ls(coloured("UUUDDD;UDUUDD", kFree)).str() == "UULDD");
    CHECK(fib_to_ls(coloured("UDUD;UD,UD", kFree)).str() == "UDUD");
    CHECK(fib_to_ls(coloured("", kFree)).empty());
}

TEST_CASE("fib_to_ls: bijection onto little Schroeder paths") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> images;
        const auto domain = enumerate_coloured(n, kFree);
        for (const ColouredDyckPath& p : domain) {
            const LittleSchroederPath l = fib_to_ls(p);
            CHECK(l.semilength() == n);
            CHECK_FALSE(l.path().has_level_on_axis());
            CHECK(ls_to_fib(l) == p);
            images.insert(l.str());
        }
        CHECK(Integer(images.size()) == count_little_schroeder(n));

        std::set<std::string> oracle;
        for (const auto& l : enumerate_little_schroeder(n)) oracle.insert(l.str());
        CHECK(images == oracle);
    }
}

TEST_CASE("fib_to_ls rejects non-pyramid colours") {
    CHECK_THROWS_AS(fib_to_ls(coloured("UUUDDD;UUDUDD", kCatalan)), WrongColourSystem);
}

// ---------------------------------------------------------------------------
// schroeder_to_t
// ---------------------------------------------------------------------------

TEST_CASE("schroeder_to_t: worked examples") {
    CHECK(schroeder_to_t(coloured("UD;L", kSchroeder)).str() == "GD");
    CHECK(schroeder_to_t(coloured("UD;UD", kSchroeder)).str() == "HDD");
    CHECK(schroeder_to_t(coloured("UUDD;LL", kSchroeder)).str() == "GGDD");
    CHECK(schroeder_to_t(coloured("UUDD;ULD", kSchroeder)).str() == "HGDDD");
}

TEST_CASE("schroeder_to_t: bijection onto T paths") {
    for (int n = 0; n <= 4; ++n) {
        std::set<std::string> images;
        const auto domain = enumerate_coloured(n, kSchroeder);
        for (const ColouredDyckPath& p : domain) {
            const TPath t = schroeder_to_t(p);
            CHECK(t.semilength() == n);
            CHECK(t_to_schroeder(t) == p);
            images.insert(t.str());
        }
        CHECK(Integer(images.size()) == count_schroeder_coloured(n));

        std::set<std::string> oracle;
        for (const auto& t : enumerate_t_paths_oracle(n)) oracle.insert(t.str());
        CHECK(images == oracle);
    }
}

TEST_CASE("colours without L map to T paths without G and back") {
    for (int n = 0; n <= 4; ++n) {
        for (const ColouredDyckPath& p : enumerate_coloured(n, kCatalan)) {
            // lift the Dyck colours into the Schroeder system
            ColouredDyckPath lifted;
            lifted.base = p.base;
            for (const Colour& c : p.colours) {
                lifted.colours.emplace_back(
                    SchroederPath::parse(std::get<DyckPath>(c).str()));
            }
            const TPath t = schroeder_to_t(lifted);
            for (TStep s : t.steps()) CHECK(s != TStep::G);
            CHECK(t_to_schroeder(t) == lifted);
        }
        // conversely, G-free T paths pull back to L-free colours
        for (const TPath& t : enumerate_t_paths_oracle(n)) {
            if (t.str().find('G') != std::string::npos) continue;
            for (const Colour& c : t_to_schroeder(t).colours) {
                CHECK(colour_str(c).find('L') == std::string::npos);
            }
        }
    }
}

TEST_CASE("schroeder_to_t rejects Dyck-variant colours") {
    CHECK_THROWS_AS(schroeder_to_t(coloured("UD;UD", kCatalan)), WrongColourSystem);
}

// ---------------------------------------------------------------------------
// size laws across all maps
// ---------------------------------------------------------------------------

TEST_CASE("size laws") {
    const DyckPath p = DyckPath::parse("UUDUDD");
    CHECK(theta(p).vertex_count() == p.semilength() + 1);
    CHECK(psi(p).points() == p.semilength());

    const ColouredDyckPath cp = coloured("UUDUDD;UDUD,UD", kCatalan);
    CHECK(phi(cp).vertex_count() == 4);
    CHECK(rho(cp, 2).points() == 6);

    const ColouredDyckPath fp = coloured("UUDUDD;UDUD,UD", kFree);
    CHECK(sigma(fp).k() == 3);
    CHECK(fib_to_ls(fp).semilength() == 3);

    const ColouredDyckPath sp = coloured("UUDUDD;ULD,L", kSchroeder);
    CHECK(schroeder_to_t(sp).semilength() == 3);
}
