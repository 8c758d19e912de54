#include "support.hpp"

#include <dcp/errors.hpp>
#include <dcp/families.hpp>
#include <dcp/pebbling.hpp>

#include <doctest.h>

#include <random>

using namespace dcp;
using dcp::testing::config;
using dcp::testing::connected_graphs_up_to;

namespace {
auto p4() -> Graph { return generate(family::Path{4}); }
auto star5() -> Graph { return generate(family::Star{5}); }
}

TEST_CASE("configuration basics")
{
    auto c = config({5, 0, 0, 0});
    CHECK(c.size() == 5);
    CHECK(c.support() == VertexSet::single(0));
    c.add(2, 3);
    c.set(0, 1);
    CHECK(c.size() == 4);
    CHECK(c == config({1, 0, 3, 0}));
    CHECK(Configuration::stacked(3, 2, 4) == config({0, 0, 4}));
    CHECK_THROWS_AS(config({1, -1}), PreconditionError);
    CHECK(ConfigurationHash{}(config({1, 0})) != ConfigurationHash{}(config({0, 1})));
}

TEST_CASE("configuration text form")
{
    CHECK(parse_configuration("5,0,0,0") == config({5, 0, 0, 0}));
    CHECK(parse_configuration(" 1, 2 ,3 ") == config({1, 2, 3}));
    CHECK(format_configuration(config({0, 1, 1, 1, 0})) == "0,1,1,1,0");
    CHECK_THROWS_AS((void)parse_configuration(""), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("1,,2"), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("1,-2"), ParseError);
    CHECK_THROWS_AS((void)parse_configuration("1,a"), ParseError);
}

TEST_CASE("apply_move examples")
{
    CHECK(apply_move(p4(), config({5, 0, 0, 0}), {0, 1}) == config({3, 1, 0, 0}));
    auto k2 = build_graph(2, {{0, 1}});
    CHECK(apply_move(k2, config({2, 0}), {0, 1}) == config({0, 1}));
    CHECK_THROWS_AS((void)apply_move(p4(), config({1, 0, 0, 0}), {0, 1}), IllegalMoveError);
    CHECK_THROWS_AS((void)apply_move(p4(), config({4, 0, 0, 0}), {0, 2}), IllegalMoveError);
    CHECK_THROWS_AS((void)apply_move(p4(), config({4, 0, 0, 0}), {0, 0}), IllegalMoveError);
    CHECK_THROWS_AS((void)apply_move(p4(), config({4, 0, 0, 0}), {0, 7}), IllegalMoveError);
}

TEST_CASE("satisfies examples")
{
    auto dom = GoalPredicate::domination();
    CHECK(satisfies(p4(), config({0, 1, 0, 1}), dom));
    CHECK_FALSE(satisfies(star5(), config({0, 1, 1, 1, 0}), dom));
    CHECK(satisfies(star5(), config({1, 1, 1, 1, 1}), GoalPredicate::full_cover()));
    CHECK_FALSE(satisfies(star5(), config({1, 1, 1, 1, 0}), GoalPredicate::full_cover()));

    // P4 with nothing: one component of four undominated vertices
    CHECK_FALSE(satisfies(p4(), config({0, 0, 0, 0}), GoalPredicate::subversion(3)));
    CHECK(satisfies(p4(), config({0, 0, 0, 0}), GoalPredicate::subversion(4)));
    CHECK(satisfies(p4(), config({1, 0, 0, 0}), GoalPredicate::subversion(2)));
    CHECK_FALSE(satisfies(p4(), config({1, 0, 0, 0}), GoalPredicate::subversion(1)));
    CHECK_THROWS_AS((void)GoalPredicate::subversion(-1), PreconditionError);
    CHECK_THROWS_AS((void)satisfies(p4(), config({1, 0}), dom), PreconditionError);
}

TEST_CASE("goal names")
{
    CHECK(GoalPredicate::domination().name() == "dcp");
    CHECK(GoalPredicate::full_cover().name() == "cover");
    CHECK(GoalPredicate::subversion(2).name() == "subversion(2)");
}

TEST_CASE("Subversion(0) agrees with Domination and Subversion is monotone in omega, order <= 6")
{
    for (auto & [g6, g] : connected_graphs_up_to(6)) {
        CAPTURE(g6);
        for (std::uint64_t bits = 0; bits <= g.vertices().bits(); ++bits) {
            VertexSet s{bits};
            CHECK(support_satisfies(g, s, GoalPredicate::subversion(0)) ==
                support_satisfies(g, s, GoalPredicate::domination()));
            for (int omega = 0; omega < g.order(); ++omega)
                if (support_satisfies(g, s, GoalPredicate::subversion(omega)))
                    CHECK(support_satisfies(g, s, GoalPredicate::subversion(omega + 1)));
        }
    }
}

TEST_CASE("satisfies is invariant under automorphisms of star and wheel")
{
    std::mt19937_64 rng{11};
    for (auto g : {star5(), generate(family::Wheel{6})}) {
        auto autos = automorphisms(g);
        std::uniform_int_distribution<int> count{0, 2};
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> counts(g.order());
            for (auto & x : counts)
                x = count(rng);
            Configuration c{counts};
            for (auto & perm : autos) {
                std::vector<int> moved(g.order());
                for (Vertex v = 0; v < g.order(); ++v)
                    moved[perm[v]] = counts[v];
                for (auto goal : {GoalPredicate::domination(), GoalPredicate::full_cover(),
                         GoalPredicate::subversion(1), GoalPredicate::subversion(2)})
                    CHECK(satisfies(g, c, goal) == satisfies(g, Configuration{moved}, goal));
            }
        }
    }
}

TEST_CASE("pairing number")
{
    CHECK(pairing_number(config({5, 0, 0, 0})) == HalfInteger{4});
    CHECK(pairing_number(config({5, 0, 0, 0})).to_string() == "2");
    CHECK(pairing_number(config({1, 1, 0, 1})) == HalfInteger{0});
    CHECK(pairing_number(config({2, 0, 0})).to_string() == "1/2");
    CHECK(pairing_number(config({4, 2})).to_string() == "2");
    CHECK(HalfInteger{5}.ceil() == 3);
    CHECK(HalfInteger{4}.ceil() == 2);
    CHECK(disjoint_pairs(config({5, 1, 2})) == 3);
}

TEST_CASE("clumping number")
{
    CHECK(clumping_number(config({5, 0, 0, 0}), 3) == 4);
    CHECK(clumping_number(config({9, 0, 0}), 4) == 8);
    CHECK(clumping_number(config({4, 4, 1, 0}), 4) == 0);
    CHECK(clumping_number(config({2, 2, 2}), 3) == 0);
    CHECK_THROWS_AS((void)clumping_number(config({5}), 2), PreconditionError);
}

TEST_CASE("single moves change size by one, pairing by at most 1, clumping by at most 2^(d-2)")
{
    std::mt19937_64 rng{3};
    for (auto & [g6, g] : connected_graphs_up_to(6, 2)) {
        std::uniform_int_distribution<int> count{0, 6};
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> counts(g.order());
            for (auto & x : counts)
                x = count(rng);
            Configuration c{counts};
            for (auto [u, v] : g.edges())
                for (auto m : {PebblingMove{u, v}, PebblingMove{v, u}}) {
                    if (c[m.from] < 2)
                        continue;
                    auto next = apply_move(g, c, m);
                    CHECK(next.size() == c.size() - 1);
                    CHECK(pairing_number(c).twice - pairing_number(next).twice <= 2);
                    for (int d = 3; d <= 5; ++d)
                        CHECK(clumping_number(c, d) - clumping_number(next, d) <= (1L << (d - 2)));
                }
        }
    }
}

TEST_CASE("replay")
{
    Certificate cert{config({5, 0, 0, 0}), {{0, 1}, {0, 1}, {1, 2}}};
    auto r = replay(p4(), cert);
    CHECK(r.legal);
    CHECK(r.final == config({1, 0, 1, 0}));

    cert.moves.push_back({2, 3});
    r = replay(p4(), cert);
    CHECK_FALSE(r.legal);
    CHECK(r.failed_step == 3u);
    CHECK(r.final == config({1, 0, 1, 0}));
}

TEST_CASE("certificate JSON round trip")
{
    Certificate cert{config({5, 0, 0, 0}), {{0, 1}, {0, 1}, {1, 2}}};
    auto text = certificate_to_json(cert);
    CHECK(text == R"({"initial":[5,0,0,0],"moves":[[0,1],[0,1],[1,2]]})");
    auto back = certificate_from_json(text);
    CHECK(back.initial == cert.initial);
    CHECK(back.moves == cert.moves);

    CHECK_THROWS_AS((void)certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS((void)certificate_from_json(R"({"initial":[1],"moves":[[0]]})"), ParseError);
    CHECK_THROWS_AS((void)certificate_from_json(R"({"moves":[]})"), ParseError);
}
