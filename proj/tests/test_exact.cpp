#include "support.hpp"

#include <dcp/constructive.hpp>
#include <dcp/errors.hpp>
#include <dcp/exact.hpp>
#include <dcp/families.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace dcp;
using dcp::testing::config;
using dcp::testing::connected_graphs_up_to;

namespace {
const auto dom = GoalPredicate::domination();
const auto cover = GoalPredicate::full_cover();

auto all_goals() -> std::vector<GoalPredicate>
{
    return {dom, cover, GoalPredicate::subversion(1), GoalPredicate::subversion(2)};
}

auto binomial(long n, long k) -> long
{
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}
}

TEST_CASE("is_solvable examples")
{
    auto p4 = generate(family::Path{4});
    auto r = is_solvable(p4, config({5, 0, 0, 0}), dom);
    REQUIRE(r.solvable());
    auto v = verify_certificate(p4, *r.certificate, dom);
    CHECK(v.ok);

    auto b2 = generate(family::BinaryTree{2});
    Configuration c{b2.order()};
    c.set(3, 1);
    c.set(6, 10);
    r = is_solvable(b2, c, dom);
    REQUIRE(r.solvable());
    CHECK(verify_certificate(b2, *r.certificate, dom).ok);

    auto star = generate(family::Star{5});
    r = is_solvable(star, config({0, 1, 1, 1, 0}), dom);
    CHECK(r.verdict == Verdict::unsolvable);
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("is_solvable reports budget exhaustion separately")
{
    auto p5 = generate(family::Path{5});
    auto r = is_solvable(p5, config({30, 0, 0, 0, 0}), cover, {.budget = 3});
    CHECK(r.verdict == Verdict::budget_exceeded);
    CHECK_FALSE(r.certificate.has_value());
    CHECK(is_solvable(p5, config({30, 0, 0, 0, 0}), cover).verdict == Verdict::unsolvable);
    CHECK(is_solvable(p5, config({31, 0, 0, 0, 0}), cover).solvable());
}

TEST_CASE("is_solvable input checks")
{
    auto k2 = build_graph(2, {{0, 1}});
    CHECK_THROWS_AS((void)is_solvable(k2, config({1, 0, 0}), dom), PreconditionError);
    CHECK_THROWS_AS((void)is_solvable(k2, config({256, 0}), dom), PreconditionError);
}

TEST_CASE("pebbling_value examples")
{
    auto k2 = build_graph(2, {{0, 1}});
    auto r = pebbling_value(k2, dom);
    CHECK(r.status == ValueStatus::exact);
    CHECK(r.value == 1);

    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        auto star = generate(family::Star{k + 1});
        r = pebbling_value(star, dom);
        CHECK(r.status == ValueStatus::exact);
        CHECK(r.value == k);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->size() == k - 1);
        CHECK(is_solvable(star, *r.witness, dom).verdict == Verdict::unsolvable);
    }
}

// Reference values from tools/reference_oracle.py (plain breadth-first search
// over every configuration of every size, no pruning); frozen here.
TEST_CASE("oracle values match the reference table")
{
    struct Row
    {
        const char * g6;
        long psi, lambda, omega1, omega2;
    };
    const Row table[] = {
        {"A_", 1, 3, 1, 0},    // K2
        {"Bg", 2, 7, 1, 1},    // P3
        {"Ch", 5, 15, 2, 1},   // P4
        {"DhC", 9, 31, 4, 2},  // P5
        {"Cl", 3, 9, 1, 1},    // C4
        {"Dhc", 4, 13, 3, 1},  // C5
        {"C~", 1, 7, 1, 1},    // K4
        {"Cs", 3, 11, 1, 1},   // K1,3
        {"Ds_", 4, 15, 1, 1},  // K1,4
        {"D|s", 2, 11, 1, 1},  // hub + 4-cycle
        {"E|fG", 3, 15, 2, 1}, // hub + 5-cycle
        {"C]", 3, 9, 1, 1},    // K2,2
        {"Dvw", 2, 11, 1, 1},  // K1,2,2
    };
    for (auto & row : table) {
        CAPTURE(row.g6);
        auto g = parse_graph6(row.g6);
        CHECK(pebbling_value(g, dom).value == row.psi);
        CHECK(pebbling_value(g, cover).value == row.lambda);
        CHECK(lambda_stacking(g).value == row.lambda);
        CHECK(pebbling_value(g, GoalPredicate::subversion(1)).value == row.omega1);
        CHECK(pebbling_value(g, GoalPredicate::subversion(2)).value == row.omega2);
    }
}

TEST_CASE("lambda_stacking examples")
{
    CHECK(lambda_stacking(build_graph(2, {{0, 1}})).value == 3);
    auto p3 = lambda_stacking(generate(family::Path{3}));
    CHECK(p3.value == 7);
    CHECK(p3.witness == config({6, 0, 0}));
    CHECK(lambda_stacking(generate(family::Star{5})).value == 15);
    CHECK(lambda_stacking(build_graph(1, {})).value == 1);
}

TEST_CASE("max_unsolvable_witness examples")
{
    auto star = generate(family::Star{5});
    CHECK(max_unsolvable_witness(star, dom, 3) == config({0, 0, 1, 1, 1}));

    auto w8 = generate(family::Wheel{8});
    CHECK(max_unsolvable_witness(w8, GoalPredicate::subversion(1), 3) == config({0, 0, 0, 0, 0, 0, 1, 1, 1}));

    CHECK_FALSE(max_unsolvable_witness(generate(family::Complete{5}), dom, 1).has_value());
    CHECK_THROWS_AS((void)max_unsolvable_witness(star, dom, -1), PreconditionError);
}

TEST_CASE("colex enumeration")
{
    for (int n = 1; n <= 5; ++n)
        for (long k = 0; k <= 6; ++k) {
            auto all = configurations_of_size(n, k);
            CHECK(static_cast<long>(all.size()) == binomial(n + k - 1, k));
            for (auto & c : all)
                CHECK(c.size() == k);
        }
    auto three = configurations_of_size(3, 2);
    std::vector<Configuration> expected{config({2, 0, 0}), config({1, 1, 0}), config({0, 2, 0}),
        config({1, 0, 1}), config({0, 1, 1}), config({0, 0, 2})};
    CHECK(three == expected);

    auto last = config({0, 0, 2});
    CHECK_FALSE(next_configuration_colex(last));
    CHECK(last == config({0, 0, 2}));
}

TEST_CASE("witness is the colex-last unsolvable configuration of the last unsolvable level")
{
    for (auto & [g6, g] : connected_graphs_up_to(5, 2))
        for (auto goal : all_goals()) {
            CAPTURE(g6);
            CAPTURE(goal.name());
            auto r = pebbling_value(g, goal);
            REQUIRE(r.status == ValueStatus::exact);
            if (r.value == 0) {
                CHECK_FALSE(r.witness.has_value());
                continue;
            }
            REQUIRE(r.witness.has_value());
            std::optional<Configuration> last;
            for (auto & c : configurations_of_size(g.order(), r.value - 1))
                if (! is_solvable(g, c, goal).solvable())
                    last = c;
            CHECK(r.witness == last);
            for (auto & c : configurations_of_size(g.order(), r.value))
                CHECK(is_solvable(g, c, goal).solvable());
        }
}

TEST_CASE("pointwise monotonicity, order <= 4, sizes <= 5, all goals")
{
    for (auto & [g6, g] : connected_graphs_up_to(4))
        for (auto goal : all_goals())
            for (long k = 0; k <= 5; ++k)
                for (auto & c : configurations_of_size(g.order(), k)) {
                    if (! is_solvable(g, c, goal).solvable())
                        continue;
                    for (Vertex v = 0; v < g.order(); ++v) {
                        auto bigger = c;
                        bigger.add(v, 1);
                        CAPTURE(g6);
                        CAPTURE(format_configuration(bigger));
                        CHECK(is_solvable(g, bigger, goal).solvable());
                    }
                }
}

TEST_CASE("value relations on every connected graph of order <= 5")
{
    for (auto & [g6, g] : connected_graphs_up_to(5)) {
        CAPTURE(g6);
        auto psi = pebbling_value(g, dom).value;
        auto lambda = pebbling_value(g, cover).value;
        CHECK(lambda_stacking(g).value == lambda);
        CHECK(psi <= lambda);
        CHECK(pebbling_value(g, GoalPredicate::subversion(0)).value == psi);
        long previous = psi;
        for (int omega = 1; omega <= g.order(); ++omega) {
            auto value = pebbling_value(g, GoalPredicate::subversion(omega)).value;
            CHECK(value <= previous);
            previous = value;
        }
        // the whole graph fits in one omega-sized component
        CHECK(pebbling_value(g, GoalPredicate::subversion(g.order())).value == 0);
    }
}

TEST_CASE("options do not change the answer")
{
    for (auto & [g6, g] : connected_graphs_up_to(5, 2))
        for (auto goal : {dom, GoalPredicate::subversion(1)}) {
            CAPTURE(g6);
            auto plain = pebbling_value(g, goal);
            auto parallel = pebbling_value(g, goal, {.jobs = 3});
            CHECK(parallel.value == plain.value);
            CHECK(parallel.witness == plain.witness);

            ValueOptions symmetric;
            symmetric.symmetry = automorphisms(g);
            CHECK(pebbling_value(g, goal, symmetric).value == plain.value);

            ValueOptions paranoid;
            paranoid.paranoid = true;
            auto checked = pebbling_value(g, goal, paranoid);
            CHECK(checked.value == plain.value);
            CHECK(checked.witness == plain.witness);
        }
}

TEST_CASE("cap and budget outcomes")
{
    auto p5 = generate(family::Path{5});
    ValueOptions capped;
    capped.cap = 4;
    auto r = pebbling_value(p5, dom, capped);
    CHECK(r.status == ValueStatus::cap_reached);
    CHECK(r.value == 5);

    ValueOptions starved;
    starved.budget = 2;
    r = pebbling_value(p5, cover, starved);
    CHECK(r.status == ValueStatus::budget_exceeded);
    CHECK_THROWS_AS((void)max_unsolvable_witness(p5, cover, 30, 2), BudgetExceededError);

    CHECK(default_value_cap(p5, dom) == psi_upper_bound(5, 4));
}

TEST_CASE("is_solvable is invariant under relabelling")
{
    std::mt19937_64 rng{5};
    for (auto & [g6, g] : connected_graphs_up_to(5, 2)) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = g.relabelled(perm);
        for (auto goal : all_goals())
            for (auto & c : configurations_of_size(g.order(), 3)) {
                std::vector<int> moved(g.order());
                for (Vertex v = 0; v < g.order(); ++v)
                    moved[perm[v]] = c[v];
                CHECK(is_solvable(g, c, goal).verdict == is_solvable(h, Configuration{moved}, goal).verdict);
            }
    }
}

TEST_CASE("every oracle certificate verifies")
{
    for (auto & [g6, g] : connected_graphs_up_to(5))
        for (auto goal : all_goals())
            for (long k = 0; k <= 4; ++k)
                for (auto & c : configurations_of_size(g.order(), k)) {
                    auto r = is_solvable(g, c, goal);
                    if (! r.solvable())
                        continue;
                    CAPTURE(g6);
                    CAPTURE(format_configuration(c));
                    CHECK(r.certificate->initial == c);
                    CHECK(verify_certificate(g, *r.certificate, goal).ok);
                    CHECK(static_cast<long>(r.certificate->moves.size()) <= c.size());
                }
}

TEST_CASE("shared memo gives the same verdicts")
{
    auto g = generate(family::Cycle{5});
    SolvabilityMemo memo;
    for (auto & c : configurations_of_size(5, 3)) {
        auto shared = is_solvable(g, c, dom, {.shared_memo = &memo});
        auto alone = is_solvable(g, c, dom);
        CHECK(shared.verdict == alone.verdict);
        if (shared.solvable())
            CHECK(verify_certificate(g, *shared.certificate, dom).ok);
    }
    CHECK(memo.size() > 0);
}
