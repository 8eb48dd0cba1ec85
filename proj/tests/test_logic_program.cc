#include <doctest.h>

#include <random>

#include "axplan/errors.h"
#include "axplan/logic_program.h"
#include "support/program_fixtures.h"
#include "support/random_programs.h"

using namespace axplan;
using namespace axplan::testing;

namespace {

// Independent oracle: search all level maps with values in 1..n.
bool stratification_exists_brute(const LogicProgram &p) {
    int n = p.num_atoms();
    REQUIRE(n <= 5);
    std::vector<int> levels(n, 1);
    while (true) {
        if (is_stratification(p, levels))
            return true;
        int i = 0;
        while (i < n && levels[i] == n) {
            levels[i] = 1;
            ++i;
        }
        if (i == n)
            return false;
        ++levels[i];
    }
}

} // namespace

TEST_CASE("reduct keeps unblocked rules and strips negative bodies") {
    LogicProgram p1 = make_p1();
    Interp m = interp_of(p1, {"a", "c"});
    LogicProgram r = reduct(p1, m);
    REQUIRE(r.rules().size() == 2);
    CHECK(r.to_text() == "a.\nc :- a.\n");

    LogicProgram r_empty = reduct(p1, interp_of(p1, {}));
    CHECK(r_empty.rules().size() == 3);
    CHECK_FALSE(r_empty.has_negation());
}

TEST_CASE("reduct of a negation-free program is the program itself") {
    LogicProgram p;
    int a = p.add_atom("a");
    int b = p.add_atom("b");
    p.add_fact(a);
    p.add_rule(b, {a}, {});
    for (int mask = 0; mask < 4; ++mask) {
        Interp m{(mask & 1) != 0, (mask & 2) != 0};
        CHECK(reduct(p, m).to_text() == p.to_text());
    }
}

TEST_CASE("least model propagates facts through positive rules") {
    LogicProgram p;
    int a = p.add_atom("a");
    int b = p.add_atom("b");
    int c = p.add_atom("c");
    int d = p.add_atom("d");
    p.add_fact(a);
    p.add_rule(b, {a}, {});
    p.add_rule(c, {b, d}, {});
    Interp m = least_model(p);
    CHECK(m == Interp{true, true, false, false});

    p.add_rule(d, {}, {c});
    CHECK_THROWS_AS(least_model(p), NotNegationFree);
}

TEST_CASE("answer sets of the choice program") {
    LogicProgram p1 = make_p1();
    CHECK(is_answer_set(p1, interp_of(p1, {"a", "c"})));
    CHECK(is_answer_set(p1, interp_of(p1, {"b"})));
    CHECK_FALSE(is_answer_set(p1, interp_of(p1, {})));
    CHECK_FALSE(is_answer_set(p1, interp_of(p1, {"a"})));
    CHECK_FALSE(is_answer_set(p1, interp_of(p1, {"a", "b", "c"})));

    auto all = enumerate_answer_sets(p1);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == interp_of(p1, {"a", "c"}));
    CHECK(all[1] == interp_of(p1, {"b"}));
}

TEST_CASE("supported models need not be stable") {
    LogicProgram p2 = make_p2();
    Interp bc = interp_of(p2, {"b", "c"});
    CHECK(is_supported(p2, bc));
    CHECK(is_model(p2, bc));
    CHECK_FALSE(is_answer_set(p2, bc));
    CHECK_FALSE(level_ranking_exists(p2, bc));

    Interp a = interp_of(p2, {"a"});
    CHECK(is_supported(p2, a));
    CHECK(is_answer_set(p2, a));
    CHECK(level_ranking_exists(p2, a));

    auto all = enumerate_answer_sets(p2);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == a);
}

TEST_CASE("level ranking preconditions") {
    LogicProgram p1 = make_p1();
    CHECK_THROWS_AS(level_ranking_exists(p1, interp_of(p1, {"c"})), NotSupported);
}

TEST_CASE("stratification of the even-loop program does not exist") {
    CHECK_FALSE(find_stratification(make_p1()).has_value());
}

TEST_CASE("stratification of the positive-loop program") {
    LogicProgram p2 = make_p2();
    auto levels = find_stratification(p2);
    REQUIRE(levels.has_value());
    CHECK(is_stratification(p2, *levels));
    CHECK((*levels)[p2.atom("a")] == 2);
    CHECK((*levels)[p2.atom("b")] == 1);
    CHECK((*levels)[p2.atom("c")] == 1);

    CHECK(perfect_model(p2) == interp_of(p2, {"a"}));
    CHECK_THROWS_AS(perfect_model(make_p1()), NotStratified);
}

TEST_CASE("dependency graph and rule classification") {
    LogicProgram p2 = make_p2();
    int a = p2.atom("a"), b = p2.atom("b"), c = p2.atom("c");
    DependencyGraph dg = dependency_graph(p2);
    CHECK(dg.edge_pairs() == std::vector<std::pair<int, int>>{{b, c}, {c, b}});
    REQUIRE(dg.sccs.size() == 2);
    std::vector<std::vector<int>> parts = dg.sccs;
    std::sort(parts.begin(), parts.end());
    CHECK(parts == std::vector<std::vector<int>>{{a}, {b, c}});
    CHECK(dg.same_scc(b, c));
    CHECK_FALSE(dg.same_scc(a, b));

    RuleClasses ca = rule_classes(p2, dg, a);
    CHECK(ca.def == std::vector<int>{0});
    CHECK(ca.ext == std::vector<int>{0});
    CHECK(ca.internal.empty());

    RuleClasses cb = rule_classes(p2, dg, b);
    CHECK(cb.def == std::vector<int>{1});
    CHECK(cb.internal == std::vector<int>{1});
    CHECK(internal_support_set(p2, dg, b, 1) == std::vector<int>{c});

    RuleClasses cc = rule_classes(p2, dg, c);
    CHECK(cc.def == std::vector<int>{2});
    CHECK(cc.internal == std::vector<int>{2});
    CHECK(internal_support_set(p2, dg, c, 2) == std::vector<int>{b});

    DependencyGraph dg1 = dependency_graph(make_p1());
    LogicProgram p1 = make_p1();
    CHECK(dg1.edge_pairs() ==
          std::vector<std::pair<int, int>>{{p1.atom("c"), p1.atom("a")}});
    CHECK(dg1.sccs.size() == 3);
}

TEST_CASE("debug text round trip shape") {
    CHECK(make_p2().to_text() == "a :- not b.\nb :- c.\nc :- b.\n");
}

TEST_CASE("enumeration cap") {
    LogicProgram p;
    for (int i = 0; i < 21; ++i)
        p.add_atom("x" + std::to_string(i));
    CHECK_THROWS_AS(enumerate_answer_sets(p), TooLarge);
}

TEST_CASE("property: answer sets are exactly supported models with rankings") {
    std::mt19937 rng(20240817);
    ProgramShape shape;
    shape.num_atoms = 7;
    shape.num_rules = 9;
    for (int trial = 0; trial < 60; ++trial) {
        LogicProgram p = random_program(rng, shape);
        for (uint64_t mask = 0; mask < (uint64_t{1} << shape.num_atoms); ++mask) {
            Interp m(shape.num_atoms, false);
            for (int i = 0; i < shape.num_atoms; ++i)
                m[i] = (mask >> i) & 1;
            bool stable = is_answer_set(p, m);
            bool certified = is_supported(p, m) && level_ranking_exists(p, m);
            if (stable != certified) {
                CAPTURE(trial);
                CAPTURE(p.to_text());
                REQUIRE(stable == certified);
            }
        }
    }
}

TEST_CASE("property: stratified programs have the perfect model as unique answer set") {
    std::mt19937 rng(7);
    ProgramShape shape;
    shape.num_atoms = 6;
    shape.num_rules = 8;
    shape.stratified = true;
    for (int trial = 0; trial < 80; ++trial) {
        LogicProgram p = random_program(rng, shape);
        auto levels = find_stratification(p);
        REQUIRE(levels.has_value());
        Interp pm = perfect_model(p);
        auto all = enumerate_answer_sets(p);
        REQUIRE(all.size() == 1);
        CHECK(all[0] == pm);

        RoundedModel rounded = perfect_model_with_rounds(p);
        CHECK(rounded.model == pm);
        DependencyGraph dg = dependency_graph(p);
        for (int a = 0; a < p.num_atoms(); ++a) {
            CHECK(rounded.rounds[a] >= 0);
            CHECK(rounded.rounds[a] <
                  static_cast<int>(dg.sccs[dg.scc_index[a]].size()));
        }
    }
}

TEST_CASE("property: find_stratification agrees with brute-force search") {
    std::mt19937 rng(99);
    ProgramShape shape;
    shape.num_atoms = 4;
    shape.num_rules = 6;
    shape.max_body = 2;
    for (int trial = 0; trial < 200; ++trial) {
        LogicProgram p = random_program(rng, shape);
        bool found = find_stratification(p).has_value();
        bool brute = stratification_exists_brute(p);
        if (found != brute) {
            CAPTURE(p.to_text());
            REQUIRE(found == brute);
        }
        if (found)
            CHECK(is_stratification(p, *find_stratification(p)));
    }
}

TEST_CASE("property: least model is monotone in added facts") {
    std::mt19937 rng(4242);
    ProgramShape shape;
    shape.allow_negation = false;
    for (int trial = 0; trial < 50; ++trial) {
        LogicProgram p = random_program(rng, shape);
        Interp base = least_model(p);
        LogicProgram extended = p;
        extended.add_fact(trial % shape.num_atoms);
        Interp bigger = least_model(extended);
        for (int a = 0; a < p.num_atoms(); ++a)
            if (base[a])
                CHECK(bigger[a]);
    }
}
