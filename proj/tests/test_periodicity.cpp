#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockshift/periodicity.hpp"
#include "fockshift/random_gen.hpp"

#include <set>
#include <vector>

using namespace fockshift;

namespace {

WeightTop demo_top() {
    std::map<std::pair<int, Word>, Rational> values;
    values[{1, Word::unit(2)}] = Rational(1);
    values[{2, Word::unit(2)}] = Rational(1);
    values[{1, Word(2, {1})}] = Rational(1, 2);
    values[{2, Word(2, {1})}] = Rational(1, 4);
    values[{1, Word(2, {2})}] = Rational(1, 8);
    values[{2, Word(2, {2})}] = Rational(1, 16);
    return WeightTop(2, 2, values);
}

// Materialize any weight rule as an explicit finite-depth table.
WeightFunction sample_to_depth(const WeightFunction& fn, std::size_t depth) {
    std::map<std::pair<int, Word>, Rational> table;
    for (int i = 1; i <= fn.alphabet_size(); ++i)
        for (std::size_t len = 0; len <= depth; ++len)
            for (const Word& u : enumerate_words(fn.alphabet_size(), len))
                table[{i, u}] = fn(i, u);
    return WeightFunction::from_table(fn.alphabet_size(), depth, std::move(table));
}

// Independent periodicity predicate: dropping one period off the right end of
// the argument never changes the weight.
bool drops_one_period(const WeightFunction& fn, std::size_t k, std::size_t depth) {
    for (std::size_t len = k; len <= depth; ++len) {
        for (const Word& w : enumerate_words(fn.alphabet_size(), len)) {
            const Word shorter = w.prefix(len - k);
            for (int i = 1; i <= fn.alphabet_size(); ++i)
                if (!(fn(i, w) == fn(i, shorter))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("weight top validation") {
    std::map<std::pair<int, Word>, Rational> values;
    values[{1, Word::unit(2)}] = Rational(1);
    CHECK_THROWS_AS(WeightTop(2, 1, values), std::invalid_argument);  // missing letter 2
    CHECK_THROWS_AS(WeightTop(2, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(WeightTop(0, 1, {}), std::invalid_argument);

    values[{2, Word::unit(2)}] = Rational(-1);
    CHECK_THROWS_AS(WeightTop(2, 1, values), std::invalid_argument);  // negative entry

    std::map<std::pair<int, Word>, Rational> deep;
    deep[{1, Word::unit(2)}] = Rational(1);
    deep[{2, Word::unit(2)}] = Rational(1);
    deep[{1, Word(2, {1, 1})}] = Rational(1);  // |u| >= period
    CHECK_THROWS_AS(WeightTop(2, 1, deep), std::invalid_argument);

    const auto top = demo_top();
    CHECK(top.value(1, Word(2, {2})) == Rational(1, 8));
    CHECK_THROWS_AS(top.value(1, Word(2, {1, 1})), std::out_of_range);
}

TEST_CASE("periodic weights repeat the top") {
    const auto weights = periodic_weight(demo_top());
    CHECK(weights.periodic_k() == 2);
    CHECK(!weights.depth().has_value());
    CHECK(weights(1, Word(2, {2, 1})) == Rational(1));
    CHECK(weights(1, Word(2, {2, 1, 2})) == Rational(1, 8));
    CHECK(weights(2, Word::unit(2)) == Rational(1));
    CHECK(weights(2, Word(2, {1, 1, 2, 1})) == Rational(1));
    CHECK(weights(1, Word(2, {1})) == weights(1, Word(2, {1, 2, 2})));
}

TEST_CASE("period detection on constant weights") {
    const auto sample = sample_to_depth(WeightFunction::constant(2, Rational(1, 3)), 4);
    CHECK(detect_period(sample, 2) == 1);
}

TEST_CASE("period detection on the demonstration weights") {
    const auto weights = periodic_weight(demo_top());
    const auto sample = sample_to_depth(weights, 4);
    CHECK(detect_period(sample, 2) == 2);

    // Independent predicate agrees: period 1 fails, period 2 holds.
    CHECK(!drops_one_period(weights, 1, 4));
    CHECK(drops_one_period(weights, 2, 4));

    const auto deep_sample = sample_to_depth(weights, 6);
    CHECK(detect_period(deep_sample, 3) == 2);
}

TEST_CASE("length dependent weights have no short period") {
    const auto depth_fn = WeightFunction(
        2, 6, [](int, const Word& w) { return Rational(1, static_cast<int>(w.length()) + 1); });
    const auto sample = sample_to_depth(depth_fn, 6);
    CHECK(detect_period(sample, 3) == std::nullopt);
}

TEST_CASE("period detection input validation") {
    const auto shallow = sample_to_depth(periodic_weight(demo_top()), 3);
    CHECK_THROWS_AS(detect_period(shallow, 2), std::invalid_argument);  // needs depth 4
    CHECK_THROWS_AS(detect_period(shallow, 0), std::invalid_argument);
    CHECK_THROWS_AS(detect_period(periodic_weight(demo_top()), 2), std::invalid_argument);
}

TEST_CASE("detected period never exceeds the constructed one") {
    std::mt19937_64 rng(424242);
    for (int round = 0; round < 10; ++round) {
        const std::size_t k = 1 + static_cast<std::size_t>(round % 3);
        const auto top = random_top(2, k, rng);
        const auto weights = periodic_weight(top);
        const auto sample = sample_to_depth(weights, 6);
        const auto found = detect_period(sample, 3);
        REQUIRE(found.has_value());
        CHECK(*found <= k);
        CHECK(drops_one_period(weights, *found, 6));
    }
}

TEST_CASE("containment along divisors") {
    CHECK(verify_containment(demo_top(), 2));
    CHECK(verify_containment(demo_top(), 4, 6));
    CHECK(verify_containment(demo_top(), 6));

    std::map<std::pair<int, Word>, Rational> constant;
    constant[{1, Word::unit(2)}] = Rational(2, 3);
    constant[{2, Word::unit(2)}] = Rational(5);
    const WeightTop trivial(2, 1, constant);
    for (std::size_t n2 = 1; n2 <= 5; ++n2) CHECK(verify_containment(trivial, n2));
}

TEST_CASE("containment rejects non-divisors") {
    try {
        verify_containment(demo_top(), 3);
        FAIL("expected an invalid argument error");
    } catch (const std::invalid_argument& err) {
        const std::string what = err.what();
        CHECK(what.find("2") != std::string::npos);
        CHECK(what.find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(verify_containment(demo_top(), 0), std::invalid_argument);
}

TEST_CASE("containment holds for random tops along divisor pairs") {
    std::mt19937_64 rng(515151);
    for (int round = 0; round < 12; ++round) {
        const std::size_t n1 = 1 + static_cast<std::size_t>(round % 3);
        const std::size_t n2 = n1 * (1 + static_cast<std::size_t>(round / 3 % 3));
        const auto top = random_top(2, n1, rng);
        CHECK(verify_containment(top, n2, n2 + 1));
    }
}

TEST_CASE("path tuples of the demonstration weights are distinct") {
    const auto top = demo_top();
    CHECK(distinct_path_tuples(top));

    // The four depth-2 tuples, recomputed by hand from the tree picture.
    std::set<std::vector<Rational>> tuples;
    tuples.insert({Rational(1), Rational(1, 2)});   // path to 11
    tuples.insert({Rational(1), Rational(1, 4)});   // path to 21
    tuples.insert({Rational(1), Rational(1, 8)});   // path to 12
    tuples.insert({Rational(1), Rational(1, 16)});  // path to 22
    CHECK(tuples.size() == 4);

    std::set<std::vector<Rational>> walked;
    const auto weights = periodic_weight(top);
    for (const Word& w : enumerate_words(2, 2)) {
        std::vector<Rational> tuple;
        Word node = Word::unit(2);
        for (std::size_t step = 0; step < 2; ++step) {
            const int letter = w.letter(2 - 1 - step);
            tuple.push_back(weights(letter, node));
            node = node.prepend(letter);
        }
        CHECK(node == w);
        walked.insert(tuple);
    }
    CHECK(walked == tuples);
}

TEST_CASE("repeated path tuples are reported") {
    std::map<std::pair<int, Word>, Rational> values;
    for (int i = 1; i <= 2; ++i) {
        values[{i, Word::unit(2)}] = Rational(1);
        values[{i, Word(2, {1})}] = Rational(1);
        values[{i, Word(2, {2})}] = Rational(1);
    }
    CHECK(!distinct_path_tuples(WeightTop(2, 2, values)));

    std::map<std::pair<int, Word>, Rational> letters;
    letters[{1, Word::unit(2)}] = Rational(1);
    letters[{2, Word::unit(2)}] = Rational(2);
    CHECK(distinct_path_tuples(WeightTop(2, 1, letters)));

    letters[{2, Word::unit(2)}] = Rational(1);
    CHECK(!distinct_path_tuples(WeightTop(2, 1, letters)));
}

TEST_CASE("tree shape by depth") {
    const auto weights = periodic_weight(demo_top());
    const auto t0 = build_tree(weights, 0);
    CHECK(t0.vertices == std::vector<Word>{Word::unit(2)});
    CHECK(t0.edges.empty());

    const auto t1 = build_tree(weights, 1);
    CHECK(t1.vertices == std::vector<Word>{Word::unit(2), Word(2, {1}), Word(2, {2})});
    REQUIRE(t1.edges.size() == 2);
    CHECK(t1.edges[0].to == Word(2, {1}));
    CHECK(t1.edges[1].to == Word(2, {2}));
    CHECK(t1.edges[0].label == Rational(1));

    const auto t2 = build_tree(weights, 2);
    CHECK(t2.vertices.size() == 7);
    CHECK(t2.edges.size() == 6);

    const auto t3 = build_tree(weights, 3);
    CHECK(t3.vertices.size() == 15);
    CHECK(t3.edges.size() == 14);
}

TEST_CASE("tree depth requires defined weights") {
    const auto shallow = sample_to_depth(periodic_weight(demo_top()), 1);
    CHECK(build_tree(shallow, 2).edges.size() == 6);
    CHECK_THROWS_AS(build_tree(shallow, 3), std::invalid_argument);
}

TEST_CASE("dot export is byte stable with exact labels") {
    const auto weights = periodic_weight(demo_top());
    const auto tree = build_tree(weights, 2);
    const std::string dot = to_dot(tree);
    const std::string expected =
        "digraph fock_tree {\n"
        "  \"e\";\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"11\";\n"
        "  \"12\";\n"
        "  \"21\";\n"
        "  \"22\";\n"
        "  \"e\" -> \"1\" [label=\"1\"];\n"
        "  \"e\" -> \"2\" [label=\"1\"];\n"
        "  \"1\" -> \"11\" [label=\"1/2\"];\n"
        "  \"1\" -> \"21\" [label=\"1/4\"];\n"
        "  \"2\" -> \"12\" [label=\"1/8\"];\n"
        "  \"2\" -> \"22\" [label=\"1/16\"];\n"
        "}\n";
    CHECK(dot == expected);
    CHECK(to_dot(build_tree(weights, 2)) == dot);
}
