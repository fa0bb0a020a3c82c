#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockshift/word.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace fockshift;

namespace {

// Independent word generator: recursive cartesian product, no odometer.
void oracle_words_rec(int n, std::size_t length, std::vector<int>& acc,
                      std::vector<Word>& out) {
    if (acc.size() == length) {
        out.emplace_back(n, acc);
        return;
    }
    for (int l = 1; l <= n; ++l) {
        acc.push_back(l);
        oracle_words_rec(n, length, acc, out);
        acc.pop_back();
    }
}

std::vector<Word> oracle_words(int n, std::size_t length) {
    std::vector<Word> out;
    std::vector<int> acc;
    oracle_words_rec(n, length, acc, out);
    return out;
}

// Oracle rank: position in the level-by-level listing.
std::size_t oracle_rank(const Word& w) {
    std::size_t rank = 0;
    for (std::size_t len = 0;; ++len) {
        for (const Word& cand : oracle_words(w.alphabet_size(), len)) {
            if (cand == w) return rank;
            ++rank;
        }
    }
}

}  // namespace

TEST_CASE("word construction and validation") {
    CHECK(Word::unit(2).is_unit());
    CHECK(Word::unit(2).length() == 0);
    CHECK(Word(2, {1, 2}).length() == 2);
    CHECK(Word(2, {1, 2}).letter(1) == 2);
    CHECK_THROWS_AS(Word(2, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Word(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Word(0), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
    CHECK(Word::unit(2).str() == "e");
    CHECK(Word::parse(2, "e") == Word::unit(2));
    CHECK(Word(2, {2, 1, 1}).str() == "211");
    CHECK(Word::parse(2, "211") == Word(2, {2, 1, 1}));
    CHECK(Word::parse(2, "2.1.1") == Word(2, {2, 1, 1}));
    CHECK(Word(12, {11, 2}).str() == "11.2");
    CHECK(Word::parse(12, "11.2") == Word(12, {11, 2}));
    CHECK_THROWS_AS(Word::parse(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(2, "0"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(2, "13"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(12, "112"), std::invalid_argument);

    for (std::size_t len = 0; len <= 3; ++len)
        for (const Word& w : enumerate_words(3, len))
            CHECK(Word::parse(3, w.str()) == w);
}

TEST_CASE("concat prefix suffix prepend") {
    const Word u(2, {1, 2});
    const Word v(2, {2, 1});
    CHECK(u.concat(v) == Word(2, {1, 2, 2, 1}));
    CHECK(u.concat(Word::unit(2)) == u);
    CHECK(u.concat(v).prefix(2) == u);
    CHECK(u.concat(v).suffix(2) == v);
    CHECK(u.prepend(2) == Word(2, {2, 1, 2}));
    CHECK_THROWS_AS(u.concat(Word::unit(3)), std::invalid_argument);
    CHECK_THROWS_AS(u.prefix(3), std::out_of_range);
}

TEST_CASE("canonical order is level then lexicographic") {
    std::vector<Word> listed;
    for (std::size_t len = 0; len <= 3; ++len)
        for (const Word& w : enumerate_words(2, len)) listed.push_back(w);
    std::vector<Word> sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == listed);
}

TEST_CASE("count_words_below values") {
    CHECK(count_words_below(2, 2) == 3);
    CHECK(count_words_below(2, 0) == 0);
    CHECK(count_words_below(5, 1) == 1);
    CHECK(count_words_below(3, 3) == 13);
    for (int n = 1; n <= 5; ++n)
        for (std::size_t k = 0; k <= 10; ++k)
            CHECK(count_words_below(n, k + 1) ==
                  static_cast<std::size_t>(n) * count_words_below(n, k) + 1);
}

TEST_CASE("word_index frozen values") {
    CHECK(word_index(Word::unit(2)) == 0);
    CHECK(word_index(Word(2, {1})) == 1);
    CHECK(word_index(Word(2, {2})) == 2);
    CHECK(word_index(Word(2, {2, 1})) == 5);
    CHECK(word_index(Word(2, {2, 1})) == oracle_rank(Word(2, {2, 1})));
}

TEST_CASE("word_index is a bijection per truncation") {
    for (int n = 1; n <= 4; ++n) {
        for (std::size_t max_len = 0; max_len <= 5; ++max_len) {
            if (n == 4 && max_len == 5) continue;  // keep the sweep quick
            std::set<WordIndex> seen;
            std::size_t count = 0;
            for (std::size_t len = 0; len <= max_len; ++len) {
                for (const Word& w : enumerate_words(n, len)) {
                    const WordIndex idx = word_index(w);
                    CHECK(idx < count_words_below(n, max_len + 1));
                    CHECK(seen.insert(idx).second);
                    CHECK(word_at(n, idx) == w);
                    ++count;
                }
            }
            CHECK(seen.size() == count_words_below(n, max_len + 1));
            CHECK(count == seen.size());
        }
    }
}

TEST_CASE("word_index matches the oracle rank") {
    for (std::size_t len = 0; len <= 4; ++len)
        for (const Word& w : enumerate_words(3, len)) CHECK(word_index(w) == oracle_rank(w));
}

TEST_CASE("enumerate_words frozen values") {
    CHECK(enumerate_words(2, 0) == std::vector<Word>{Word::unit(2)});
    CHECK(enumerate_words(2, 2) ==
          std::vector<Word>{Word(2, {1, 1}), Word(2, {1, 2}), Word(2, {2, 1}), Word(2, {2, 2})});
    CHECK(enumerate_words(3, 1) ==
          std::vector<Word>{Word(3, {1}), Word(3, {2}), Word(3, {3})});
    CHECK_THROWS_AS(enumerate_words(0, 1), std::invalid_argument);

    for (int n = 1; n <= 3; ++n)
        for (std::size_t len = 0; len <= 4; ++len)
            CHECK(enumerate_words(n, len) == oracle_words(n, len));
}

TEST_CASE("periodic_decompose frozen values and oracle") {
    auto [u1, v1] = periodic_decompose(Word(2, {2, 1}), 2);
    CHECK(u1 == Word::unit(2));
    CHECK(v1 == Word(2, {2, 1}));

    auto [u2, v2] = periodic_decompose(Word(2, {2, 1, 2}), 2);
    CHECK(u2 == Word(2, {2}));
    CHECK(v2 == Word(2, {1, 2}));

    auto [u3, v3] = periodic_decompose(Word(2, {1, 2, 1, 2, 2}), 3);
    CHECK(u3 == Word(2, {1, 2}));
    CHECK(v3 == Word(2, {1, 2, 2}));

    // Oracle: the split point is unique among all candidates.
    const Word w(2, {1, 2, 1, 2, 2});
    int satisfying = 0;
    for (std::size_t cut = 0; cut <= w.length(); ++cut) {
        const Word u = w.prefix(cut);
        const Word v = w.suffix(w.length() - cut);
        if (u.length() < 3 && v.length() % 3 == 0) {
            ++satisfying;
            CHECK(u == u3);
            CHECK(v == v3);
        }
    }
    CHECK(satisfying == 1);

    CHECK_THROWS_AS(periodic_decompose(w, 0), std::invalid_argument);
}

TEST_CASE("periodic_decompose round trip") {
    for (std::size_t len = 0; len <= 8; ++len) {
        for (const Word& w : enumerate_words(2, len)) {
            for (std::size_t k = 1; k <= 8; ++k) {
                auto [u, v] = periodic_decompose(w, k);
                CHECK(u.concat(v) == w);
                CHECK(u.length() < k);
                CHECK(v.length() % k == 0);
            }
        }
    }
}

TEST_CASE("block_encode frozen values") {
    CHECK(block_encode(Word(2, {1, 1}), 2) == 1);
    CHECK(block_encode(Word(2, {1, 2}), 2) == 2);
    CHECK(block_encode(Word(2, {2, 1}), 2) == 3);
    CHECK(block_encode(Word(2, {2, 2}), 2) == 4);
    CHECK_THROWS_AS(block_encode(Word(2, {1}), 2), std::invalid_argument);
}

TEST_CASE("block_encode is a bijection landing in letter blocks") {
    for (int n = 1; n <= 3; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            std::size_t big = 1;
            for (std::size_t j = 0; j < k; ++j) big *= static_cast<std::size_t>(n);
            std::set<int> seen;
            for (const Word& w : enumerate_words(n, k)) {
                const int code = block_encode(w, k);
                CHECK(code >= 1);
                CHECK(code <= static_cast<int>(big));
                CHECK(seen.insert(code).second);
            }
            CHECK(seen.size() == big);

            // A leading letter i confines the code to the i-th run of N^{k-1}.
            if (k >= 2) {
                const std::size_t run = big / static_cast<std::size_t>(n);
                for (const Word& tail : enumerate_words(n, k - 1)) {
                    for (int i = 1; i <= n; ++i) {
                        const int code = block_encode(tail.prepend(i), k);
                        CHECK(code > static_cast<int>((i - 1) * run));
                        CHECK(code <= static_cast<int>(i * run));
                    }
                }
            }
        }
    }
}

TEST_CASE("block_encode_word frozen values and oracle") {
    CHECK(block_encode_word(Word::unit(2), 2) == Word::unit(4));
    CHECK(block_encode_word(Word(2, {1, 1, 2, 2}), 2) == Word(4, {1, 4}));
    CHECK(block_encode_word(Word(2, {2, 1, 1, 1}), 2) == Word(4, {3, 1}));
    CHECK_THROWS_AS(block_encode_word(Word(2, {1}), 2), std::invalid_argument);

    // Oracle: encode block-by-block with an independent scan.
    const Word w(2, {1, 1, 2, 2});
    std::vector<int> expected;
    for (std::size_t j = 0; j < w.length(); j += 2) {
        int code = 0;
        for (std::size_t t = j; t < j + 2; ++t) code = code * 2 + (w.letter(t) - 1);
        expected.push_back(code + 1);
    }
    CHECK(block_encode_word(w, 2) == Word(4, expected));
}

TEST_CASE("block_decode_word inverts block_encode_word") {
    CHECK(block_decode_word(Word::unit(4), 2, 2) == Word::unit(2));
    CHECK(block_decode_word(Word(4, {4}), 2, 2) == Word(2, {2, 2}));
    CHECK(block_decode_word(Word(4, {1, 4}), 2, 2) == Word(2, {1, 1, 2, 2}));
    CHECK_THROWS_AS(block_decode_word(Word(3, {1}), 2, 2), std::invalid_argument);

    // Search oracle for one decode.
    const Word encoded(4, {1, 4});
    int matches = 0;
    for (const Word& cand : enumerate_words(2, 4)) {
        if (block_encode_word(cand, 2) == encoded) {
            ++matches;
            CHECK(cand == block_decode_word(encoded, 2, 2));
        }
    }
    CHECK(matches == 1);

    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t len = 0; len <= 6; len += k)
            for (const Word& w : enumerate_words(2, len))
                CHECK(block_decode_word(block_encode_word(w, k), 2, k) == w);
}
