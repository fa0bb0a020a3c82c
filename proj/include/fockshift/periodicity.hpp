// Period-k weight functions: the finite table of weights at word length < k
// that determines the whole function, period detection on sampled weights,
// the divisor-containment check at weight level, and weighted-tree export.

#ifndef FOCKSHIFT_PERIODICITY_HPP
#define FOCKSHIFT_PERIODICITY_HPP

#include "fockshift/shift.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fockshift {

// Nonnegative weights {lambda(i, u) : |u| < k}, one per (letter, short word).
// A period-k weight function is determined by such a table: the value at
// (i, w) reads the entry at (i, u) where w = uv, |u| = |w| mod k.
class WeightTop {
public:
    using Table = std::map<std::pair<int, Word>, Rational>;

    WeightTop(int alphabet_size, std::size_t period, Table table);

    int alphabet_size() const { return alphabet_size_; }
    std::size_t period() const { return period_; }
    const Table& table() const { return table_; }
    const Rational& value(int letter, const Word& u) const;

private:
    int alphabet_size_;
    std::size_t period_;
    Table table_;
};

WeightFunction periodic_weight(const WeightTop& top);

// Smallest k <= k_max whose periodicity predicate holds at every sampled
// word, or nullopt. The sample must reach depth 2*k_max.
std::optional<std::size_t> detect_period(const WeightFunction& samples, std::size_t k_max);

// Checks that a period-n1 weight function also satisfies the period-n2
// predicate, exhaustively through the given depth. Requires n1 | n2.
bool verify_containment(const WeightTop& top, std::size_t n2,
                        std::optional<std::size_t> depth = std::nullopt);

// True iff the weight tuples read along the N^k root-to-depth-k paths of the
// weighted tree are pairwise distinct.
bool distinct_path_tuples(const WeightTop& top);

struct FockTreeEdge {
    Word from;
    Word to;
    Rational label;
};

// Weighted rooted tree on {w : |w| <= depth}; the edge for letter i leaves w
// toward iw. Children are ordered by letter.
struct FockTree {
    int alphabet_size = 0;
    std::size_t depth = 0;
    std::vector<Word> vertices;  // level order, lexicographic within a level
    std::vector<FockTreeEdge> edges;  // grouped by source vertex, letter ascending
};

FockTree build_tree(const WeightFunction& weights, std::size_t depth);

// DOT digraph, byte-stable: vertex ids are serialized words, edge labels
// exact rational strings.
std::string to_dot(const FockTree& tree);

}  // namespace fockshift

#endif  // FOCKSHIFT_PERIODICITY_HPP
