#include "fockshift/periodicity.hpp"

#include <memory>
#include <set>
#include <sstream>

namespace fockshift {

WeightTop::WeightTop(int alphabet_size, std::size_t period, Table table)
    : alphabet_size_(alphabet_size), period_(period), table_(std::move(table)) {
    if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be at least 1");
    if (period_ < 1) throw std::invalid_argument("period must be at least 1");
    const std::size_t expected =
        static_cast<std::size_t>(alphabet_size_) * count_words_below(alphabet_size_, period_);
    if (table_.size() != expected)
        throw std::invalid_argument("weight top has " + std::to_string(table_.size()) +
                                    " entries, expected " + std::to_string(expected));
    for (const auto& [key, value] : table_) {
        const auto& [letter, u] = key;
        if (letter < 1 || letter > alphabet_size_)
            throw std::invalid_argument("weight top letter outside alphabet");
        if (u.alphabet_size() != alphabet_size_)
            throw std::invalid_argument("weight top word alphabet mismatch");
        if (u.length() >= period_)
            throw std::invalid_argument("weight top word " + u.str() + " has length >= period");
        if (value < 0)
            throw std::invalid_argument("negative weight at (" + std::to_string(letter) + ", " +
                                        u.str() + ")");
    }
}

const Rational& WeightTop::value(int letter, const Word& u) const {
    auto it = table_.find({letter, u});
    if (it == table_.end())
        throw std::out_of_range("weight top has no entry at (" + std::to_string(letter) + ", " +
                                u.str() + ")");
    return it->second;
}

WeightFunction periodic_weight(const WeightTop& top) {
    auto shared = std::make_shared<WeightTop>(top);
    const std::size_t k = top.period();
    return WeightFunction(
        top.alphabet_size(), std::nullopt,
        [shared, k](int i, const Word& w) {
            return shared->value(i, periodic_decompose(w, k).first);
        },
        k);
}

std::optional<std::size_t> detect_period(const WeightFunction& samples, std::size_t k_max) {
    if (k_max < 1) throw std::invalid_argument("period bound must be at least 1");
    if (!samples.depth())
        throw std::invalid_argument("period detection needs a finite-depth sample");
    const std::size_t depth = *samples.depth();
    if (depth < 2 * k_max)
        throw std::invalid_argument("sample depth " + std::to_string(depth) +
                                    " too small, need " + std::to_string(2 * k_max));
    const int n = samples.alphabet_size();
    for (std::size_t k = 1; k <= k_max; ++k) {
        bool ok = true;
        for (std::size_t len = k; len <= depth && ok; ++len) {
            for (const Word& w : enumerate_words(n, len)) {
                const Word u = periodic_decompose(w, k).first;
                for (int i = 1; i <= n; ++i) {
                    if (!(samples(i, w) == samples(i, u))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        if (ok) return k;
    }
    return std::nullopt;
}

bool verify_containment(const WeightTop& top, std::size_t n2, std::optional<std::size_t> depth) {
    if (n2 < 1 || n2 % top.period() != 0)
        throw std::invalid_argument("period " + std::to_string(top.period()) +
                                    " does not divide " + std::to_string(n2));
    const std::size_t max_len = depth.value_or(n2 + 2);
    const WeightFunction weights = periodic_weight(top);
    const int n = top.alphabet_size();
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : enumerate_words(n, len)) {
            const Word u = periodic_decompose(w, n2).first;
            for (int i = 1; i <= n; ++i)
                if (!(weights(i, w) == weights(i, u))) return false;
        }
    }
    return true;
}

bool distinct_path_tuples(const WeightTop& top) {
    const int n = top.alphabet_size();
    const std::size_t k = top.period();
    std::set<std::vector<Rational>> seen;
    for (const Word& w : enumerate_words(n, k)) {
        // Walking from the root to w crosses the edges (i_k, e), then
        // (i_{k-1}, suffix of length 1), up to (i_1, suffix of length k-1).
        std::vector<Rational> tuple;
        tuple.reserve(k);
        for (std::size_t step = 0; step < k; ++step)
            tuple.push_back(top.value(w.letter(k - 1 - step), w.suffix(step)));
        if (!seen.insert(std::move(tuple)).second) return false;
    }
    return true;
}

FockTree build_tree(const WeightFunction& weights, std::size_t depth) {
    if (weights.depth() && *weights.depth() + 1 < depth)
        throw std::invalid_argument("weights undefined at tree depth");
    FockTree tree;
    tree.alphabet_size = weights.alphabet_size();
    tree.depth = depth;
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const Word& w : enumerate_words(tree.alphabet_size, len)) {
            tree.vertices.push_back(w);
            if (len == depth) continue;
            for (int i = 1; i <= tree.alphabet_size; ++i)
                tree.edges.push_back({w, w.prepend(i), weights(i, w)});
        }
    }
    return tree;
}

std::string to_dot(const FockTree& tree) {
    std::ostringstream out;
    out << "digraph fock_tree {\n";
    for (const Word& w : tree.vertices) out << "  \"" << w.str() << "\";\n";
    for (const FockTreeEdge& edge : tree.edges)
        out << "  \"" << edge.from.str() << "\" -> \"" << edge.to.str() << "\" [label=\""
            << rational_to_string(edge.label) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace fockshift
