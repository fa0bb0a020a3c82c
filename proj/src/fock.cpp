#include "fockshift/fock.hpp"

namespace fockshift {

TruncatedFockSpace::TruncatedFockSpace(int alphabet_size, std::size_t max_length)
    : alphabet_size_(alphabet_size),
      max_length_(max_length),
      dimension_(count_words_below(alphabet_size, max_length + 1)) {}

WordIndex TruncatedFockSpace::index_of(const Word& w) const {
    if (w.alphabet_size() != alphabet_size_)
        throw std::invalid_argument("word alphabet does not match space");
    if (w.length() > max_length_)
        throw std::out_of_range("word of length " + std::to_string(w.length()) +
                                " outside truncation at " + std::to_string(max_length_));
    return word_index(w);
}

Word TruncatedFockSpace::word_at(WordIndex index) const {
    if (index >= dimension_) throw std::out_of_range("basis index outside truncation");
    return fockshift::word_at(alphabet_size_, index);
}

std::size_t TruncatedFockSpace::level_of(WordIndex index) const {
    if (index >= dimension_) throw std::out_of_range("basis index outside truncation");
    std::size_t level = 0;
    std::size_t base = 0;
    std::size_t level_size = 1;
    while (index >= base + level_size) {
        base += level_size;
        level_size *= static_cast<std::size_t>(alphabet_size_);
        ++level;
    }
    return level;
}

std::size_t TruncatedFockSpace::level_offset(std::size_t level) const {
    return count_words_below(alphabet_size_, level);
}

SparseOperator<Rational> creation_operator(int letter, const TruncatedFockSpace& space) {
    if (letter < 1 || letter > space.alphabet_size())
        throw std::invalid_argument("creation letter " + std::to_string(letter) +
                                    " outside alphabet {1.." +
                                    std::to_string(space.alphabet_size()) + "}");
    SparseOperator<Rational> op(space);
    const std::size_t source_count =
        space.max_length() == 0 ? 0 : space.level_offset(space.max_length());
    for (WordIndex col = 0; col < source_count; ++col)
        op.set(space.index_of(space.word_at(col).prepend(letter)), col, Rational(1));
    return op;
}

SparseOperator<Rational> vacuum_projection(const TruncatedFockSpace& space) {
    SparseOperator<Rational> op(space);
    op.set(0, 0, Rational(1));
    return op;
}

RelationReport check_ct_relations(std::span<const SparseOperator<Rational>> ops) {
    if (ops.empty()) throw std::invalid_argument("no operators given");
    const TruncatedFockSpace& space = ops.front().space();
    for (const auto& op : ops)
        if (!(op.space() == space))
            throw std::invalid_argument("operator dimension mismatch: spaces differ");
    if (static_cast<int>(ops.size()) != space.alphabet_size())
        throw std::invalid_argument("expected one operator per letter");

    RelationReport report;
    if (space.max_length() == 0) return report;
    const std::size_t restricted = space.max_length() - 1;
    report.checked_max_length = restricted;

    const auto identity = identity_operator<Rational>(space);
    const auto zero = SparseOperator<Rational>(space);

    for (int i = 1; i <= space.alphabet_size(); ++i) {
        for (int j = 1; j <= space.alphabet_size(); ++j) {
            const auto product = ops[i - 1].adjoint() * ops[j - 1];
            const auto& expected = (i == j) ? identity : zero;
            if (auto diff = product.first_column_difference(expected, restricted)) {
                report.pass = false;
                report.violation = RelationViolation{
                    i == j ? "isometry" : "orthogonal_ranges",
                    i,
                    j,
                    std::get<0>(*diff),
                    std::get<1>(*diff),
                    std::get<3>(*diff),
                    std::get<2>(*diff)};
                return report;
            }
        }
    }

    SparseOperator<Rational> range_sum(space);
    for (const auto& op : ops) range_sum = range_sum + op * op.adjoint();
    const auto expected = identity - vacuum_projection(space);
    if (auto diff = range_sum.first_column_difference(expected, restricted)) {
        report.pass = false;
        report.violation = RelationViolation{"range_sum",       0,
                                             0,                 std::get<0>(*diff),
                                             std::get<1>(*diff), std::get<3>(*diff),
                                             std::get<2>(*diff)};
    }
    return report;
}

}  // namespace fockshift
