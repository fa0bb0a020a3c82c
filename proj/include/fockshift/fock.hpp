// Truncated Fock space over the free semigroup on N letters: basis
// bookkeeping, exact sparse operators, creation operators and the
// Cuntz-Toeplitz relation check.
//
// Truncation convention: operators raise word length by one, so basis vectors
// at the top level L map to 0; identities are checked restricted to words of
// length <= L-1.

#ifndef FOCKSHIFT_FOCK_HPP
#define FOCKSHIFT_FOCK_HPP

#include "fockshift/scalar.hpp"
#include "fockshift/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockshift {

class TruncatedFockSpace {
public:
    TruncatedFockSpace(int alphabet_size, std::size_t max_length);

    int alphabet_size() const { return alphabet_size_; }
    std::size_t max_length() const { return max_length_; }
    std::size_t dimension() const { return dimension_; }

    WordIndex index_of(const Word& w) const;
    Word word_at(WordIndex index) const;
    // Word length of the basis vector at `index`.
    std::size_t level_of(WordIndex index) const;
    // First index of the given level, i.e. the count of shorter words.
    std::size_t level_offset(std::size_t level) const;

    friend bool operator==(const TruncatedFockSpace& a, const TruncatedFockSpace& b) {
        return a.alphabet_size_ == b.alphabet_size_ && a.max_length_ == b.max_length_;
    }

private:
    int alphabet_size_;
    std::size_t max_length_;
    std::size_t dimension_;
};

// Exact sparse matrix on a truncated Fock space, stored in canonical form:
// no explicit zeros, so equality of operators is equality of entry maps.
template <typename T>
class SparseOperator {
public:
    using EntryMap = std::map<std::pair<WordIndex, WordIndex>, T>;

    explicit SparseOperator(TruncatedFockSpace space) : space_(std::move(space)) {}

    const TruncatedFockSpace& space() const { return space_; }
    std::size_t dimension() const { return space_.dimension(); }
    const EntryMap& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    void set(WordIndex row, WordIndex col, T value) {
        check_index(row);
        check_index(col);
        if (is_zero_value(value))
            entries_.erase({row, col});
        else
            entries_[{row, col}] = std::move(value);
    }

    void add_to(WordIndex row, WordIndex col, const T& value) {
        check_index(row);
        check_index(col);
        auto key = std::make_pair(row, col);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (!is_zero_value(value)) entries_.emplace(key, value);
            return;
        }
        it->second = it->second + value;
        if (is_zero_value(it->second)) entries_.erase(it);
    }

    // Entry at (row, col), zero when absent.
    T at(WordIndex row, WordIndex col) const {
        auto it = entries_.find({row, col});
        return it == entries_.end() ? T{} : it->second;
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.space_ == b.space_ && a.entries_ == b.entries_;
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        a.check_same_space(b);
        SparseOperator out = a;
        for (const auto& [key, value] : b.entries_) out.add_to(key.first, key.second, value);
        return out;
    }

    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
        a.check_same_space(b);
        SparseOperator out = a;
        for (const auto& [key, value] : b.entries_) out.add_to(key.first, key.second, -value);
        return out;
    }

    friend SparseOperator operator*(const T& scalar, const SparseOperator& a) {
        SparseOperator out(a.space_);
        if (is_zero_value(scalar)) return out;
        for (const auto& [key, value] : a.entries_) out.set(key.first, key.second, scalar * value);
        return out;
    }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
        a.check_same_space(b);
        SparseOperator out(a.space_);
        // Row-major entry order makes each row of b a contiguous range.
        for (const auto& [akey, avalue] : a.entries_) {
            const auto [row, mid] = akey;
            auto it = b.entries_.lower_bound({mid, 0});
            const auto end = b.entries_.lower_bound({mid + 1, 0});
            for (; it != end; ++it) out.add_to(row, it->first.second, avalue * it->second);
        }
        return out;
    }

    SparseOperator adjoint() const {
        SparseOperator out(space_);
        for (const auto& [key, value] : entries_)
            out.entries_[{key.second, key.first}] = conj_value(value);
        return out;
    }

    std::vector<T> apply(const std::vector<T>& vec) const {
        if (vec.size() != dimension())
            throw std::invalid_argument("vector length does not match operator dimension");
        std::vector<T> out(dimension(), T{});
        for (const auto& [key, value] : entries_) {
            if (!is_zero_value(vec[key.second]))
                out[key.first] = out[key.first] + value * vec[key.second];
        }
        return out;
    }

    // Equality of all columns indexed by words of length <= max_word_length.
    bool equal_on_columns(const SparseOperator& other, std::size_t max_word_length) const {
        check_same_space(other);
        const std::size_t cutoff = cutoff_index(max_word_length);
        auto within = [&](const auto& entry) { return entry.first.second < cutoff; };
        auto it_a = entries_.begin();
        auto it_b = other.entries_.begin();
        while (true) {
            while (it_a != entries_.end() && !within(*it_a)) ++it_a;
            while (it_b != other.entries_.end() && !within(*it_b)) ++it_b;
            if (it_a == entries_.end() || it_b == other.entries_.end()) break;
            if (it_a->first != it_b->first || !(it_a->second == it_b->second)) return false;
            ++it_a;
            ++it_b;
        }
        return it_a == entries_.end() && it_b == other.entries_.end();
    }

    // First (row, col, this-value, other-value) where restricted columns differ.
    std::optional<std::tuple<WordIndex, WordIndex, T, T>> first_column_difference(
        const SparseOperator& other, std::size_t max_word_length) const {
        check_same_space(other);
        const std::size_t cutoff = cutoff_index(max_word_length);
        std::map<std::pair<WordIndex, WordIndex>, std::pair<T, T>> merged;
        for (const auto& [key, value] : entries_)
            if (key.second < cutoff) merged[key].first = value;
        for (const auto& [key, value] : other.entries_)
            if (key.second < cutoff) merged[key].second = value;
        for (const auto& [key, pair] : merged)
            if (!(pair.first == pair.second))
                return std::tuple{key.first, key.second, pair.first, pair.second};
        return std::nullopt;
    }

private:
    void check_index(WordIndex index) const {
        if (index >= dimension()) throw std::out_of_range("matrix index outside truncation");
    }
    void check_same_space(const SparseOperator& other) const {
        if (!(space_ == other.space_))
            throw std::invalid_argument("operator dimension mismatch: spaces differ");
    }
    std::size_t cutoff_index(std::size_t max_word_length) const {
        if (max_word_length >= space_.max_length()) return dimension();
        return space_.level_offset(max_word_length + 1);
    }

    TruncatedFockSpace space_;
    EntryMap entries_;
};

template <typename T>
SparseOperator<T> identity_operator(const TruncatedFockSpace& space, const T& one = T{1}) {
    SparseOperator<T> out(space);
    for (WordIndex j = 0; j < space.dimension(); ++j) out.set(j, j, one);
    return out;
}

// L_i: basis vector of w maps to that of iw; the top level maps to 0.
SparseOperator<Rational> creation_operator(int letter, const TruncatedFockSpace& space);

// Rank-one projection onto the vacuum vector.
SparseOperator<Rational> vacuum_projection(const TruncatedFockSpace& space);

struct RelationViolation {
    std::string relation;  // "isometry", "orthogonal_ranges" or "range_sum"
    int i = 0;
    int j = 0;
    WordIndex row = 0;
    WordIndex col = 0;
    Rational expected;
    Rational actual;
};

struct RelationReport {
    bool pass = true;
    std::size_t checked_max_length = 0;
    std::optional<RelationViolation> violation;
};

// Checks, on columns of word length <= L-1:
//   (a) L_i* L_j = delta_ij I   and   (b) sum_i L_i L_i* = I - P_e.
RelationReport check_ct_relations(std::span<const SparseOperator<Rational>> ops);

}  // namespace fockshift

#endif  // FOCKSHIFT_FOCK_HPP
