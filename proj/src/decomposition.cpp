#include "fockshift/decomposition.hpp"

#include <limits>
#include <sstream>

namespace fockshift {

namespace {

int cell_alphabet(int alphabet_size, std::size_t period) {
    long long power = 1;
    for (std::size_t j = 0; j < period; ++j) {
        power *= alphabet_size;
        if (power > std::numeric_limits<int>::max())
            throw std::overflow_error("N^k exceeds the representable alphabet size");
    }
    return static_cast<int>(power);
}

// Words of length 0, k, 2k, ..., k*levels in word order; these label the
// basis of one K_w copy.
std::vector<Word> block_words(int alphabet_size, std::size_t period, std::size_t levels) {
    std::vector<Word> out;
    for (std::size_t j = 0; j <= levels; ++j)
        for (Word& w : enumerate_words(alphabet_size, period * j)) out.push_back(std::move(w));
    return out;
}

std::vector<Word> copy_words(int alphabet_size, std::size_t period) {
    std::vector<Word> out;
    for (std::size_t len = 0; len < period; ++len)
        for (Word& w : enumerate_words(alphabet_size, len)) out.push_back(std::move(w));
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    preimage_.assign(image_.size(), image_.size());
    for (std::size_t col = 0; col < image_.size(); ++col) {
        const std::size_t row = image_[col];
        if (row >= image_.size()) throw std::invalid_argument("permutation image out of range");
        if (preimage_[row] != image_.size())
            throw std::invalid_argument("permutation image repeats row " + std::to_string(row));
        preimage_[row] = col;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::size_t> image(size);
    for (std::size_t j = 0; j < size; ++j) image[j] = j;
    return Permutation(std::move(image));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> image(size());
    for (std::size_t col = 0; col < size(); ++col) image[col] = next.image_[image_[col]];
    return Permutation(std::move(image));
}

Permutation Permutation::inverted() const { return Permutation(preimage_); }

bool Permutation::is_identity() const {
    for (std::size_t col = 0; col < size(); ++col)
        if (image_[col] != col) return false;
    return true;
}

SubspacePartition subspace_partition(int alphabet_size, std::size_t period,
                                     std::size_t max_length) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
    if (period < 1) throw std::invalid_argument("period must be at least 1");
    if ((max_length + 1) % period != 0) {
        std::ostringstream msg;
        msg << "max length " << max_length << " is misaligned for period " << period
            << "; valid lengths are " << period - 1 << ", " << 2 * period - 1 << ", "
            << 3 * period - 1 << ", ...";
        throw std::invalid_argument(msg.str());
    }
    const std::size_t levels = (max_length + 1) / period - 1;
    const TruncatedFockSpace space(alphabet_size, max_length);
    SubspacePartition partition;
    partition.alphabet_size = alphabet_size;
    partition.period = period;
    partition.max_length = max_length;
    for (const Word& w : copy_words(alphabet_size, period)) {
        std::vector<WordIndex>& block = partition.blocks[w];
        for (const Word& v : block_words(alphabet_size, period, levels))
            block.push_back(space.index_of(w.concat(v)));
    }
    return partition;
}

TruncatedFockSpace DecompositionUnitaries::cell_space() const {
    return TruncatedFockSpace(cell_alphabet(alphabet_size, period), levels);
}

TruncatedFockSpace DecompositionUnitaries::full_space() const {
    return TruncatedFockSpace(alphabet_size, period * (levels + 1) - 1);
}

DecompositionUnitaries build_unitaries(int alphabet_size, std::size_t period, std::size_t levels) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
    if (period < 1) throw std::invalid_argument("period must be at least 1");
    const std::size_t d = count_words_below(alphabet_size, period);
    const std::size_t s = count_words_below(cell_alphabet(alphabet_size, period), levels + 1);
    const TruncatedFockSpace full(alphabet_size, period * (levels + 1) - 1);
    const std::vector<Word> copies = copy_words(alphabet_size, period);
    const std::vector<Word> cells = block_words(alphabet_size, period, levels);

    std::vector<std::size_t> u_image(d * s);
    std::vector<std::size_t> v_image(d * s);
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t r = 0; r < s; ++r) {
            u_image[b * s + r] = full.index_of(copies[b].concat(cells[r]));
            v_image[b * s + word_index(block_encode_word(cells[r], period))] = b * s + r;
        }
    }
    return DecompositionUnitaries{alphabet_size, period,
                                  levels,        s,
                                  d,             Permutation(std::move(u_image)),
                                  Permutation(std::move(v_image))};
}

BlockMatrix::BlockMatrix(int alphabet_size, std::size_t period, std::size_t levels)
    : alphabet_size_(alphabet_size),
      period_(period),
      levels_(levels),
      grid_dim_(count_words_below(alphabet_size, period)),
      cell_space_(cell_alphabet(alphabet_size, period), levels) {}

void BlockMatrix::check_key(const Word& w) const {
    if (w.alphabet_size() != alphabet_size_)
        throw std::invalid_argument("block label alphabet mismatch");
    if (w.length() >= period_)
        throw std::invalid_argument("block label " + w.str() + " has length >= period");
}

void BlockMatrix::set_block(const Word& row, const Word& col, SparseOperator<Rational> op) {
    check_key(row);
    check_key(col);
    if (!(op.space() == cell_space_))
        throw std::invalid_argument("block operator lives on the wrong cell space");
    if (op.is_zero())
        blocks_.erase({row, col});
    else
        blocks_.insert_or_assign({row, col}, std::move(op));
}

SparseOperator<Rational> BlockMatrix::block(const Word& row, const Word& col) const {
    check_key(row);
    check_key(col);
    auto it = blocks_.find({row, col});
    if (it == blocks_.end()) return SparseOperator<Rational>(cell_space_);
    return it->second;
}

BlockMatrix conjugate_shift(const SparseOperator<Rational>& shift_op,
                            const DecompositionUnitaries& unitaries) {
    if (!(shift_op.space() == unitaries.full_space()))
        throw std::invalid_argument("operator truncation does not match the unitaries");
    const std::size_t s = unitaries.block_size;
    const Permutation uv = unitaries.uv();
    BlockMatrix out(unitaries.alphabet_size, unitaries.period, unitaries.levels);

    std::map<std::pair<std::size_t, std::size_t>, SparseOperator<Rational>> cells;
    for (const auto& [pos, value] : shift_op.entries()) {
        const std::size_t x = uv.inverse(pos.first);
        const std::size_t y = uv.inverse(pos.second);
        auto key = std::make_pair(x / s, y / s);
        auto [it, inserted] = cells.try_emplace(key, out.cell_space());
        it->second.set(x % s, y % s, value);
    }
    for (auto& [key, op] : cells)
        out.set_block(word_at(unitaries.alphabet_size, key.first),
                      word_at(unitaries.alphabet_size, key.second), std::move(op));
    return out;
}

BlockMatrix predicted_blocks(const WeightTop& top, int letter, std::size_t levels) {
    if (letter < 1 || letter > top.alphabet_size())
        throw std::invalid_argument("letter outside alphabet");
    const std::size_t k = top.period();
    BlockMatrix out(top.alphabet_size(), k, levels);
    for (const Word& w : copy_words(top.alphabet_size(), k)) {
        const Rational& lambda = top.value(letter, w);
        if (lambda == 0) continue;
        const Word iw = w.prepend(letter);
        if (w.length() < k - 1) {
            out.set_block(iw, w, lambda * identity_operator(out.cell_space(), Rational(1)));
        } else {
            const int cell_letter = block_encode(iw, k);
            out.set_block(Word::unit(top.alphabet_size()), w,
                          lambda * creation_operator(cell_letter, out.cell_space()));
        }
    }
    return out;
}

DecompositionReport verify_block_decomposition(const WeightTop& top, std::size_t levels) {
    if (levels < 1) throw std::invalid_argument("need at least one repeated level to compare");
    const int n = top.alphabet_size();
    const std::size_t k = top.period();
    const DecompositionUnitaries unitaries = build_unitaries(n, k, levels);
    const TruncatedFockSpace full = unitaries.full_space();
    const std::vector<SparseOperator<Rational>> shift = build_shift(periodic_weight(top), full);
    const std::vector<Word> copies = copy_words(n, k);

    DecompositionReport report;
    report.alphabet_size = n;
    report.period = k;
    report.levels = levels;
    {
        std::ostringstream note;
        if (k >= 2)
            note << "cell columns of level <= " << levels << " for source copies of length <= "
                 << k - 2 << ", level <= " << levels - 1 << " for source copies of length "
                 << k - 1;
        else
            note << "cell columns of level <= " << levels - 1;
        report.compared_columns = note.str();
    }

    for (int i = 1; i <= n; ++i) {
        const BlockMatrix actual = conjugate_shift(shift[i - 1], unitaries);
        const BlockMatrix expected = predicted_blocks(top, i, levels);
        for (const Word& row : copies) {
            for (const Word& col : copies) {
                const std::size_t max_len = col.length() == k - 1 ? levels - 1 : levels;
                const auto diff = actual.block(row, col).first_column_difference(
                    expected.block(row, col), max_len);
                if (diff) {
                    report.pass = false;
                    report.discrepancy =
                        BlockDiscrepancy{i,
                                         row,
                                         col,
                                         std::get<0>(*diff),
                                         std::get<1>(*diff),
                                         std::get<2>(*diff),
                                         std::get<3>(*diff)};
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace fockshift
