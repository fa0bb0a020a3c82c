// Block decomposition of periodic shifts: the K_w partition of the truncated
// space, the two permutation unitaries, conjugation into a d x d grid of
// operators on the N^k-letter space, the predicted block formulas, and the
// exact comparison between the two.

#ifndef FOCKSHIFT_DECOMPOSITION_HPP
#define FOCKSHIFT_DECOMPOSITION_HPP

#include "fockshift/periodicity.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fockshift {

class Permutation {
public:
    // image[col] = row of the single 1 in that column.
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t size);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t col) const { return image_.at(col); }
    std::size_t inverse(std::size_t row) const { return preimage_.at(row); }
    const std::vector<std::size_t>& image() const { return image_; }

    // Matrix product next * this.
    Permutation then(const Permutation& next) const;
    Permutation inverted() const;
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<std::size_t> image_;
    std::vector<std::size_t> preimage_;
};

// K_w = span{xi_{wv} : k divides |v|} for each w with |w| < k, listed at the
// truncation. Indices within a block follow word order of the suffix v.
struct SubspacePartition {
    int alphabet_size = 0;
    std::size_t period = 0;
    std::size_t max_length = 0;
    std::map<Word, std::vector<WordIndex>> blocks;
};

// Requires max_length = k*(m+1) - 1 so every block holds m+1 full levels.
SubspacePartition subspace_partition(int alphabet_size, std::size_t period,
                                     std::size_t max_length);

// U maps the (w-copy, u) sum space onto the truncated space by u -> wu.
// V relabels each copy of the truncated N^k-letter space by the block
// encoding, (w-copy, encoded u) -> (w-copy, u). Copy w occupies the index
// range [rank(w)*block_size, (rank(w)+1)*block_size).
struct DecompositionUnitaries {
    int alphabet_size = 0;   // N
    std::size_t period = 0;  // k
    std::size_t levels = 0;  // m
    std::size_t block_size = 0;
    std::size_t grid_dim = 0;
    Permutation u;
    Permutation v;

    Permutation uv() const { return v.then(u); }
    TruncatedFockSpace cell_space() const;
    TruncatedFockSpace full_space() const;
};

DecompositionUnitaries build_unitaries(int alphabet_size, std::size_t period, std::size_t levels);

// d x d grid of operators on the truncated N^k-letter cell space, rows and
// columns labeled by the words of length < k. Absent cells are zero.
class BlockMatrix {
public:
    BlockMatrix(int alphabet_size, std::size_t period, std::size_t levels);

    int alphabet_size() const { return alphabet_size_; }
    std::size_t period() const { return period_; }
    std::size_t levels() const { return levels_; }
    const TruncatedFockSpace& cell_space() const { return cell_space_; }
    std::size_t grid_dim() const { return grid_dim_; }

    void set_block(const Word& row, const Word& col, SparseOperator<Rational> op);
    SparseOperator<Rational> block(const Word& row, const Word& col) const;
    const std::map<std::pair<Word, Word>, SparseOperator<Rational>>& blocks() const {
        return blocks_;
    }

private:
    void check_key(const Word& w) const;

    int alphabet_size_;
    std::size_t period_;
    std::size_t levels_;
    std::size_t grid_dim_;
    TruncatedFockSpace cell_space_;
    std::map<std::pair<Word, Word>, SparseOperator<Rational>> blocks_;
};

// Conjugates one shift generator by the composed unitary and re-slices the
// result into the grid.
BlockMatrix conjugate_shift(const SparseOperator<Rational>& shift_op,
                            const DecompositionUnitaries& unitaries);

// The closed-form image of generator `letter`: cell (iw, w) holds weight * I
// for |w| < k-1, cell (e, w) holds weight * creation(encoded iw) for
// |w| = k-1.
BlockMatrix predicted_blocks(const WeightTop& top, int letter, std::size_t levels);

struct BlockDiscrepancy {
    int letter = 0;
    Word block_row{1};
    Word block_col{1};
    WordIndex row = 0;
    WordIndex col = 0;
    Rational actual;
    Rational expected;
};

struct DecompositionReport {
    bool pass = true;
    int alphabet_size = 0;
    std::size_t period = 0;
    std::size_t levels = 0;
    // The column set the exact comparison ran over.
    std::string compared_columns;
    std::optional<BlockDiscrepancy> discrepancy;
};

// Builds the periodic shift at the aligned truncation, conjugates each
// generator, and compares to the closed form cell-by-cell. Columns whose
// image leaves the truncation are excluded: source copies of length k-1 are
// compared through cell level m-1, shorter copies through level m.
DecompositionReport verify_block_decomposition(const WeightTop& top, std::size_t levels);

}  // namespace fockshift

#endif  // FOCKSHIFT_DECOMPOSITION_HPP
