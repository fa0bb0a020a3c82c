// Free-semigroup words over the alphabet {1,...,N}: canonical
// level-then-lexicographic indexing, enumeration, periodic decomposition and
// the block encoding between length-k words over N letters and single letters
// of the N^k alphabet.

#ifndef FOCKSHIFT_WORD_HPP
#define FOCKSHIFT_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockshift {

using WordIndex = std::size_t;

class Word {
public:
    // The unit e.
    explicit Word(int alphabet_size);
    Word(int alphabet_size, std::vector<int> letters);

    static Word unit(int alphabet_size) { return Word(alphabet_size); }
    // Accepts "e", compact digit strings when N <= 9 ("211"), and dotted
    // strings of 1-based letters ("2.1.1").
    static Word parse(int alphabet_size, std::string_view text);

    int alphabet_size() const { return alphabet_size_; }
    std::size_t length() const { return letters_.size(); }
    bool is_unit() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(std::size_t pos) const { return letters_[pos]; }

    Word concat(const Word& other) const;
    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    // The word iw (letter prepended).
    Word prepend(int letter) const;

    // "e", compact digits for N <= 9, dotted otherwise.
    std::string str() const;

    // Canonical order: alphabet, then length, then lexicographic.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    int alphabet_size_;
    std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Number of words of length < k, i.e. 1 + N + ... + N^{k-1}.
std::size_t count_words_below(int alphabet_size, std::size_t k);

// Canonical rank in level-then-lexicographic order; the unit has rank 0.
WordIndex word_index(const Word& w);
// Inverse of word_index.
Word word_at(int alphabet_size, WordIndex index);

// All words of the given length, lexicographically.
std::vector<Word> enumerate_words(int alphabet_size, std::size_t length);

// The unique split w = uv with |u| < k and k dividing |v|.
std::pair<Word, Word> periodic_decompose(const Word& w, std::size_t k);

// Length-k word over {1..N}  ->  letter in {1..N^k}; lexicographic order of
// the words matches numeric order of the letters, and words starting with i
// fill the i-th block of N^{k-1} consecutive letters.
int block_encode(const Word& w, std::size_t k);
// Blockwise extension to words of length k*m; the unit maps to the unit.
Word block_encode_word(const Word& w, std::size_t k);
// Inverse of block_encode_word; `alphabet_size` is the base alphabet N.
Word block_decode_word(const Word& encoded, int alphabet_size, std::size_t k);

}  // namespace fockshift

#endif  // FOCKSHIFT_WORD_HPP
