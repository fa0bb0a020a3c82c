#include "fockshift/word.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fockshift {

namespace {

void require_alphabet(int alphabet_size) {
    if (alphabet_size < 1)
        throw std::invalid_argument("alphabet size must be at least 1, got " +
                                    std::to_string(alphabet_size));
}

// N^k as a letter value; the encoded alphabet must stay addressable.
int checked_alphabet_power(int alphabet_size, std::size_t k) {
    long long p = 1;
    for (std::size_t j = 0; j < k; ++j) {
        p *= alphabet_size;
        if (p > std::numeric_limits<int>::max())
            throw std::overflow_error("alphabet power N^k exceeds letter range");
    }
    return static_cast<int>(p);
}

}  // namespace

Word::Word(int alphabet_size) : alphabet_size_(alphabet_size) {
    require_alphabet(alphabet_size);
}

Word::Word(int alphabet_size, std::vector<int> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
    require_alphabet(alphabet_size);
    for (int l : letters_) {
        if (l < 1 || l > alphabet_size_)
            throw std::invalid_argument("letter " + std::to_string(l) +
                                        " outside alphabet {1.." +
                                        std::to_string(alphabet_size_) + "}");
    }
}

Word Word::parse(int alphabet_size, std::string_view text) {
    require_alphabet(alphabet_size);
    if (text == "e") return Word(alphabet_size);
    if (text.empty()) throw std::invalid_argument("empty word string (the unit is \"e\")");
    std::vector<int> letters;
    if (text.find('.') != std::string_view::npos) {
        std::string item;
        std::istringstream is{std::string(text)};
        while (std::getline(is, item, '.')) {
            if (item.empty()) throw std::invalid_argument("malformed dotted word: \"" + std::string(text) + "\"");
            letters.push_back(std::stoi(item));
        }
    } else {
        if (alphabet_size > 9)
            throw std::invalid_argument("compact word strings need N <= 9; use dotted form");
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word \"" +
                                            std::string(text) + "\"");
            letters.push_back(c - '0');
        }
    }
    return Word(alphabet_size, std::move(letters));
}

Word Word::concat(const Word& other) const {
    if (alphabet_size_ != other.alphabet_size_)
        throw std::invalid_argument("concat across different alphabets");
    std::vector<int> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return Word(alphabet_size_, std::move(letters));
}

Word Word::prefix(std::size_t len) const {
    if (len > length()) throw std::out_of_range("prefix longer than word");
    return Word(alphabet_size_, std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix(std::size_t len) const {
    if (len > length()) throw std::out_of_range("suffix longer than word");
    return Word(alphabet_size_, std::vector<int>(letters_.end() - len, letters_.end()));
}

Word Word::prepend(int letter) const {
    if (letter < 1 || letter > alphabet_size_)
        throw std::invalid_argument("letter " + std::to_string(letter) + " outside alphabet");
    std::vector<int> letters;
    letters.reserve(length() + 1);
    letters.push_back(letter);
    letters.insert(letters.end(), letters_.begin(), letters_.end());
    return Word(alphabet_size_, std::move(letters));
}

std::string Word::str() const {
    if (is_unit()) return "e";
    std::ostringstream os;
    if (alphabet_size_ <= 9) {
        for (int l : letters_) os << l;
    } else {
        for (std::size_t j = 0; j < letters_.size(); ++j) {
            if (j) os << '.';
            os << letters_[j];
        }
    }
    return os.str();
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.alphabet_size_ <=> b.alphabet_size_; c != 0) return c;
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.letters_ <=> b.letters_;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::size_t count_words_below(int alphabet_size, std::size_t k) {
    require_alphabet(alphabet_size);
    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t j = 0; j < k; ++j) {
        if (total > std::numeric_limits<std::size_t>::max() - level)
            throw std::overflow_error("word count overflows size_t");
        total += level;
        if (j + 1 < k) {
            if (level > std::numeric_limits<std::size_t>::max() / alphabet_size)
                throw std::overflow_error("word count overflows size_t");
            level *= static_cast<std::size_t>(alphabet_size);
        }
    }
    return total;
}

WordIndex word_index(const Word& w) {
    const int N = w.alphabet_size();
    std::size_t offset = 0;
    for (int l : w.letters()) offset = offset * N + static_cast<std::size_t>(l - 1);
    return count_words_below(N, w.length()) + offset;
}

Word word_at(int alphabet_size, WordIndex index) {
    require_alphabet(alphabet_size);
    std::size_t level = 0;
    std::size_t base = 0;
    std::size_t level_size = 1;
    while (index >= base + level_size) {
        base += level_size;
        level_size *= static_cast<std::size_t>(alphabet_size);
        ++level;
    }
    std::size_t offset = index - base;
    std::vector<int> letters(level);
    for (std::size_t j = level; j-- > 0;) {
        letters[j] = static_cast<int>(offset % alphabet_size) + 1;
        offset /= alphabet_size;
    }
    return Word(alphabet_size, std::move(letters));
}

std::vector<Word> enumerate_words(int alphabet_size, std::size_t length) {
    require_alphabet(alphabet_size);
    std::vector<Word> out;
    std::size_t count = 1;
    for (std::size_t j = 0; j < length; ++j) count *= static_cast<std::size_t>(alphabet_size);
    out.reserve(count);
    std::vector<int> letters(length, 1);
    for (std::size_t n = 0; n < count; ++n) {
        out.emplace_back(alphabet_size, letters);
        for (std::size_t j = length; j-- > 0;) {
            if (letters[j] < alphabet_size) {
                ++letters[j];
                break;
            }
            letters[j] = 1;
        }
    }
    return out;
}

std::pair<Word, Word> periodic_decompose(const Word& w, std::size_t k) {
    if (k == 0) throw std::invalid_argument("period must be at least 1");
    const std::size_t ulen = w.length() % k;
    return {w.prefix(ulen), w.suffix(w.length() - ulen)};
}

int block_encode(const Word& w, std::size_t k) {
    if (w.length() != k)
        throw std::invalid_argument("block encoding needs |w| = " + std::to_string(k) +
                                    ", got |w| = " + std::to_string(w.length()));
    const int N = w.alphabet_size();
    checked_alphabet_power(N, k);
    long long value = 0;
    for (int l : w.letters()) value = value * N + (l - 1);
    return static_cast<int>(value + 1);
}

Word block_encode_word(const Word& w, std::size_t k) {
    if (k == 0) throw std::invalid_argument("period must be at least 1");
    if (w.length() % k != 0)
        throw std::invalid_argument("block encoding needs k | |w|; |w| = " +
                                    std::to_string(w.length()) + ", k = " + std::to_string(k));
    const int big = checked_alphabet_power(w.alphabet_size(), k);
    std::vector<int> letters;
    letters.reserve(w.length() / k);
    for (std::size_t j = 0; j < w.length(); j += k)
        letters.push_back(block_encode(Word(w.alphabet_size(),
                                            std::vector<int>(w.letters().begin() + j,
                                                             w.letters().begin() + j + k)),
                                       k));
    return Word(big, std::move(letters));
}

Word block_decode_word(const Word& encoded, int alphabet_size, std::size_t k) {
    if (k == 0) throw std::invalid_argument("period must be at least 1");
    const int big = checked_alphabet_power(alphabet_size, k);
    if (encoded.alphabet_size() != big)
        throw std::invalid_argument("encoded word alphabet is " +
                                    std::to_string(encoded.alphabet_size()) + ", expected N^k = " +
                                    std::to_string(big));
    std::vector<int> letters;
    letters.reserve(encoded.length() * k);
    for (int big_letter : encoded.letters()) {
        long long offset = big_letter - 1;
        std::vector<int> block(k);
        for (std::size_t j = k; j-- > 0;) {
            block[j] = static_cast<int>(offset % alphabet_size) + 1;
            offset /= alphabet_size;
        }
        letters.insert(letters.end(), block.begin(), block.end());
    }
    return Word(alphabet_size, std::move(letters));
}

}  // namespace fockshift
