#ifndef JOURNEY_BIT_MATRIX_HPP_
#define JOURNEY_BIT_MATRIX_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace journey {

/**
 * Dense rows of packed bits, stored contiguously. Each row is a set over
 * [0, cols) and rows are word-aligned so that set union is a loop over
 * 64-bit words.
 */
class BitMatrix {
 public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }

    bool test(std::size_t row, std::size_t col) const noexcept {
        return (words_[row * words_per_row_ + col / kWordBits] >> (col % kWordBits)) & Word{1};
    }

    void set(std::size_t row, std::size_t col) noexcept {
        words_[row * words_per_row_ + col / kWordBits] |= Word{1} << (col % kWordBits);
    }

    void reset(std::size_t row, std::size_t col) noexcept {
        words_[row * words_per_row_ + col / kWordBits] &= ~(Word{1} << (col % kWordBits));
    }

    std::span<Word> row(std::size_t r) noexcept {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const Word> row(std::size_t r) const noexcept {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    std::size_t count(std::size_t r) const noexcept;
    void clear_row(std::size_t r) noexcept;
    void fill_row(std::size_t r) noexcept;

    // Heap footprint of the packed words.
    std::size_t bytes() const noexcept { return words_.capacity() * sizeof(Word); }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> words_;
};

namespace bits {

inline std::size_t popcount(std::span<const BitMatrix::Word> words) noexcept {
    std::size_t total = 0;
    for (auto w : words) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

// dst |= src & ~mask
inline void or_andnot(std::span<BitMatrix::Word> dst,
                      std::span<const BitMatrix::Word> src,
                      std::span<const BitMatrix::Word> mask) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] |= src[i] & ~mask[i];
    }
}

// dst |= src, returns the number of bits that were not already in dst.
inline std::size_t or_count_new(std::span<BitMatrix::Word> dst,
                                std::span<const BitMatrix::Word> src) noexcept {
    std::size_t added = 0;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        added += static_cast<std::size_t>(std::popcount(src[i] & ~dst[i]));
        dst[i] |= src[i];
    }
    return added;
}

}  // namespace bits
}  // namespace journey

#endif  // JOURNEY_BIT_MATRIX_HPP_
