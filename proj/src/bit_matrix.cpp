#include "journey/bit_matrix.hpp"

#include <algorithm>

namespace journey {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + kWordBits - 1) / kWordBits),
      words_(rows * words_per_row_, Word{0}) {}

std::size_t BitMatrix::count(std::size_t r) const noexcept {
    return bits::popcount(row(r));
}

void BitMatrix::clear_row(std::size_t r) noexcept {
    auto words = row(r);
    std::fill(words.begin(), words.end(), Word{0});
}

void BitMatrix::fill_row(std::size_t r) noexcept {
    auto words = row(r);
    std::fill(words.begin(), words.end(), ~Word{0});
    if (const auto tail = cols_ % kWordBits; tail != 0 && !words.empty()) {
        words.back() = (Word{1} << tail) - 1;
    }
}

}  // namespace journey
