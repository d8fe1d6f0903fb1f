#include <doctest.h>

#include "journey/bit_matrix.hpp"

using journey::BitMatrix;

TEST_CASE("bit matrix rows are independent word-aligned sets") {
    BitMatrix m(3, 130);
    CHECK(m.words_per_row() == 3);
    m.set(1, 0);
    m.set(1, 64);
    m.set(1, 129);
    CHECK(m.test(1, 129));
    CHECK_FALSE(m.test(0, 129));
    CHECK_FALSE(m.test(2, 0));
    CHECK(m.count(1) == 3);
    m.reset(1, 64);
    CHECK(m.count(1) == 2);
    m.clear_row(1);
    CHECK(m.count(1) == 0);
}

TEST_CASE("fill_row leaves padding bits clear") {
    BitMatrix m(1, 70);
    m.fill_row(0);
    CHECK(m.count(0) == 70);
}

TEST_CASE("or_andnot and or_count_new") {
    BitMatrix m(3, 100);
    m.set(0, 1);
    m.set(0, 70);
    m.set(0, 99);
    m.set(1, 70);  // mask
    journey::bits::or_andnot(m.row(2), m.row(0), m.row(1));
    CHECK(m.test(2, 1));
    CHECK_FALSE(m.test(2, 70));
    CHECK(m.test(2, 99));
    const auto added = journey::bits::or_count_new(m.row(1), m.row(2));
    CHECK(added == 2);
    CHECK(m.count(1) == 3);
}
