#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qcss/alist.hpp"
#include "qcss/classical_code.hpp"
#include "qcss/linalg.hpp"

using namespace qcss;

namespace {

TEST(Repetition, LengthThreeCirculant) {
    const BitMatrix h = repetition_code(3).h;
    const char* expected =
        "11.\n"
        ".11\n"
        "1.1";
    EXPECT_EQ(h.str(), expected);
}

TEST(Repetition, LengthTwoKeepsBothColumns) {
    const BitMatrix h = repetition_code(2).h;
    EXPECT_EQ(h.str(), "11\n11");
}

TEST(Repetition, LengthOneCancelsToZero) {
    // The single periodic check touches its only bit twice; mod 2 it vanishes.
    const BitMatrix h = repetition_code(1).h;
    EXPECT_EQ(h.rows(), 1u);
    EXPECT_EQ(h.cols(), 1u);
    EXPECT_FALSE(h.get(0, 0));
}

TEST(Repetition, LengthZeroIsAnError) {
    EXPECT_THROW(repetition_code(0), std::invalid_argument);
}

TEST(Repetition, RowAndColumnWeightsAreTwo) {
    for (std::size_t length = 2; length <= 8; ++length) {
        const BitMatrix h = repetition_code(length).h;
        const BitMatrix ht = h.transposed();
        for (std::size_t r = 0; r < length; ++r) {
            ASSERT_EQ(h.row_weight(r), 2u);
            ASSERT_EQ(ht.row_weight(r), 2u);
        }
        ASSERT_EQ(rank(h), length - 1);
        const auto kernel = kernel_basis(h);
        ASSERT_EQ(kernel.size(), 1u);
        ASSERT_EQ(kernel[0].weight(), length);
    }
}

TEST(RandomLdpc, FullWeightRowsAreAllOnes) {
    const BitMatrix h = random_ldpc(2, 4, 4, 123).h;
    for (std::size_t r = 0; r < 2; ++r) {
        EXPECT_EQ(h.row_weight(r), 4u);
    }
}

TEST(RandomLdpc, DeterministicAcrossRuns) {
    const ClassicalCode a = random_ldpc(3, 8, 3, 7);
    const ClassicalCode b = random_ldpc(3, 8, 3, 7);
    EXPECT_EQ(a.h, b.h);
}

TEST(RandomLdpc, DifferentSeedsDiffer) {
    const ClassicalCode a = random_ldpc(3, 8, 3, 7);
    const ClassicalCode b = random_ldpc(3, 8, 3, 8);
    EXPECT_NE(a.h, b.h);
}

TEST(RandomLdpc, RowWeightIsExact) {
    const BitMatrix h = random_ldpc(20, 15, 4, 1).h;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        ASSERT_EQ(h.row_weight(r), 4u);
    }
}

TEST(RandomLdpc, OverweightRowsRejected) {
    EXPECT_THROW(random_ldpc(2, 3, 4, 0), std::invalid_argument);
}

TEST(Alist, RoundTripOnRepetition) {
    const ClassicalCode code = repetition_code(3);
    const ClassicalCode parsed = parse_alist(emit_alist(code));
    EXPECT_EQ(parsed.h, code.h);
}

TEST(Alist, UnitMatrixParses) {
    BitMatrix one(1, 1);
    one.set(0, 0, true);
    const std::string text = emit_alist({"one", one});
    EXPECT_EQ(parse_alist(text).h, one);
}

TEST(Alist, CanonicalEmissionIsByteStable) {
    const ClassicalCode code = random_ldpc(5, 9, 3, 42);
    const std::string once = emit_alist(code);
    const std::string twice = emit_alist(parse_alist(once));
    EXPECT_EQ(once, twice);
}

TEST(Alist, RoundTripCorpus) {
    std::vector<ClassicalCode> corpus;
    corpus.push_back(repetition_code(2));
    corpus.push_back(repetition_code(7));
    corpus.push_back(random_ldpc(4, 11, 3, 5));
    corpus.push_back(random_ldpc(1, 6, 2, 9));  // 1 x n
    corpus.push_back(random_ldpc(6, 1, 1, 2));  // n x 1
    corpus.push_back(repetition_code(1));       // zero matrix
    for (const ClassicalCode& code : corpus) {
        const std::string text = emit_alist(code);
        const ClassicalCode parsed = parse_alist(text);
        ASSERT_EQ(parsed.h, code.h);
        ASSERT_EQ(emit_alist(parsed), text);
        ASSERT_EQ(text.back(), '\n');
    }
}

TEST(Alist, AcceptsTrailingZeroPadding) {
    // Same 2x3 matrix, with adjacency lists padded to the max degree.
    const std::string padded =
        "3 2\n"
        "1 2\n"
        "1 1 1\n"
        "2 1\n"
        "1 0\n"
        "1 0\n"
        "2 0\n"
        "1 2\n"
        "3 0\n";
    const BitMatrix h = parse_alist(padded).h;
    EXPECT_EQ(h.rows(), 2u);
    EXPECT_EQ(h.cols(), 3u);
    EXPECT_TRUE(h.get(0, 0));
    EXPECT_TRUE(h.get(0, 1));
    EXPECT_TRUE(h.get(1, 2));
}

TEST(Alist, MalformedHeaderReportsLineOne) {
    try {
        parse_alist("3\n");
        FAIL() << "expected alist_error";
    } catch (const alist_error& e) {
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(Alist, DegreeMismatchReportsOffendingLine) {
    // Column 1 declares degree 1 but lists two row indices.
    const std::string bad =
        "3 2\n"
        "1 2\n"
        "1 1 1\n"
        "2 1\n"
        "1 2\n"
        "1\n"
        "2\n"
        "1 2\n"
        "3\n";
    try {
        parse_alist(bad);
        FAIL() << "expected alist_error";
    } catch (const alist_error& e) {
        EXPECT_EQ(e.line(), 5u);
    }
}

TEST(Alist, IndexOutOfRangeRejected) {
    const std::string bad =
        "2 2\n"
        "1 1\n"
        "1 1\n"
        "1 1\n"
        "3\n"
        "2\n"
        "1\n"
        "2\n";
    EXPECT_THROW(parse_alist(bad), alist_error);
}

}  // namespace
