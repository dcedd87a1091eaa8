#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hopf/rng.hpp"
#include "hopf/smith.hpp"

using namespace hopf;

namespace {

// Independent validity oracle: u*m*v == s, u and v unimodular, s diagonal
// and nonnegative with a divisibility chain.
void check_decomposition(const IntMatrix& m, const SmithDecomposition& d) {
    CHECK(mat_mul(mat_mul(d.u, m), d.v) == d.s);
    CHECK(std::abs(det(d.u)) == 1);
    CHECK(std::abs(det(d.v)) == 1);
    for (int i = 0; i < d.s.rows; ++i)
        for (int j = 0; j < d.s.cols; ++j)
            if (i != j) CHECK(d.s.at(i, j) == 0);
    std::int64_t prev = -1;
    for (int i = 0; i < std::min(d.s.rows, d.s.cols); ++i) {
        const std::int64_t di = d.s.at(i, i);
        CHECK(di >= 0);
        if (prev == 0)
            CHECK(di == 0);
        else if (prev > 0)
            CHECK(di % prev == 0);
        prev = di;
    }
}

} // namespace

TEST_CASE("diag(2,3) has invariant factors 1, 6") {
    IntMatrix m{2, 2, {2, 0, 0, 3}};
    const SmithDecomposition d = smith_normal_form(m);
    check_decomposition(m, d);
    CHECK(d.s.at(0, 0) == 1);
    CHECK(d.s.at(1, 1) == 6);
}

TEST_CASE("zero matrix is fixed with identity transforms") {
    IntMatrix m = IntMatrix::zero(2, 3);
    const SmithDecomposition d = smith_normal_form(m);
    CHECK(d.s == m);
    CHECK(d.u == IntMatrix::identity(2));
    CHECK(d.v == IntMatrix::identity(3));
}

TEST_CASE("already-diagonal 1x1") {
    IntMatrix m{1, 1, {4}};
    const SmithDecomposition d = smith_normal_form(m);
    check_decomposition(m, d);
    CHECK(d.s.entries == std::vector<std::int64_t>{4});
}

TEST_CASE("classifies a standard presentation") {
    // invariant factors of [[2,4],[6,8]]: gcd of entries 2, |det| = 8, so 2 and 4
    IntMatrix m{2, 2, {2, 4, 6, 8}};
    const SmithDecomposition d = smith_normal_form(m);
    check_decomposition(m, d);
    CHECK(d.s.at(0, 0) == 2);
    CHECK(d.s.at(1, 1) == 4);
}

TEST_CASE("random matrices satisfy the decomposition contract") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = static_cast<int>(rng.below(4)) + 1;
        const int c = static_cast<int>(rng.below(4)) + 1;
        IntMatrix m = IntMatrix::zero(r, c);
        for (auto& e : m.entries) e = rng.range(-9, 9);
        check_decomposition(m, smith_normal_form(m));
    }
}

TEST_CASE("negative and rectangular inputs") {
    IntMatrix m{2, 3, {-4, 2, 6, 8, -2, 0}};
    const SmithDecomposition d = smith_normal_form(m);
    check_decomposition(m, d);
    CHECK(d.s.at(0, 0) == 2); // gcd of all entries
}
