#pragma once

#include <cstdint>
#include <vector>

namespace hopf {

// Dense integer matrix, row-major. Only used by the exact linear algebra
// helpers; category-level matrices carry their own payloads.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> entries;

    static IntMatrix zero(int r, int c);
    static IntMatrix identity(int n);

    std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::int64_t det(const IntMatrix& a); // exact, via fraction-free elimination

struct SmithDecomposition {
    IntMatrix u; // rows x rows, unimodular
    IntMatrix s; // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix v; // cols x cols, unimodular
};

// Exact Smith normal form: u * m * v = s with unimodular u, v and a
// nonnegative diagonal whose entries form a divisibility chain.
SmithDecomposition smith_normal_form(const IntMatrix& m);

} // namespace hopf
