#include "hopf/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hopf {

IntMatrix IntMatrix::zero(int r, int c) {
    return IntMatrix{r, c, std::vector<std::int64_t>(static_cast<std::size_t>(r) * c, 0)};
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix c = IntMatrix::zero(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::int64_t det(const IntMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("det: square matrix required");
    const int n = a.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; all divisions are exact.
    IntMatrix m = a;
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct Worker {
    IntMatrix s, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i += f * row j
    void add_row(int i, int j, std::int64_t f) {
        for (int c = 0; c < s.cols; ++c) s.at(i, c) += f * s.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) += f * u.at(j, c);
    }
    // col i += f * col j
    void add_col(int i, int j, std::int64_t f) {
        for (int r = 0; r < s.rows; ++r) s.at(r, i) += f * s.at(r, j);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) += f * v.at(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }

    bool pivot_isolated(int k) const {
        for (int i = k + 1; i < s.rows; ++i)
            if (s.at(i, k) != 0) return false;
        for (int j = k + 1; j < s.cols; ++j)
            if (s.at(k, j) != 0) return false;
        return true;
    }

    // Smallest nonzero |entry| in the trailing submatrix, or false if all zero.
    bool find_pivot(int k, int& pi, int& pj) const {
        std::int64_t best = 0;
        bool found = false;
        for (int i = k; i < s.rows; ++i)
            for (int j = k; j < s.cols; ++j) {
                const std::int64_t a = std::llabs(s.at(i, j));
                if (a != 0 && (!found || a < best)) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Worker w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    const int nmin = std::min(m.rows, m.cols);

    for (int k = 0; k < nmin; ++k) {
        int pi = 0, pj = 0;
        if (!w.find_pivot(k, pi, pj)) break; // trailing block is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        while (!w.pivot_isolated(k)) {
            for (int i = k + 1; i < w.s.rows; ++i)
                if (w.s.at(i, k) != 0) w.add_row(i, k, -(w.s.at(i, k) / w.s.at(k, k)));
            for (int j = k + 1; j < w.s.cols; ++j)
                if (w.s.at(k, j) != 0) w.add_col(j, k, -(w.s.at(k, j) / w.s.at(k, k)));
            // Residues smaller than the pivot may remain; move the new
            // minimum into position and repeat.
            if (!w.pivot_isolated(k)) {
                w.find_pivot(k, pi, pj);
                w.swap_rows(k, pi);
                w.swap_cols(k, pj);
            }
        }

        // Enforce the divisibility chain: fold any non-multiple below-right
        // into column k and redo this pivot.
        bool redo = false;
        for (int i = k + 1; i < w.s.rows && !redo; ++i)
            for (int j = k + 1; j < w.s.cols && !redo; ++j)
                if (w.s.at(i, j) % w.s.at(k, k) != 0) {
                    w.add_row(k, i, 1);
                    redo = true;
                }
        if (redo) {
            --k;
            continue;
        }
        if (w.s.at(k, k) < 0) w.negate_row(k);
    }

    return SmithDecomposition{std::move(w.u), std::move(w.s), std::move(w.v)};
}

} // namespace hopf
