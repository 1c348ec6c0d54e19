#pragma once

#include <cstdint>
#include <vector>

namespace weylbrick {

// Dense integer matrix, row-major. Small sizes only (rank of a Dynkin
// diagram is at most 8, Bruhat inversion matrices at most |Phi+| rows).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    long long& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    long long operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            long long v = a(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j) out(i, j) += v * b(k, j);
        }
    return out;
}

inline std::vector<long long> apply(const IntMatrix& a, const std::vector<int>& x) {
    std::vector<long long> out(a.rows, 0);
    for (int j = 0; j < a.cols; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < a.rows; ++i) out[i] += a(i, j) * x[j];
    }
    return out;
}

// Rank over Q via fraction-free (Bareiss) elimination; exact for integer
// input of the sizes used here.
inline int integer_rank(IntMatrix m) {
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m(rank, c), m(pivot, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
            m(r, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

// Leading principal minors by Bareiss; used for the positive-definiteness
// test of Cartan matrices.
inline std::vector<long long> leading_principal_minors(const IntMatrix& m) {
    std::vector<long long> minors;
    for (int k = 1; k <= m.rows; ++k) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
        // determinant via fraction-free elimination
        long long prev = 1;
        long long det = 1;
        bool zero = false;
        int sign = 1;
        for (int col = 0; col < k && !zero; ++col) {
            int pivot = -1;
            for (int r = col; r < k; ++r)
                if (sub(r, col) != 0) { pivot = r; break; }
            if (pivot < 0) { zero = true; break; }
            if (pivot != col) {
                for (int c = 0; c < k; ++c) std::swap(sub(col, c), sub(pivot, c));
                sign = -sign;
            }
            for (int r = col + 1; r < k; ++r) {
                for (int c = col + 1; c < k; ++c)
                    sub(r, c) = (sub(col, col) * sub(r, c) - sub(r, col) * sub(col, c)) / prev;
                sub(r, col) = 0;
            }
            prev = sub(col, col);
        }
        det = zero ? 0 : sign * sub(k - 1, k - 1);
        minors.push_back(det);
    }
    return minors;
}

struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct MatrixHash {
    size_t operator()(const IntMatrix& m) const {
        size_t h = static_cast<size_t>(m.rows) * 31 + m.cols;
        for (long long x : m.data) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace weylbrick
