#include "hyperoct/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hyperoct {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            long long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols; ++j) out.at(i, j) += a * other.at(k, j);
        }
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

long long IntMatrix::trace() const {
    long long t = 0;
    for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

long long det_bareiss(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    int n = m.rows;
    if (n == 0) return 1;
    long long sign = 1;
    long long prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                long long num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss: division is exact
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace hyperoct
