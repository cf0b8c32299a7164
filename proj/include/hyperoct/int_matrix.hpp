#pragma once

#include <vector>

namespace hyperoct {

/// Dense row-major integer matrix. Group-theoretic identities are checked on
/// these exactly; conversion to floating point happens only in oracle_sim.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    static IntMatrix identity(int n);

    long long& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix transposed() const;
    long long trace() const;

    bool operator==(const IntMatrix&) const = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination; intended for the
/// small matrices that arise here (side <= ~10, entries in {0, +-1}).
long long det_bareiss(IntMatrix m);

}  // namespace hyperoct
