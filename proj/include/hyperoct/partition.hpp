#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hyperoct/numeric.hpp"

namespace hyperoct {

/// Integer partition: weakly decreasing positive parts, empty = the zero
/// partition. Comparison is lexicographic on the part sequence.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    int rows() const { return static_cast<int>(parts.size()); }
    int first() const { return parts.empty() ? 0 : parts.front(); }
    bool empty() const { return parts.empty(); }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "[3,1]", "[]"
};

/// 1-based cell coordinates in the Young diagram (English convention).
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

std::vector<Partition> enumerate_partitions(int n);

/// Outer corners whose removal leaves a partition.
std::vector<Box> removable_boxes(const Partition& p);
/// Positions whose addition leaves a partition; always one more than removable.
std::vector<Box> addable_boxes(const Partition& p);

Partition remove_box(const Partition& p, const Box& b);
Partition add_box(const Partition& p, const Box& b);

Partition conjugate(const Partition& p);

/// Number of standard Young tableaux of shape p, by the hook length formula.
BigInt syt_count(const Partition& p);

/// Ordered pair of partitions with |alpha| + |beta| = n; the irrep label.
/// Canonical order: by (|beta|, alpha, beta) lexicographically.
struct Bipartition {
    Partition alpha;
    Partition beta;

    Bipartition() = default;
    Bipartition(Partition a, Partition b) : alpha(std::move(a)), beta(std::move(b)) {}

    int n() const { return alpha.sum() + beta.sum(); }

    bool operator==(const Bipartition&) const = default;
    bool operator<(const Bipartition& o) const;

    std::string to_string() const;  // "[3,1|]", "[|2]", "[1|1]"
};

std::vector<Bipartition> enumerate_bipartitions(int n);

/// dim V_(alpha,beta) = C(n,|alpha|) * f^alpha * f^beta.
BigInt dim_irrep(const Bipartition& b);

enum class EpsParity { Even, Odd };

/// Parity (-1)^{|beta|} by which the central all-minus element acts.
EpsParity epsilon_parity(const Bipartition& b);

}  // namespace hyperoct
