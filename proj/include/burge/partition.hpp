#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace burge {

// Integer partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    // Sorts the values decreasingly and drops zeros.
    static Partition sorted_from(std::vector<int> values) {
        for (int v : values)
            if (v < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
        std::sort(values.begin(), values.end(), std::greater<int>());
        while (!values.empty() && values.back() == 0)
            values.pop_back();
        return Partition(std::move(values));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; 0 beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return !(*this == other); }
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
};

// 1-based cell of a Young diagram.
struct Cell {
    int row = 1;
    int col = 1;
    bool operator==(const Cell& other) const { return row == other.row && col == other.col; }
    bool operator!=(const Cell& other) const { return !(*this == other); }
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.resize(static_cast<std::size_t>(p.part(1)), 0);
        for (int part : p.parts())
            for (int c = 0; c < part; ++c)
                ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

// Largest d with a cell at (d, d).
inline int durfee(const Partition& p) {
    int d = 0;
    while (p.part(d + 1) >= d + 1)
        ++d;
    return d;
}

// Threshold: every column up to the Durfee square is one longer than the row.
inline bool is_threshold(const Partition& p) {
    Partition conj = conjugate(p);
    int d = durfee(p);
    for (int i = 1; i <= d; ++i)
        if (conj.part(i) != p.part(i) + 1)
            return false;
    return true;
}

// Hook: no 2x2 square, i.e. at most one part exceeding 1.
inline bool is_hook(const Partition& p) { return p.part(2) <= 1; }

// Dominance order against an arbitrary nonnegative sequence; requires equal totals.
inline bool dominates(const Partition& lambda, const std::vector<int>& mu) {
    std::vector<int> sorted = mu;
    for (int v : sorted)
        if (v < 0)
            throw std::invalid_argument("dominance comparison requires nonnegative entries");
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::size_t len = std::max(sorted.size(), static_cast<std::size_t>(lambda.length()));
    long long lhs = 0, rhs = 0;
    for (std::size_t k = 0; k < len; ++k) {
        lhs += lambda.part(static_cast<int>(k + 1));
        rhs += k < sorted.size() ? sorted[k] : 0;
        if (lhs < rhs)
            return false;
    }
    return lhs == rhs;
}

// The involution pairing cells across the diagonal of a threshold diagram.
inline Cell opposite_position(Cell c) {
    if (c.row < 1 || c.col < 1)
        throw std::invalid_argument("cell coordinates are 1-based");
    if (c.row <= c.col)
        return Cell{c.col + 1, c.row};
    return Cell{c.col, c.row - 1};
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        stack.push_back(next);
        partitions_rec(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

inline void strict_partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        stack.push_back(next);
        strict_partitions_rec(remaining - next, next - 1, stack, out);
        stack.pop_back();
    }
}

} // namespace detail

inline std::vector<Partition> all_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> stack;
    detail::partitions_rec(n, n, stack, out);
    return out;
}

inline std::vector<Partition> strict_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> stack;
    detail::strict_partitions_rec(n, n, stack, out);
    return out;
}

// Direct construction of the threshold partitions of n: a threshold partition with
// Durfee size d is determined by the strict partition of n/2 formed by the row arms
// through the diagonal. The columns through the diagonal are those arms plus one,
// which fixes the rows below the Durfee square by conjugation.
inline std::vector<Partition> threshold_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    if (n % 2 != 0)
        return out;
    for (const Partition& alpha : strict_partitions(n / 2)) {
        int d = alpha.length();
        std::vector<int> cols;
        for (int i = 1; i <= d; ++i)
            cols.push_back(alpha.part(i) + i);
        // Columns beyond the Durfee square come from the top-piece rows alone.
        int top_width = alpha.part(1) + 0; // lambda_1 = alpha_1 + 1 - 1
        for (int c = d + 1; c <= top_width; ++c) {
            int height = 0;
            for (int i = 1; i <= d; ++i)
                if (alpha.part(i) + i - 1 >= c)
                    ++height;
            if (height > 0)
                cols.push_back(height);
        }
        out.push_back(conjugate(Partition::sorted_from(std::move(cols))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace burge
