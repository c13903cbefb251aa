#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "burge/correspondence.hpp"
#include "burge/graph.hpp"

namespace burge {

// 1-based column indices i < j < k witnessing a peak or a valley.
struct IndexTriple {
    int i = 0;
    int j = 0;
    int k = 0;
    bool operator==(const IndexTriple& other) const {
        return i == other.i && j == other.j && k == other.k;
    }
};

// Peak: b_i <= b_k, j minimal in (i, k) with b_k < b_j, and a_i <= b_j.
// The minimality of j is bound to the (i, k) pair; a plain triple scan is
// wrong. Returns the least witness ordered by (i, k).
inline std::optional<IndexTriple> find_peak(const BurgeArray& arr) {
    const auto& a = arr.top();
    const auto& b = arr.bottom();
    int r = arr.columns();
    for (int i = 0; i < r; ++i)
        for (int k = i + 2; k < r; ++k) {
            if (b[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(k)])
                continue;
            int j = -1;
            for (int cand = i + 1; cand < k; ++cand)
                if (b[static_cast<std::size_t>(cand)] > b[static_cast<std::size_t>(k)]) {
                    j = cand;
                    break;
                }
            if (j < 0)
                continue;
            if (a[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(j)])
                return IndexTriple{i + 1, j + 1, k + 1};
        }
    return std::nullopt;
}

// Valley: b_j <= b_k < a_j and b_j < b_i. Plain scan, least (i, j, k).
inline std::optional<IndexTriple> find_valley(const BurgeArray& arr) {
    const auto& a = arr.top();
    const auto& b = arr.bottom();
    int r = arr.columns();
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (b[static_cast<std::size_t>(j)] >= b[static_cast<std::size_t>(i)])
                continue;
            for (int k = j + 1; k < r; ++k)
                if (b[static_cast<std::size_t>(j)] <= b[static_cast<std::size_t>(k)] &&
                    b[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(j)])
                    return IndexTriple{i + 1, j + 1, k + 1};
        }
    return std::nullopt;
}

inline bool is_pv_free(const BurgeArray& arr) {
    return !find_peak(arr) && !find_valley(arr);
}

inline bool is_hook_graph(const SimpleGraph& g) {
    return is_pv_free(to_burge_array(g));
}

// Order-preserving column selection; the array invariants survive deletion.
inline BurgeArray subarray(const BurgeArray& arr, const std::vector<int>& columns) {
    std::vector<int> top, bottom;
    top.reserve(columns.size());
    bottom.reserve(columns.size());
    int prev = -1;
    for (int k : columns) {
        if (k < 0 || k >= arr.columns())
            throw std::invalid_argument("subarray column index out of range");
        if (k <= prev)
            throw std::invalid_argument("subarray columns must strictly increase");
        prev = k;
        top.push_back(arr.top()[static_cast<std::size_t>(k)]);
        bottom.push_back(arr.bottom()[static_cast<std::size_t>(k)]);
    }
    return BurgeArray::from_rows(std::move(top), std::move(bottom));
}

// Maximum size of a PV-free column subsequence, by brute force over all
// subsequences. Peak minimality is re-derived within each candidate.
inline int longest_pv_free_subarray(const BurgeArray& arr, int cap = 15) {
    int r = arr.columns();
    if (r > cap)
        throw std::invalid_argument("array too wide for brute-force subsequence search");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
        int size = 0;
        std::vector<int> cols;
        for (int k = 0; k < r; ++k)
            if (mask & (std::uint32_t{1} << k)) {
                cols.push_back(k);
                ++size;
            }
        if (size <= best)
            continue;
        if (is_pv_free(subarray(arr, cols)))
            best = size;
    }
    return best;
}

} // namespace burge
