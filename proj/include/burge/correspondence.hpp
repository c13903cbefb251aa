#pragma once

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "burge/graph.hpp"
#include "burge/partition.hpp"
#include "burge/tableau.hpp"

namespace burge {

// Full mode re-validates semistandardness and threshold shape after every
// insertion step; fast mode trusts the column order of the input array.
enum class Validate { fast, full };

// One step of the Burge correspondence: Schensted-insert the bottom entry,
// then record the top entry at the opposite position of the new cell.
inline Tableau burge_insert(const Tableau& t, int a, int b, Validate mode = Validate::full) {
    if (a <= b)
        throw std::invalid_argument("Burge columns need top greater than bottom");
    auto [inserted, cell] = insert(t, b);
    Cell record = opposite_position(cell);
    auto rows = inserted.rows();
    if (record.row == static_cast<int>(rows.size()) + 1 && record.col == 1) {
        rows.push_back({a});
    } else if (record.row <= static_cast<int>(rows.size()) &&
               static_cast<int>(rows[static_cast<std::size_t>(record.row - 1)].size()) ==
                   record.col - 1) {
        rows[static_cast<std::size_t>(record.row - 1)].push_back(a);
    } else {
        throw std::invalid_argument("Burge insertion does not extend the shape by a corner; "
                                    "columns were inserted out of order");
    }
    if (mode == Validate::fast)
        return Tableau::unchecked(std::move(rows));
    Tableau result(std::move(rows)); // rejects non-semistandard fillings
    if (!is_threshold(result.shape()))
        throw std::invalid_argument("Burge insertion left a non-threshold shape");
    return result;
}

inline Tableau encode(const BurgeArray& a, Validate mode = Validate::full) {
    Tableau t;
    for (int k = 0; k < a.columns(); ++k)
        t = burge_insert(t, a.top()[static_cast<std::size_t>(k)],
                         a.bottom()[static_cast<std::size_t>(k)], mode);
    return t;
}

namespace detail {

// Cell holding the maximum value; ties on value resolved by the larger column
// index. Column strictness makes the row unique once the column is fixed, but
// the row tie-break keeps the choice total on malformed input.
inline Cell max_entry_cell(const Tableau& t) {
    Cell best{0, 0};
    int best_value = 0;
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            Cell here{static_cast<int>(r + 1), static_cast<int>(c + 1)};
            if (v > best_value || (v == best_value && here.col > best.col) ||
                (v == best_value && here.col == best.col && here.row > best.row)) {
                best = here;
                best_value = v;
            }
        }
    return best;
}

inline Tableau remove_cell(const Tableau& t, Cell c) {
    auto rows = t.rows();
    auto& row = rows.at(static_cast<std::size_t>(c.row - 1));
    if (static_cast<int>(row.size()) != c.col)
        throw std::invalid_argument("can only remove the last cell of a row");
    row.pop_back();
    if (row.empty()) {
        if (c.row != static_cast<int>(rows.size()))
            throw std::invalid_argument("removing the cell breaks the shape");
        rows.pop_back();
    }
    return Tableau::unchecked(std::move(rows));
}

} // namespace detail

// Inverse of encode. Repeatedly removes the largest entry with largest column
// index, reverse-bumps from its opposite cell, and emits the recovered column.
inline BurgeArray decode(const Tableau& t) {
    if (!is_threshold(t.shape()))
        throw std::invalid_argument("decoding requires a tableau of threshold shape");
    std::vector<int> top_rev, bottom_rev;
    Tableau cur = t;
    while (!cur.empty()) {
        Cell record_cell = detail::max_entry_cell(cur);
        int a = cur.at(record_cell);
        Tableau without = detail::remove_cell(cur, record_cell);
        Cell bump_cell = opposite_position(record_cell);
        auto [rest, b] = reverse_bump(without, bump_cell);
        if (a <= b)
            throw std::invalid_argument("tableau is not a Burge image: recovered column "
                                        "has top not exceeding bottom");
        top_rev.push_back(a);
        bottom_rev.push_back(b);
        cur = std::move(rest);
    }
    std::reverse(top_rev.begin(), top_rev.end());
    std::reverse(bottom_rev.begin(), bottom_rev.end());
    return BurgeArray::from_rows(std::move(top_rev), std::move(bottom_rev));
}

inline Partition shape_of_graph(const SimpleGraph& g) {
    return encode(to_burge_array(g), Validate::fast).shape();
}

// Relabels each value class of the array left to right (by column) into the
// alphabet, block sizes given by the degree sequence of the underlying graph.
inline BurgeArray standardize_burge_array(const BurgeArray& a, const std::vector<int>& alphabet) {
    detail::check_alphabet(alphabet, static_cast<std::size_t>(2 * a.columns()));
    // (value, column, row) sorted gives the replacement order; a value never
    // repeats within a column because top > bottom there.
    std::vector<std::tuple<int, int, int>> order;
    for (int k = 0; k < a.columns(); ++k) {
        order.emplace_back(a.top()[static_cast<std::size_t>(k)], k, 0);
        order.emplace_back(a.bottom()[static_cast<std::size_t>(k)], k, 1);
    }
    std::sort(order.begin(), order.end());
    auto top = a.top();
    auto bottom = a.bottom();
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        auto [value, k, row] = order[idx];
        (row == 0 ? top : bottom)[static_cast<std::size_t>(k)] = alphabet[idx];
    }
    return BurgeArray::from_rows(std::move(top), std::move(bottom));
}

} // namespace burge
