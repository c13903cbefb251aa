#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "burge/partition.hpp"

namespace burge {

using Word = std::vector<int>;

// Semistandard Young tableau, stored row-major with 1-based values.
// The shape is derived from the row lengths, never stored separately.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        validate();
    }

    Tableau(std::initializer_list<std::vector<int>> rows)
        : rows_(rows.begin(), rows.end()) {
        validate();
    }

    // Caller guarantees semistandardness; used on hot paths that construct
    // provably valid fillings.
    static Tableau unchecked(std::vector<std::vector<int>> rows) {
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int row_count() const { return static_cast<int>(rows_.size()); }

    int cell_count() const {
        int n = 0;
        for (const auto& row : rows_)
            n += static_cast<int>(row.size());
        return n;
    }

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_)
            parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    int at(Cell c) const {
        return rows_.at(static_cast<std::size_t>(c.row - 1)).at(static_cast<std::size_t>(c.col - 1));
    }

    int max_entry() const {
        int m = 0;
        for (const auto& row : rows_)
            for (int v : row)
                m = std::max(m, v);
        return m;
    }

    bool operator==(const Tableau& other) const { return rows_ == other.rows_; }
    bool operator!=(const Tableau& other) const { return !(*this == other); }
    bool operator<(const Tableau& other) const { return rows_ < other.rows_; }

private:
    void validate() const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                throw std::invalid_argument("tableau rows must be nonempty");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw std::invalid_argument("tableau row lengths must weakly decrease");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] < 1)
                    throw std::invalid_argument("tableau entries must be positive");
                if (c > 0 && rows_[r][c] < rows_[r][c - 1])
                    throw std::invalid_argument("tableau rows must weakly increase");
                if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }

    std::vector<std::vector<int>> rows_;
};

// Schensted row insertion. Bumps the leftmost entry strictly greater than the
// inserted value; equal entries are never bumped.
inline std::pair<Tableau, Cell> insert(const Tableau& t, int x) {
    if (x < 1)
        throw std::invalid_argument("inserted letters must be positive");
    auto rows = t.rows();
    int cur = x;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            Cell added{static_cast<int>(r + 1), static_cast<int>(row.size())};
            return {Tableau::unchecked(std::move(rows)), added};
        }
        std::swap(cur, *it);
    }
    rows.push_back({cur});
    Cell added{static_cast<int>(rows.size()), 1};
    return {Tableau::unchecked(std::move(rows)), added};
}

// Schensted reverse bumping from a removable corner; inverts insert.
inline std::pair<Tableau, int> reverse_bump(const Tableau& t, Cell c) {
    auto rows = t.rows();
    if (c.row < 1 || c.row > static_cast<int>(rows.size()))
        throw std::invalid_argument("reverse bumping cell lies outside the tableau");
    auto& row = rows[static_cast<std::size_t>(c.row - 1)];
    if (c.col != static_cast<int>(row.size()))
        throw std::invalid_argument("reverse bumping must start at the end of a row");
    if (c.row < static_cast<int>(rows.size()) &&
        static_cast<int>(rows[static_cast<std::size_t>(c.row)].size()) >= c.col)
        throw std::invalid_argument("reverse bumping must start at a removable corner");

    int cur = row.back();
    row.pop_back();
    if (row.empty())
        rows.pop_back();
    for (int r = c.row - 2; r >= 0; --r) {
        auto& above = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(above.begin(), above.end(), cur);
        if (it == above.begin())
            throw std::invalid_argument("reverse bumping found no smaller entry above");
        --it;
        std::swap(cur, *it);
    }
    return {Tableau::unchecked(std::move(rows)), cur};
}

inline Tableau schensted_p(const Word& w) {
    Tableau t;
    for (int letter : w)
        t = insert(t, letter).first;
    return t;
}

// Rows bottom to top, each left to right.
inline Word reading_word(const Tableau& t) {
    Word w;
    const auto& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

// Subword of the reading word over the alphabet {i, i+1}.
inline Word restricted_reading_word(const Tableau& t, int i) {
    Word out;
    for (int letter : reading_word(t))
        if (letter == i || letter == i + 1)
            out.push_back(letter);
    return out;
}

// Letter multiplicities up to the maximum entry.
inline std::vector<int> weight(const Tableau& t) {
    std::vector<int> counts(static_cast<std::size_t>(t.max_entry()), 0);
    for (const auto& row : t.rows())
        for (int v : row)
            ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
}

inline std::vector<int> word_content(const Word& w) {
    int m = 0;
    for (int letter : w) {
        if (letter < 1)
            throw std::invalid_argument("word letters must be positive");
        m = std::max(m, letter);
    }
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int letter : w)
        ++counts[static_cast<std::size_t>(letter - 1)];
    return counts;
}

namespace detail {

inline void check_alphabet(const std::vector<int>& alphabet, std::size_t expected) {
    if (alphabet.size() != expected)
        throw std::invalid_argument("standardization alphabet size must match the object size");
    for (std::size_t i = 1; i < alphabet.size(); ++i)
        if (alphabet[i] <= alphabet[i - 1])
            throw std::invalid_argument("standardization alphabet must strictly increase");
    if (!alphabet.empty() && alphabet.front() < 1)
        throw std::invalid_argument("standardization alphabet must be positive");
}

} // namespace detail

// Relabels equal entries left to right (by column) into the strictly increasing
// alphabet, value class by value class.
inline Tableau standardize_tableau(const Tableau& t, const std::vector<int>& alphabet) {
    detail::check_alphabet(alphabet, static_cast<std::size_t>(t.cell_count()));
    // (value, col, row) sorted gives the replacement order; equal values never
    // share a column in a semistandard filling.
    std::vector<std::tuple<int, int, int>> order;
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            order.emplace_back(rows[r][c], static_cast<int>(c), static_cast<int>(r));
    std::sort(order.begin(), order.end());
    auto out = rows;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        auto [value, c, r] = order[idx];
        out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = alphabet[idx];
    }
    return Tableau(std::move(out));
}

inline Word standardize_word(const Word& w, const std::vector<int>& alphabet) {
    detail::check_alphabet(alphabet, w.size());
    std::vector<std::pair<int, std::size_t>> order;
    order.reserve(w.size());
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w[pos] < 1)
            throw std::invalid_argument("word letters must be positive");
        order.emplace_back(w[pos], pos);
    }
    std::sort(order.begin(), order.end());
    Word out(w.size());
    for (std::size_t idx = 0; idx < order.size(); ++idx)
        out[order[idx].second] = alphabet[idx];
    return out;
}

inline bool knuth_equivalent(const Word& w, const Word& v) {
    return schensted_p(w) == schensted_p(v);
}

namespace detail {

inline void enumerate_ssyt_rec(const Partition& shape, int max_entry,
                               std::vector<std::vector<int>>& rows, int r, int c,
                               std::vector<Tableau>& out) {
    if (r == shape.length()) {
        out.push_back(Tableau::unchecked(rows));
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape.part(r + 1)) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0)
        lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        enumerate_ssyt_rec(shape, max_entry, rows, nr, nc, out);
    }
}

} // namespace detail

// All semistandard fillings of the shape with entries at most max_entry,
// in lexicographic row-major order.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.length() > max_entry && !shape.empty())
        return out;
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.length(); ++r)
        rows.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
    detail::enumerate_ssyt_rec(shape, max_entry, rows, shape.empty() ? shape.length() : 0, 0, out);
    return out;
}

} // namespace burge
