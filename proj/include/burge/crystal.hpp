#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "burge/correspondence.hpp"
#include "burge/graph.hpp"
#include "burge/pvfree.hpp"
#include "burge/tableau.hpp"

namespace burge {

// ---------------------------------------------------------------------------
// Bracket pairing
// ---------------------------------------------------------------------------

// Result of cancelling every '(' directly left of a ')'. After cancellation
// all surviving closes precede all surviving opens.
struct BracketResult {
    std::vector<int> unpaired_close; // positions, ascending
    std::vector<int> unpaired_open;  // positions, ascending
    int pair_count = 0;
};

// Single left-to-right scan with an open-stack; equivalent to iterating the
// cancellation of adjacent "()" substrings.
inline BracketResult pair_brackets(const std::vector<bool>& is_open) {
    BracketResult res;
    std::vector<int> open_stack;
    for (int pos = 0; pos < static_cast<int>(is_open.size()); ++pos) {
        if (is_open[static_cast<std::size_t>(pos)]) {
            open_stack.push_back(pos);
        } else if (!open_stack.empty()) {
            open_stack.pop_back();
            ++res.pair_count;
        } else {
            res.unpaired_close.push_back(pos);
        }
    }
    res.unpaired_open = std::move(open_stack);
    return res;
}

// ---------------------------------------------------------------------------
// Crystal operators on semistandard tableaux
// ---------------------------------------------------------------------------

namespace detail {

struct TableauLetter {
    Cell cell;
    int letter;
};

// Reading-word letters restricted to {i, i+1}, with their cells.
inline std::vector<TableauLetter> restricted_letters(const Tableau& t, int i) {
    std::vector<TableauLetter> out;
    const auto& rows = t.rows();
    for (int r = static_cast<int>(rows.size()); r >= 1; --r) {
        const auto& row = rows[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
            int v = row[static_cast<std::size_t>(c - 1)];
            if (v == i || v == i + 1)
                out.push_back(TableauLetter{Cell{r, c}, v});
        }
    }
    return out;
}

inline std::vector<bool> opens_of(const std::vector<TableauLetter>& letters, int i) {
    std::vector<bool> opens;
    opens.reserve(letters.size());
    for (const auto& l : letters)
        opens.push_back(l.letter == i + 1);
    return opens;
}

inline Tableau with_entry(const Tableau& t, Cell cell, int value) {
    auto rows = t.rows();
    rows.at(static_cast<std::size_t>(cell.row - 1)).at(static_cast<std::size_t>(cell.col - 1)) =
        value;
    return Tableau(std::move(rows));
}

} // namespace detail

// Lowering operator: turns the i at the rightmost unpaired ')' into i+1.
inline std::optional<Tableau> f_tableau(const Tableau& t, int i) {
    if (i < 1)
        throw std::invalid_argument("crystal labels are positive");
    auto letters = detail::restricted_letters(t, i);
    auto brackets = pair_brackets(detail::opens_of(letters, i));
    if (brackets.unpaired_close.empty())
        return std::nullopt;
    Cell cell = letters[static_cast<std::size_t>(brackets.unpaired_close.back())].cell;
    return detail::with_entry(t, cell, i + 1);
}

// Raising operator: turns the i+1 at the leftmost unpaired '(' into i.
inline std::optional<Tableau> e_tableau(const Tableau& t, int i) {
    if (i < 1)
        throw std::invalid_argument("crystal labels are positive");
    auto letters = detail::restricted_letters(t, i);
    auto brackets = pair_brackets(detail::opens_of(letters, i));
    if (brackets.unpaired_open.empty())
        return std::nullopt;
    Cell cell = letters[static_cast<std::size_t>(brackets.unpaired_open.front())].cell;
    return detail::with_entry(t, cell, i);
}

inline int epsilon_tableau(const Tableau& t, int i) {
    auto letters = detail::restricted_letters(t, i);
    return static_cast<int>(pair_brackets(detail::opens_of(letters, i)).unpaired_open.size());
}

inline int phi_tableau(const Tableau& t, int i) {
    auto letters = detail::restricted_letters(t, i);
    return static_cast<int>(pair_brackets(detail::opens_of(letters, i)).unpaired_close.size());
}

// ---------------------------------------------------------------------------
// Crystal operators on PV-free Burge arrays
// ---------------------------------------------------------------------------

namespace detail {

struct ArrayLetter {
    int col;     // 0-based
    bool bottom; // row of the entry
    int letter;
};

struct ArrayReading {
    std::vector<ArrayLetter> letters;
    int pair_count = 0;
};

// Restricted reading word of the array: the leftmost top-row i+1 is promoted
// to the front when its column starts a fresh bottom-row rise; everything else
// is read column by column. A column holding both i+1 and i is necessarily
// that promoted column, so the scan never has to order letters inside one
// column.
inline std::vector<ArrayLetter> array_reading_letters(const BurgeArray& arr, int i) {
    const auto& a = arr.top();
    const auto& b = arr.bottom();
    int r = arr.columns();
    int promoted = -1;
    for (int k = 0; k < r; ++k)
        if (a[static_cast<std::size_t>(k)] == i + 1) {
            if (k == 0 || b[static_cast<std::size_t>(k - 1)] <= b[static_cast<std::size_t>(k)])
                promoted = k;
            break;
        }
    std::vector<ArrayLetter> out;
    if (promoted >= 0)
        out.push_back(ArrayLetter{promoted, false, i + 1});
    for (int k = 0; k < r; ++k) {
        int top_v = a[static_cast<std::size_t>(k)];
        int bot_v = b[static_cast<std::size_t>(k)];
        bool top_in = (top_v == i || top_v == i + 1);
        bool bot_in = (bot_v == i || bot_v == i + 1);
        if (top_in && bot_in && k != promoted)
            throw std::logic_error("a column holding both letters must start the reading word");
        if (top_in && k != promoted)
            out.push_back(ArrayLetter{k, false, top_v});
        if (bot_in)
            out.push_back(ArrayLetter{k, true, bot_v});
    }
    return out;
}

inline std::vector<bool> opens_of(const std::vector<ArrayLetter>& letters, int i) {
    std::vector<bool> opens;
    opens.reserve(letters.size());
    for (const auto& l : letters)
        opens.push_back(l.letter == i + 1);
    return opens;
}

inline void require_pv_free(const BurgeArray& arr) {
    if (!is_pv_free(arr))
        throw std::invalid_argument("crystal operators require a PV-free Burge array");
}

// Mechanics of the lowering operator without the PV-free precondition check;
// also used to verify candidate preimages inside the raising operator.
inline std::optional<BurgeArray> f_burge_mechanics(const BurgeArray& arr, int i) {
    auto letters = array_reading_letters(arr, i);
    auto brackets = pair_brackets(opens_of(letters, i));
    if (brackets.unpaired_close.empty())
        return std::nullopt;
    ArrayLetter x = letters[static_cast<std::size_t>(brackets.unpaired_close.back())];
    auto top = arr.top();
    auto bottom = arr.bottom();
    if (x.bottom && top[static_cast<std::size_t>(x.col)] == i + 1) {
        // The acted i shares its column with an i+1: rotate the block whose
        // bottom entries rise into column k.
        int k = x.col;
        if (k == 0)
            throw std::logic_error("a shared-letter column cannot be first: its letters would pair");
        int l = k - 1;
        while (l > 0 && bottom[static_cast<std::size_t>(l - 1)] <= bottom[static_cast<std::size_t>(l)])
            --l;
        int m = k;
        while (m >= l && bottom[static_cast<std::size_t>(m)] >= top[static_cast<std::size_t>(l)])
            --m;
        if (m < l)
            throw std::logic_error("no block entry below the leading top entry");
        const auto old_top = top;
        const auto old_bottom = bottom;
        for (int s = l; s + 2 <= k; ++s)
            top[static_cast<std::size_t>(s)] = old_top[static_cast<std::size_t>(s + 1)];
        top[static_cast<std::size_t>(k - 1)] = i + 1;
        bottom[static_cast<std::size_t>(m)] = old_top[static_cast<std::size_t>(l)];
        bottom[static_cast<std::size_t>(k)] = old_bottom[static_cast<std::size_t>(m)];
    } else {
        (x.bottom ? bottom : top)[static_cast<std::size_t>(x.col)] = i + 1;
    }
    return BurgeArray::from_rows(std::move(top), std::move(bottom));
}

} // namespace detail

// Restricted reading word of a Burge array.
inline Word burge_reading_word(const BurgeArray& arr, int i) {
    Word w;
    for (const auto& l : detail::array_reading_letters(arr, i))
        w.push_back(l.letter);
    return w;
}

// Number of pairings performed while cancelling the restricted reading word.
inline int burge_reading_pair_count(const BurgeArray& arr, int i) {
    auto letters = detail::array_reading_letters(arr, i);
    return pair_brackets(detail::opens_of(letters, i)).pair_count;
}

inline std::optional<BurgeArray> f_burge(const BurgeArray& arr, int i) {
    if (i < 1)
        throw std::invalid_argument("crystal labels are positive");
    detail::require_pv_free(arr);
    return detail::f_burge_mechanics(arr, i);
}

// Partial inverse of f_burge. The simple cases mirror a single letter change;
// the block case undoes the rotation. The block start cannot always be read
// off the raised array directly (the bottom-row rise may extend past it), so
// each admissible start is tried and checked by applying the lowering
// mechanics to the candidate.
inline std::optional<BurgeArray> e_burge(const BurgeArray& arr, int i) {
    if (i < 1)
        throw std::invalid_argument("crystal labels are positive");
    detail::require_pv_free(arr);
    auto letters = detail::array_reading_letters(arr, i);
    auto brackets = pair_brackets(detail::opens_of(letters, i));
    if (brackets.unpaired_open.empty())
        return std::nullopt;
    detail::ArrayLetter x = letters[static_cast<std::size_t>(brackets.unpaired_open.front())];
    const auto& top = arr.top();
    const auto& bottom = arr.bottom();
    if (!x.bottom && x.col >= 1 && top[static_cast<std::size_t>(x.col - 1)] == i + 1) {
        int k = x.col;
        int start = k - 1;
        while (start > 0 &&
               bottom[static_cast<std::size_t>(start - 1)] <= bottom[static_cast<std::size_t>(start)])
            --start;
        std::optional<BurgeArray> found;
        for (int l = start; l <= k - 1; ++l) {
            int m = -1;
            for (int cand = l; cand <= k; ++cand)
                if (bottom[static_cast<std::size_t>(cand)] > bottom[static_cast<std::size_t>(k)]) {
                    m = cand;
                    break;
                }
            if (m < 0)
                continue;
            auto cand_top = top;
            auto cand_bottom = bottom;
            cand_top[static_cast<std::size_t>(l)] = bottom[static_cast<std::size_t>(m)];
            for (int s = k - 1; s >= l + 1; --s)
                cand_top[static_cast<std::size_t>(s)] = top[static_cast<std::size_t>(s - 1)];
            cand_bottom[static_cast<std::size_t>(m)] = bottom[static_cast<std::size_t>(k)];
            cand_bottom[static_cast<std::size_t>(k)] = i;
            BurgeArray candidate;
            try {
                candidate = BurgeArray::from_rows(std::move(cand_top), std::move(cand_bottom));
            } catch (const std::invalid_argument&) {
                continue;
            }
            auto lowered = detail::f_burge_mechanics(candidate, i);
            if (lowered && *lowered == arr) {
                if (found && *found != candidate)
                    throw std::logic_error("raising operator found two distinct preimages");
                found = candidate;
            }
        }
        if (!found)
            throw std::logic_error("raising operator failed to invert the block lowering");
        return found;
    }
    auto new_top = top;
    auto new_bottom = bottom;
    (x.bottom ? new_bottom : new_top)[static_cast<std::size_t>(x.col)] = i;
    return BurgeArray::from_rows(std::move(new_top), std::move(new_bottom));
}

inline int epsilon_burge(const BurgeArray& arr, int i) {
    auto letters = detail::array_reading_letters(arr, i);
    return static_cast<int>(pair_brackets(detail::opens_of(letters, i)).unpaired_open.size());
}

inline int phi_burge(const BurgeArray& arr, int i) {
    auto letters = detail::array_reading_letters(arr, i);
    return static_cast<int>(pair_brackets(detail::opens_of(letters, i)).unpaired_close.size());
}

// ---------------------------------------------------------------------------
// Operator families and crystal graphs
// ---------------------------------------------------------------------------

struct TableauCrystalOps {
    using Object = Tableau;
    static std::optional<Object> f(const Object& t, int i) { return f_tableau(t, i); }
    static std::optional<Object> e(const Object& t, int i) { return e_tableau(t, i); }
    static std::vector<int> weight(const Object& t, int m) {
        auto w = burge::weight(t);
        w.resize(static_cast<std::size_t>(m), 0);
        return w;
    }
    static std::string key(const Object& t) {
        std::ostringstream os;
        bool digits = t.max_entry() <= 9;
        for (std::size_t r = 0; r < t.rows().size(); ++r) {
            if (r > 0)
                os << '/';
            for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
                if (c > 0 && !digits)
                    os << ',';
                os << t.rows()[r][c];
            }
        }
        return os.str();
    }
};

struct BurgeCrystalOps {
    using Object = BurgeArray;
    static std::optional<Object> f(const Object& a, int i) { return f_burge(a, i); }
    static std::optional<Object> e(const Object& a, int i) { return e_burge(a, i); }
    static std::vector<int> weight(const Object& a, int m) {
        std::vector<int> w(static_cast<std::size_t>(m), 0);
        for (int v : a.top())
            ++w.at(static_cast<std::size_t>(v - 1));
        for (int v : a.bottom())
            ++w.at(static_cast<std::size_t>(v - 1));
        return w;
    }
    static std::string key(const Object& a) {
        std::ostringstream os;
        bool digits = a.max_entry() <= 9;
        for (std::size_t k = 0; k < a.top().size(); ++k) {
            if (k > 0 && !digits)
                os << ',';
            os << a.top()[k];
        }
        os << '/';
        for (std::size_t k = 0; k < a.bottom().size(); ++k) {
            if (k > 0 && !digits)
                os << ',';
            os << a.bottom()[k];
        }
        return os.str();
    }
};

template <typename Obj>
struct CrystalGraph {
    struct EdgeRec {
        int src = 0;
        int dst = 0;
        int label = 0;
        bool operator==(const EdgeRec& other) const {
            return src == other.src && dst == other.dst && label == other.label;
        }
    };

    std::vector<Obj> vertices; // sorted by canonical key
    std::vector<std::vector<int>> weights;
    std::vector<EdgeRec> edges; // sorted by (src, label)
    int max_letter = 0;         // labels run over 1 .. max_letter-1
};

// BFS closure of the seeds under every f_i and e_i, deduplicated by canonical
// key; the result is independent of seed order.
template <typename Ops>
CrystalGraph<typename Ops::Object> generate_crystal(const std::vector<typename Ops::Object>& seeds,
                                                    int max_letter) {
    using Obj = typename Ops::Object;
    if (max_letter < 1)
        throw std::invalid_argument("crystal alphabet bound must be positive");
    std::map<std::string, Obj> visited;
    std::vector<Obj> frontier = seeds;
    for (const Obj& s : seeds)
        visited.emplace(Ops::key(s), s);
    while (!frontier.empty()) {
        std::vector<Obj> next;
        for (const Obj& v : frontier)
            for (int i = 1; i < max_letter; ++i)
                for (bool lower : {true, false}) {
                    auto img = lower ? Ops::f(v, i) : Ops::e(v, i);
                    if (img && visited.emplace(Ops::key(*img), *img).second)
                        next.push_back(*img);
                }
        frontier = std::move(next);
    }
    CrystalGraph<Obj> graph;
    graph.max_letter = max_letter;
    std::map<std::string, int> index;
    for (auto& [key, obj] : visited) {
        index.emplace(key, static_cast<int>(graph.vertices.size()));
        graph.vertices.push_back(obj);
    }
    for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
        graph.weights.push_back(Ops::weight(graph.vertices[static_cast<std::size_t>(v)], max_letter));
        for (int i = 1; i < max_letter; ++i) {
            auto img = Ops::f(graph.vertices[static_cast<std::size_t>(v)], i);
            if (img) {
                auto it = index.find(Ops::key(*img));
                if (it == index.end())
                    throw std::logic_error("crystal closure missed a lowering image");
                graph.edges.push_back({v, it->second, i});
            }
        }
    }
    return graph;
}

template <typename Ops>
bool is_highest_weight(const typename Ops::Object& x, int max_letter) {
    for (int i = 1; i < max_letter; ++i)
        if (Ops::e(x, i))
            return false;
    return true;
}

// Extremal: killed in one direction for every label, with weight in the
// permutation orbit of the component's highest weight.
template <typename Ops>
bool is_extremal(const typename Ops::Object& x, int max_letter) {
    for (int i = 1; i < max_letter; ++i)
        if (Ops::f(x, i) && Ops::e(x, i))
            return false;
    auto component = generate_crystal<Ops>({x}, max_letter);
    std::vector<int> highest;
    for (const auto& v : component.vertices)
        if (is_highest_weight<Ops>(v, max_letter)) {
            if (!highest.empty())
                throw std::logic_error("crystal component has two highest weight vertices");
            highest = Ops::weight(v, max_letter);
        }
    if (highest.empty())
        throw std::logic_error("crystal component has no highest weight vertex");
    auto mine = Ops::weight(x, max_letter);
    std::sort(highest.begin(), highest.end());
    std::sort(mine.begin(), mine.end());
    return highest == mine;
}

} // namespace burge
