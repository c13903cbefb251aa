#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "burge/partition.hpp"

namespace burge {

// Edge of a simple graph in canonical (max, min) form.
struct Edge {
    int hi = 0;
    int lo = 0;
    bool operator==(const Edge& other) const { return hi == other.hi && lo == other.lo; }
    bool operator!=(const Edge& other) const { return !(*this == other); }
};

// Burge column order: top entries ascending, bottom descending under equal tops.
inline bool burge_column_less(const Edge& a, const Edge& b) {
    if (a.hi != b.hi)
        return a.hi < b.hi;
    return a.lo > b.lo;
}

// Simple labelled graph on vertices [n]; edges kept in Burge column order.
class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 0)
            throw std::invalid_argument("vertex count must be nonnegative");
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a == b)
                throw std::invalid_argument("simple graphs have no loops");
            if (a < 1 || b < 1 || a > n || b > n)
                throw std::invalid_argument("edge endpoint outside the vertex set");
            edges_.push_back(Edge{std::max(a, b), std::min(a, b)});
        }
        std::sort(edges_.begin(), edges_.end(), burge_column_less);
        for (std::size_t k = 1; k < edges_.size(); ++k)
            if (edges_[k] == edges_[k - 1])
                throw std::invalid_argument("simple graphs have no repeated edges");
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const SimpleGraph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Two-line array of edge columns: top weakly increasing, bottom strictly
// decreasing within equal top entries, top > bottom in every column.
class BurgeArray {
public:
    BurgeArray() = default;

    static BurgeArray from_rows(std::vector<int> top, std::vector<int> bottom) {
        if (top.size() != bottom.size())
            throw std::invalid_argument("Burge array rows must have equal length");
        for (std::size_t k = 0; k < top.size(); ++k) {
            if (bottom[k] < 1)
                throw std::invalid_argument("Burge array entries must be positive");
            if (top[k] <= bottom[k])
                throw std::invalid_argument("Burge array columns need top greater than bottom");
            if (k > 0) {
                if (top[k - 1] > top[k])
                    throw std::invalid_argument("Burge array top row must weakly increase");
                if (top[k - 1] == top[k] && bottom[k - 1] <= bottom[k])
                    throw std::invalid_argument(
                        "Burge array bottom row must strictly decrease under equal top entries");
            }
        }
        BurgeArray a;
        a.top_ = std::move(top);
        a.bottom_ = std::move(bottom);
        return a;
    }

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    int columns() const { return static_cast<int>(top_.size()); }
    bool empty() const { return top_.empty(); }

    int max_entry() const {
        int m = 0;
        for (int v : top_)
            m = std::max(m, v);
        return m;
    }

    bool operator==(const BurgeArray& other) const {
        return top_ == other.top_ && bottom_ == other.bottom_;
    }
    bool operator!=(const BurgeArray& other) const { return !(*this == other); }

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

// Singleton vertices leave no trace in the array.
inline BurgeArray to_burge_array(const SimpleGraph& g) {
    std::vector<int> top, bottom;
    top.reserve(g.edges().size());
    bottom.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        top.push_back(e.hi);
        bottom.push_back(e.lo);
    }
    return BurgeArray::from_rows(std::move(top), std::move(bottom));
}

inline SimpleGraph from_burge_array(const BurgeArray& a, int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(a.columns()));
    for (int k = 0; k < a.columns(); ++k) {
        if (a.top()[static_cast<std::size_t>(k)] > n)
            throw std::invalid_argument("Burge array entry exceeds the vertex count");
        edges.emplace_back(a.top()[static_cast<std::size_t>(k)],
                           a.bottom()[static_cast<std::size_t>(k)]);
    }
    return SimpleGraph(n, edges);
}

inline std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++d[static_cast<std::size_t>(e.hi - 1)];
        ++d[static_cast<std::size_t>(e.lo - 1)];
    }
    return d;
}

inline Partition degree_partition(const SimpleGraph& g) {
    return Partition::sorted_from(degree_sequence(g));
}

inline bool is_threshold_graph(const SimpleGraph& g) {
    return is_threshold(degree_partition(g));
}

// Graphic iff dominated by some threshold partition of the same even total.
inline bool is_graphic(const std::vector<int>& d) {
    long long sum = 0;
    for (int v : d) {
        if (v < 0)
            throw std::invalid_argument("degree sequences are nonnegative");
        sum += v;
    }
    if (sum % 2 != 0)
        return false;
    for (const Partition& lambda : threshold_partitions(static_cast<int>(sum)))
        if (dominates(lambda, d))
            return true;
    return false;
}

inline SimpleGraph star(int n, int center) {
    if (n < 1)
        throw std::invalid_argument("star graphs need at least one vertex");
    if (center < 1 || center > n)
        throw std::invalid_argument("star center outside the vertex set");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        if (v != center)
            edges.emplace_back(center, v);
    return SimpleGraph(n, edges);
}

// All possible edges on [n] in (hi, lo) lexicographic order; fixes the
// bitmask convention used by the exhaustive enumeration.
inline std::vector<std::pair<int, int>> all_edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int hi = 2; hi <= n; ++hi)
        for (int lo = 1; lo < hi; ++lo)
            slots.emplace_back(hi, lo);
    return slots;
}

// Range over all 2^(n(n-1)/2) simple graphs on [n], mask-ascending.
class GraphEnumeration {
public:
    explicit GraphEnumeration(int n, int cap = 7) : n_(n) {
        if (n < 0)
            throw std::invalid_argument("vertex count must be nonnegative");
        if (n > cap)
            throw std::invalid_argument("graph enumeration exceeds the configured vertex cap");
        slots_ = all_edge_slots(n);
        total_ = std::uint64_t{1} << slots_.size();
    }

    class iterator {
    public:
        iterator(const GraphEnumeration* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}

        SimpleGraph operator*() const {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t j = 0; j < owner_->slots_.size(); ++j)
                if (mask_ & (std::uint64_t{1} << j))
                    edges.push_back(owner_->slots_[j]);
            return SimpleGraph(owner_->n_, edges);
        }

        iterator& operator++() {
            ++mask_;
            return *this;
        }

        bool operator==(const iterator& other) const { return mask_ == other.mask_; }
        bool operator!=(const iterator& other) const { return mask_ != other.mask_; }

    private:
        const GraphEnumeration* owner_;
        std::uint64_t mask_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, total_); }
    std::uint64_t size() const { return total_; }

private:
    int n_;
    std::vector<std::pair<int, int>> slots_;
    std::uint64_t total_;
};

inline int connected_component_count(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.hi - 1), b = find(e.lo - 1);
        if (a != b)
            parent[static_cast<std::size_t>(a)] = b;
    }
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v)
            ++components;
    return components;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.vertex_count() <= 1 || connected_component_count(g) == 1;
}

inline bool is_acyclic(const SimpleGraph& g) {
    return g.edge_count() == g.vertex_count() - connected_component_count(g);
}

} // namespace burge
