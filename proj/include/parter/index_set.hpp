#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "parter/errors.hpp"

namespace parter {

/// An ordered set of 1-based indices (the sets written α, β, γ, τ).
/// Always strictly increasing; may be empty. Members are validated to be
/// >= 1 at construction and against a matrix order at the point of use.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::initializer_list<int> indices)
        : IndexSet(std::vector<int>(indices)) {}

    explicit IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
        std::sort(idx_.begin(), idx_.end());
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (idx_[i] < 1)
                throw InvalidArgumentError("IndexSet: indices are 1-based, got " +
                                           std::to_string(idx_[i]));
            if (i > 0 && idx_[i] == idx_[i - 1])
                throw InvalidArgumentError("IndexSet: duplicate index " +
                                           std::to_string(idx_[i]));
        }
    }

    /// {1, 2, ..., n}
    static IndexSet full(int n) {
        IndexSet s;
        s.idx_.reserve(n > 0 ? n : 0);
        for (int i = 1; i <= n; ++i) s.idx_.push_back(i);
        return s;
    }

    /// Bit b of the mask set means index b+1 is a member.
    static IndexSet from_mask(std::uint64_t mask) {
        IndexSet s;
        for (int b = 0; b < 64; ++b)
            if (mask & (std::uint64_t{1} << b)) s.idx_.push_back(b + 1);
        return s;
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int i : idx_) {
            if (i > 64)
                throw InvalidArgumentError("IndexSet: mask() limited to indices <= 64");
            m |= std::uint64_t{1} << (i - 1);
        }
        return m;
    }

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }

    bool contains(int i) const {
        return std::binary_search(idx_.begin(), idx_.end(), i);
    }

    /// 0-based position of member i within the increasing list.
    int position_of(int i) const {
        auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
        if (it == idx_.end() || *it != i)
            throw InvalidArgumentError("IndexSet: " + std::to_string(i) +
                                       " is not a member");
        return static_cast<int>(it - idx_.begin());
    }

    /// Member at 0-based position within the increasing list.
    int operator[](int pos) const { return idx_[static_cast<std::size_t>(pos)]; }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<int>& values() const { return idx_; }

    /// Throws BoundsError unless every member lies in [1, n].
    void check_bounds(int n) const {
        if (!idx_.empty() && idx_.back() > n)
            throw BoundsError("index " + std::to_string(idx_.back()) +
                              " out of range for order " + std::to_string(n));
    }

    /// {1..n} \ this. Requires every member <= n.
    IndexSet complement(int n) const {
        check_bounds(n);
        IndexSet s;
        s.idx_.reserve(static_cast<std::size_t>(n) - idx_.size());
        std::size_t p = 0;
        for (int i = 1; i <= n; ++i) {
            if (p < idx_.size() && idx_[p] == i) { ++p; continue; }
            s.idx_.push_back(i);
        }
        return s;
    }

    IndexSet with(int i) const {
        if (contains(i)) return *this;
        IndexSet s = *this;
        s.idx_.insert(std::upper_bound(s.idx_.begin(), s.idx_.end(), i), i);
        if (i < 1) throw InvalidArgumentError("IndexSet: indices are 1-based");
        return s;
    }

    IndexSet without(int i) const {
        IndexSet s = *this;
        auto it = std::lower_bound(s.idx_.begin(), s.idx_.end(), i);
        if (it != s.idx_.end() && *it == i) s.idx_.erase(it);
        return s;
    }

    bool subset_of(const IndexSet& other) const {
        return std::includes(other.idx_.begin(), other.idx_.end(),
                             idx_.begin(), idx_.end());
    }

    /// 1-based positions of this set's members inside `superset`.
    /// Every member must be in `superset`.
    IndexSet positions_in(const IndexSet& superset) const {
        std::vector<int> pos;
        pos.reserve(idx_.size());
        for (int i : idx_) {
            auto it = std::lower_bound(superset.idx_.begin(), superset.idx_.end(), i);
            if (it == superset.idx_.end() || *it != i)
                throw InvalidArgumentError("positions_in: " + std::to_string(i) +
                                           " not in superset");
            pos.push_back(static_cast<int>(it - superset.idx_.begin()) + 1);
        }
        return IndexSet(std::move(pos));
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.idx_ == b.idx_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return a.idx_ != b.idx_; }
    /// Sequence-lexicographic order ({2} < {2,4} < {4}).
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> idx_;
};

} // namespace parter
