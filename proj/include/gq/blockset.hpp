#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gq {

/// Eventually periodic subset of N, naming the union of the dyadic blocks
/// (2^{-(k+1)}, 2^{-k}] for the members k. Stored as a finite preperiod bit
/// string plus a nonempty period bit string applied cyclically afterwards.
///
/// Values are always canonical: the period has minimal length and the
/// preperiod is as short as possible, so structural equality is set equality
/// and membership is O(1).
class BlockSet {
public:
    BlockSet() : pre_(), per_("0") {}  // empty set

    static BlockSet empty_set() { return BlockSet(); }
    static BlockSet full_set() { return from_bits("", "1"); }

    /// Bits are '0'/'1'; pre may be empty, per must not be.
    static BlockSet from_bits(std::string pre, std::string per);

    /// Accepts the textual form `pre=<bits>;per=<bits>`.
    static BlockSet parse(std::string_view text);

    bool contains(std::size_t k) const {
        if (k < pre_.size()) return pre_[k] == '1';
        return per_[(k - pre_.size()) % per_.size()] == '1';
    }

    BlockSet complement() const;
    BlockSet unite(const BlockSet& o) const;
    BlockSet intersect(const BlockSet& o) const;
    BlockSet difference(const BlockSet& o) const;

    bool is_empty() const { return pre_.find('1') == std::string::npos && per_.find('1') == std::string::npos; }
    bool is_full() const { return pre_.find('0') == std::string::npos && per_.find('0') == std::string::npos; }

    /// True iff the set is infinite, i.e. the denoted union of blocks
    /// accumulates at 0.
    bool accumulates() const { return per_.find('1') != std::string::npos; }

    bool subset_of(const BlockSet& o) const { return difference(o).is_empty(); }

    /// The unique purely periodic set equal to this one modulo finitely many
    /// blocks (the periodic pattern extended backwards over the preperiod).
    /// Finite sets have an empty core.
    BlockSet periodic_core() const;

    /// Midpoints 3*2^{-(k+2)} of the first `count` member blocks, in
    /// increasing k (strictly decreasing epsilon).
    /// Throws Error(NotAccumulating) when the set is finite.
    std::vector<double> sample_epsilons(std::size_t count) const;

    /// Member blocks k with lo <= k <= hi.
    std::vector<std::size_t> blocks_in(std::size_t lo, std::size_t hi) const;

    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }

    std::string to_string() const { return "pre=" + pre_ + ";per=" + per_; }

    bool operator==(const BlockSet& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const BlockSet& o) const { return !(*this == o); }
    /// Canonical ordering, used to sort branch lists.
    bool operator<(const BlockSet& o) const {
        if (pre_ != o.pre_) return pre_ < o.pre_;
        return per_ < o.per_;
    }

private:
    std::string pre_;
    std::string per_;

    void canonicalize();
    static BlockSet combine(const BlockSet& a, const BlockSet& b, bool (*op)(bool, bool));
};

/// Midpoint of dyadic block k: 3*2^{-(k+2)}.
double block_midpoint(std::size_t k);

/// Block index of eps in (0,1]: the k with eps in (2^{-(k+1)}, 2^{-k}].
std::size_t block_of(double eps);

}  // namespace gq
