#pragma once

// Small shared utilities: dynamic bitsets over a fixed-size universe,
// typed error classes, and hashing/canonicalization helpers used by the
// enumeration code throughout the library.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idem {

// Thrown when an input document or table fails a structural law
// (non-associative addition, malformed partition, ...).  The message names
// the violated law and a witness.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation's precondition on the *kind* of structure fails
// (e.g. an enumerative operation applied to a non-idempotent carrier).
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on malformed input documents (JSON shape, unknown labels, ...).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A subset of {0, ..., n-1}.  Fixed universe size, value semantics,
// lexicographically comparable so families of subsets can be canonically
// ordered and deduplicated.
class bits {
public:
    bits() = default;
    explicit bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static bits full(int n) {
        bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool empty() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    bits& operator|=(const bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bits& operator&=(const bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend bits operator|(bits a, const bits& b) { return a |= b; }
    friend bits operator&(bits a, const bits& b) { return a &= b; }

    bits complement() const {
        bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool subset_of(const bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const bits& o) const { return !(*this == o); }
    // Order by cardinality first, then lexicographically on words; gives the
    // canonical enumeration order used in all output documents.
    bool operator<(const bits& o) const {
        int c1 = count(), c2 = o.count();
        if (c1 != c2) return c1 < c2;
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t x : w_) h ^= std::hash<uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct bits_hash {
    size_t operator()(const bits& b) const { return b.hash(); }
};

// Canonicalize a family of subsets: sort + dedupe.
void canonicalize_family(std::vector<bits>& family);

// "{a,b,c}" rendering of a subset under the given element names.
std::string subset_label(const bits& b, const std::vector<std::string>& names);

}  // namespace idem
