#ifndef GPACK_BITSET_HPP
#define GPACK_BITSET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gpack {

// Fixed-width bit vector used for adjacency rows and vertex sets.
// All set operations are word-parallel; sizes must match.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
    }

    static Bitset all_set(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.clear_padding();
        return b;
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        check_size(o);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & o.words_[k]) return true;
        }
        return false;
    }

    int intersection_count(const Bitset& o) const {
        check_size(o);
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            c += std::popcount(words_[k] & o.words_[k]);
        }
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        check_size(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        check_size(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    // set difference: this \ o
    Bitset& operator-=(const Bitset& o) {
        check_size(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // index of lowest set bit, -1 if empty
    int find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
        }
        return -1;
    }

    // index of lowest set bit > prev, -1 if none
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64) + std::countr_zero(w);
            if (++k == words_.size()) return -1;
            w = words_[k];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
    }
    void check_size(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset: size mismatch");
    }
    void clear_padding() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gpack

#endif
