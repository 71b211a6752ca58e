#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bpgap {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> row, std::size_t i) {
    return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set_bit(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear_bit(std::span<Word> row, std::size_t i) { row[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t popcount(std::span<const Word> row) {
    std::size_t c = 0;
    for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline bool any(std::span<const Word> row) {
    for (Word w : row)
        if (w) return true;
    return false;
}

// Calls f(index) for every set bit, in increasing order.
template <typename F>
void for_each_bit(std::span<const Word> row, F&& f) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        Word w = row[k];
        while (w) {
            f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

// Growable-once bitset with value semantics.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return test_bit(words_, i); }
    void set(std::size_t i) { set_bit(words_, i); }
    void reset(std::size_t i) { clear_bit(words_, i); }
    std::size_t count() const { return popcount(words_); }
    bool none() const { return !bpgap::any(words_); }

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each_bit(words_, [&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace bpgap
