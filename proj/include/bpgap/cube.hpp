#pragma once

// Points and axis-aligned subcubes of the Boolean cube Q_d, the set S ⊂ Q_7 that
// defines the counterexample graph, and its explicit split into 30 squares.
//
// Coordinates are 1-based in every external form. A point's integer code puts
// coordinate 1 in the most significant bit, so lexicographic order of bit
// strings and numeric order of codes agree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bpgap/certificate.hpp"
#include "bpgap/error.hpp"

namespace bpgap {

class CubePoint {
public:
    CubePoint() = default;

    explicit CubePoint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw InvalidInput("CubePoint: dimension must be positive");
        for (auto b : bits_)
            if (b > 1) throw InvalidInput("CubePoint: bits must be 0 or 1");
    }

    static CubePoint from_code(std::size_t dim, std::uint32_t code) {
        std::vector<std::uint8_t> bits(dim);
        for (std::size_t i = 0; i < dim; ++i) bits[i] = (code >> (dim - 1 - i)) & 1u;
        return CubePoint(std::move(bits));
    }

    // "0110..." with coordinate 1 first.
    static CubePoint parse(const std::string& s) {
        std::vector<std::uint8_t> bits;
        for (char c : s) {
            if (c != '0' && c != '1') throw InvalidInput("CubePoint: bad bit string '" + s + "'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return CubePoint(std::move(bits));
    }

    static CubePoint ones(std::size_t dim) { return CubePoint(std::vector<std::uint8_t>(dim, 1)); }
    static CubePoint zeros(std::size_t dim) { return CubePoint(std::vector<std::uint8_t>(dim, 0)); }

    std::size_t dim() const { return bits_.size(); }
    // 1-based.
    std::uint8_t operator[](std::size_t coord) const { return bits_.at(coord - 1); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::uint32_t code() const {
        std::uint32_t c = 0;
        for (auto b : bits_) c = (c << 1) | b;
        return c;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    std::string str() const {
        std::string s;
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    // Concatenation x × y.
    CubePoint concat(const CubePoint& tail) const {
        auto bits = bits_;
        bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
        return CubePoint(std::move(bits));
    }

    friend auto operator<=>(const CubePoint&, const CubePoint&) = default;
    friend bool operator==(const CubePoint&, const CubePoint&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Records, per coordinate, whether two tuples differ. Works for any equal-arity
// integer tuples (grid points of [n]^d).
template <typename Int>
CubePoint rho(const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != y.size()) throw InvalidInput("rho: arity mismatch");
    if (x.empty()) throw InvalidInput("rho: arity must be positive");
    std::vector<std::uint8_t> bits(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) bits[i] = x[i] != y[i] ? 1 : 0;
    return CubePoint(std::move(bits));
}

class CubeSet {
public:
    explicit CubeSet(std::size_t dim) : dim_(dim) {
        if (dim == 0 || dim > 24) throw InvalidInput("CubeSet: dimension must be in [1, 24]");
    }

    static CubeSet full(std::size_t dim) {
        CubeSet s(dim);
        for (std::uint32_t c = 0; c < (1u << dim); ++c) s.insert(CubePoint::from_code(dim, c));
        return s;
    }

    // Q_d minus {0^d, 1^d}.
    static CubeSet punctured(std::size_t dim) {
        CubeSet s = full(dim);
        s.erase(CubePoint::zeros(dim));
        s.erase(CubePoint::ones(dim));
        return s;
    }

    // X × Y.
    static CubeSet product(const CubeSet& head, const CubeSet& tail) {
        CubeSet s(head.dim() + tail.dim());
        for (const auto& x : head.members())
            for (const auto& y : tail.members()) s.insert(x.concat(y));
        return s;
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return members_.size(); }
    const std::set<CubePoint>& members() const { return members_; }
    bool contains(const CubePoint& p) const { return members_.count(p) != 0; }

    void insert(const CubePoint& p) {
        if (p.dim() != dim_) throw InvalidInput("CubeSet: point of wrong dimension");
        members_.insert(p);
    }
    void erase(const CubePoint& p) { members_.erase(p); }
    void erase_all(const CubeSet& other) {
        for (const auto& p : other.members()) members_.erase(p);
    }

    // Membership indexed by point code; for fast adjacency tests.
    std::vector<bool> table() const {
        std::vector<bool> t(std::size_t{1} << dim_, false);
        for (const auto& p : members_) t[p.code()] = true;
        return t;
    }

    friend bool operator==(const CubeSet&, const CubeSet&) = default;

private:
    std::size_t dim_;
    std::set<CubePoint> members_;
};

class Subcube {
public:
    using Fixed = std::map<std::size_t, std::uint8_t>; // 1-based coordinate -> value

    Subcube(std::size_t dim, Fixed fixed) : dim_(dim), fixed_(std::move(fixed)) {
        if (dim == 0 || dim > 24) throw InvalidInput("Subcube: dimension must be in [1, 24]");
        for (const auto& [coord, value] : fixed_) {
            if (coord < 1 || coord > dim) throw InvalidInput("Subcube: fixed coordinate out of range");
            if (value > 1) throw InvalidInput("Subcube: fixed value must be 0 or 1");
        }
    }

    // The subcube spanned by a pattern such as "0*1*": '*' marks a free coordinate.
    static Subcube pattern(const std::string& pat) {
        Fixed fixed;
        for (std::size_t i = 0; i < pat.size(); ++i) {
            if (pat[i] == '0' || pat[i] == '1')
                fixed[i + 1] = static_cast<std::uint8_t>(pat[i] - '0');
            else if (pat[i] != '*')
                throw InvalidInput("Subcube: bad pattern '" + pat + "'");
        }
        return Subcube(pat.size(), std::move(fixed));
    }

    std::size_t dim() const { return dim_; }
    const Fixed& fixed() const { return fixed_; }
    std::size_t free_dim() const { return dim_ - fixed_.size(); }

    std::vector<std::size_t> free_coords() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 1; c <= dim_; ++c)
            if (!fixed_.count(c)) out.push_back(c);
        return out;
    }

    bool contains(const CubePoint& p) const {
        if (p.dim() != dim_) return false;
        for (const auto& [coord, value] : fixed_)
            if (p[coord] != value) return false;
        return true;
    }

    // 2^free_dim points, in increasing code order.
    std::vector<CubePoint> members() const {
        const auto free = free_coords();
        std::vector<CubePoint> out;
        out.reserve(std::size_t{1} << free.size());
        for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
            std::vector<std::uint8_t> bits(dim_);
            for (const auto& [coord, value] : fixed_) bits[coord - 1] = value;
            for (std::size_t k = 0; k < free.size(); ++k)
                bits[free[k] - 1] = (m >> (free.size() - 1 - k)) & 1u;
            out.emplace_back(std::move(bits));
        }
        return out;
    }

    std::string pattern_str() const {
        std::string s(dim_, '*');
        for (const auto& [coord, value] : fixed_) s[coord - 1] = static_cast<char>('0' + value);
        return s;
    }

    friend bool operator==(const Subcube&, const Subcube&) = default;

private:
    std::size_t dim_;
    Fixed fixed_;
};

// S = Q_7 \ [(1^4 × Q_3^-) ∪ {0^7} ∪ {0^4 × 1^3}], |S| = 120.
inline CubeSet build_S() {
    CubeSet s = CubeSet::full(7);
    CubeSet one4(4);
    one4.insert(CubePoint::ones(4));
    s.erase_all(CubeSet::product(one4, CubeSet::punctured(3)));
    s.erase(CubePoint::zeros(7));
    s.erase(CubePoint::parse("0000111"));
    return s;
}

// Q_3^- as three edges of Q_3 (in listing order).
inline std::vector<Subcube> punctured_q3_edges() {
    return {Subcube::pattern("0*1"), Subcube::pattern("*10"), Subcube::pattern("10*")};
}

// The 30 squares, in the order S' (12), S'' (4), S''' (14).
//
// S' pairs adjacent prefixes x1 ~ x2 of Q_4 and crosses the pair with each edge
// of Q_3^-. S'' lines are squares as written. Each S''' prefix splits Q_3 into
// {x_5 = 0} and {x_5 = 1}.
inline std::vector<Subcube> decompose_S() {
    std::vector<Subcube> parts;

    const std::pair<const char*, const char*> prefix_pairs[] = {
        {"0000", "0001"}, {"0011", "1011"}, {"0101", "0111"}, {"1101", "1001"}};
    for (const auto& [a, b] : prefix_pairs) {
        std::string prefix(4, '*');
        for (int i = 0; i < 4; ++i)
            if (a[i] == b[i]) prefix[i] = a[i];
        for (const auto& edge : punctured_q3_edges()) parts.push_back(Subcube::pattern(prefix + edge.pattern_str()));
    }

    for (const char* line : {"1**1000", "1**1111", "0**1000", "0**1111"}) parts.push_back(Subcube::pattern(line));

    for (const char* prefix : {"0010", "0100", "1000", "0110", "1010", "1100", "1110"}) {
        parts.push_back(Subcube::pattern(std::string(prefix) + "0**"));
        parts.push_back(Subcube::pattern(std::string(prefix) + "1**"));
    }
    return parts;
}

namespace detail {
inline std::string join_points(const std::vector<CubePoint>& pts) {
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty()) s += ' ';
        s += p.str();
    }
    return s;
}
} // namespace detail

// Passes iff the parts are pairwise disjoint and their union is exactly target.
inline Certificate verify_subcube_partition(const CubeSet& target, const std::vector<Subcube>& parts) {
    Certificate cert;
    cert.claim = "subcube_partition";
    cert.param("dim", target.dim()).param("target_size", target.size()).param("parts", parts.size());

    for (const auto& part : parts)
        if (part.dim() != target.dim()) throw InvalidInput("verify_subcube_partition: part of wrong dimension");

    std::map<CubePoint, std::size_t> hits;
    for (const auto& part : parts)
        for (const auto& p : part.members()) ++hits[p];

    std::vector<CubePoint> twice, outside, uncovered;
    for (const auto& [p, count] : hits) {
        if (count > 1) twice.push_back(p);
        if (!target.contains(p)) outside.push_back(p);
    }
    for (const auto& p : target.members())
        if (!hits.count(p)) uncovered.push_back(p);

    cert.pass = twice.empty() && outside.empty() && uncovered.empty();
    if (cert.pass) {
        cert.note("covered", target.size());
    } else {
        if (!twice.empty()) cert.note("covered_twice", detail::join_points(twice));
        if (!outside.empty()) cert.note("outside_target", detail::join_points(outside));
        if (!uncovered.empty()) cert.note("uncovered", detail::join_points(uncovered));
    }
    return cert;
}

} // namespace bpgap
