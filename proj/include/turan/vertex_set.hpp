#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

// Subset of a fixed vertex universe {0,...,n-1}, n <= 128. Two words, so
// membership, union, intersection and popcount are a handful of instructions.
class VertexSet {
public:
    static constexpr int kMaxUniverse = 128;

    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe) {
        if (universe < 0 || universe > kMaxUniverse)
            throw ParameterError("vertex universe must be in [0,128], got " +
                                 std::to_string(universe));
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    int size() const {
        return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
    }

    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool contains(int v) const {
        check_vertex(v);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_vertex(v);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_vertex(v);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r = widened(o);
        r.w_ = {w_[0] | o.w_[0], w_[1] | o.w_[1]};
        return r;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r = widened(o);
        r.w_ = {w_[0] & o.w_[0], w_[1] & o.w_[1]};
        return r;
    }
    // Set difference.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r = widened(o);
        r.w_ = {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]};
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

    bool subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    bool intersects(const VertexSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    int intersection_size(const VertexSet& o) const {
        return __builtin_popcountll(w_[0] & o.w_[0]) +
               __builtin_popcountll(w_[1] & o.w_[1]);
    }

    // Smallest member, or -1 when empty.
    int first() const {
        if (w_[0]) return __builtin_ctzll(w_[0]);
        if (w_[1]) return 64 + __builtin_ctzll(w_[1]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        for (int i = v + 1; i < universe_; ++i)
            if ((w_[i >> 6] >> (i & 63)) & 1u) return i;
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    // Order of the ascending member lists; the order edges are stored and
    // reported in. For equal sizes the first differing element decides, which
    // is one bit test; a proper prefix sorts first.
    bool lex_less(const VertexSet& o) const {
        if (size() == o.size()) {
            std::uint64_t d0 = w_[0] ^ o.w_[0];
            if (d0) return (w_[0] >> __builtin_ctzll(d0)) & 1u;
            std::uint64_t d1 = w_[1] ^ o.w_[1];
            if (d1) return (w_[1] >> __builtin_ctzll(d1)) & 1u;
            return false;
        }
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }
    bool operator<(const VertexSet& o) const { return lex_less(o); }

    std::uint64_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    // "{0,3,7}" with 0-based labels; file formats are 1-based, this is for logs.
    std::string to_string() const {
        std::string s = "{";
        for (int v = first(); v >= 0; v = next(v)) {
            if (s.size() > 1) s += ',';
            s += std::to_string(v);
        }
        return s + "}";
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= universe_)
            throw ParameterError("vertex " + std::to_string(v) +
                                 " outside universe of size " + std::to_string(universe_));
    }
    VertexSet widened(const VertexSet& o) const {
        VertexSet r;
        r.universe_ = universe_ >= o.universe_ ? universe_ : o.universe_;
        return r;
    }

    int universe_ = 0;
    std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace turan
