// Sparse polynomial kernels over 128-bit packed monomial keys.
// Every routine returns false when an int64 coefficient would overflow; the
// caller then redoes the operation with arbitrary-precision integers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace kern {

struct Key {
    uint64_t lo;
    uint64_t hi;
    bool operator==(const Key& o) const { return lo == o.lo && hi == o.hi; }
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
        h ^= (k.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

struct Term {
    Key key;
    int64_t coeff;
};

using Map = std::unordered_map<Key, int64_t, KeyHash>;

inline Key add_keys(const Key& a, const Key& b) {
    Key out;
    out.lo = a.lo + b.lo;
    out.hi = a.hi + b.hi + (out.lo < a.lo ? 1 : 0);
    return out;
}

inline Key sub_keys(const Key& a, const Key& b) {
    Key out;
    out.lo = a.lo - b.lo;
    out.hi = a.hi - b.hi - (a.lo < b.lo ? 1 : 0);
    return out;
}

inline bool accumulate(Map& m, const Key& k, int64_t c) {
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return true;
    }
    int64_t s;
    if (__builtin_add_overflow(it->second, c, &s)) return false;
    it->second = s;
    return true;
}

inline void drain(const Map& m, std::vector<Term>& out) {
    out.clear();
    out.reserve(m.size());
    for (const auto& kv : m)
        if (kv.second != 0) out.push_back(Term{kv.first, kv.second});
}

inline bool mul(const std::vector<Term>& a, const std::vector<Term>& b, std::vector<Term>& out) {
    Map acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    for (const Term& x : a) {
        for (const Term& y : b) {
            int64_t c;
            if (__builtin_mul_overflow(x.coeff, y.coeff, &c)) return false;
            if (!accumulate(acc, add_keys(x.key, y.key), c)) return false;
        }
    }
    drain(acc, out);
    return true;
}

// Exponent of the variable occupying bits [shift, shift + width) of the key.
inline unsigned exponent(const Key& k, unsigned shift, uint64_t field) {
    if (shift >= 64) return static_cast<unsigned>((k.hi >> (shift - 64)) & field);
    unsigned __int128 wide = (static_cast<unsigned __int128>(k.hi) << 64) | k.lo;
    return static_cast<unsigned>((wide >> shift) & field);
}

// Synthetic division by t_a - t_b.  Sets `exact` to false on a nonzero remainder.
inline bool div_linear(const std::vector<Term>& a, unsigned shift, const Key& ka, const Key& kb,
                       uint64_t field, std::vector<Term>& out, bool& exact) {
    exact = true;
    out.clear();
    if (a.empty()) return true;
    unsigned top = 0;
    for (const Term& x : a) top = std::max(top, exponent(x.key, shift, field));
    std::vector<Map> buckets(top + 1);
    for (const Term& x : a) buckets[exponent(x.key, shift, field)].emplace(x.key, x.coeff);
    Map quot;
    for (unsigned e = top; e >= 1; --e) {
        Map& layer = buckets[e];
        Map& below = buckets[e - 1];
        for (const auto& kv : layer) {
            if (kv.second == 0) continue;
            Key qk = sub_keys(kv.first, ka);
            if (!accumulate(quot, qk, kv.second)) return false;
            if (!accumulate(below, add_keys(qk, kb), kv.second)) return false;
        }
        layer.clear();
    }
    for (const auto& kv : buckets[0]) {
        if (kv.second != 0) {
            exact = false;
            return true;
        }
    }
    drain(quot, out);
    return true;
}

}  // namespace kern
