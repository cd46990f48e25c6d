#pragma once

#include <string>
#include <vector>

namespace ncalc {

using Word = std::vector<int>;

// Length first, then lexicographic.
struct LenLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

// Rotation by k: w[k..] w[..k]
inline Word rotate(const Word& w, std::size_t k) {
    Word r;
    r.reserve(w.size());
    r.insert(r.end(), w.begin() + static_cast<long>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
    return r;
}

Word least_rotation(const Word& w);

// Default generator names: x, y, z, w, u, v, then g6, g7, ...
std::string generator_name(int g, int generator_count);
std::string word_string(const Word& w, int generator_count, const std::string& sep = "*");

}  // namespace ncalc
