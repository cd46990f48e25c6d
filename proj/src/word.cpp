#include "ncalc/word.hpp"

#include "ncalc/errors.hpp"

namespace ncalc {

Caps& default_caps() {
    static Caps caps;
    return caps;
}

Word least_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (r < best) best = std::move(r);
    }
    return best;
}

std::string generator_name(int g, int generator_count) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    if (generator_count <= 6 && g < 6) return names[g];
    return "g" + std::to_string(g);
}

std::string word_string(const Word& w, int generator_count, const std::string& sep) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += generator_name(w[i], generator_count);
    }
    return s;
}

}  // namespace ncalc
