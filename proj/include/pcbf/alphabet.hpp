#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pcbf {

/// Mode alphabet {1, ..., m}.
struct Alphabet {
    int m = 1;

    explicit Alphabet(int count = 1) : m(count) {
        if (m < 1) throw std::invalid_argument("Alphabet: need at least one symbol");
    }

    bool contains(int symbol) const { return symbol >= 1 && symbol <= m; }
    bool operator==(const Alphabet& rhs) const { return m == rhs.m; }
};

/// Finite switching sequence; letters are 1-based symbols.
using Word = std::vector<int>;

inline void validate_word(const Alphabet& alphabet, const Word& w) {
    for (int s : w)
        if (!alphabet.contains(s))
            throw std::out_of_range("word symbol " + std::to_string(s) + " outside alphabet of size " +
                                    std::to_string(alphabet.m));
}

inline std::string word_to_string(const Word& w) {
    std::string out = "(";
    for (int s : w) out += std::to_string(s);
    return out + ")";
}

}  // namespace pcbf
