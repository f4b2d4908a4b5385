#pragma once

#include <string>
#include <vector>

namespace hamel {

// Index of a generator, 0 <= gen < G.
using GenId = int;

// One block f_gen^exp of a word. exp is never zero in a reduced word.
struct Letter {
    GenId gen = 0;
    int exp = 0;
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

// Reduced word over the free group on the generators. letters[0] is applied
// first under composition; the printed form lists blocks leftmost-last, so
// the rightmost printed block acts first.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    // s: total letter count, sum of |exp| over blocks.
    int total_letters() const;
    int block_count() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters == b.letters;
    }

    std::string str() const;  // "f<g>^<n>" blocks joined by "·"; empty is "id"
    static Word parse(const std::string& text);
};

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // reduced concatenation

// Deterministic order: ascending s, then block count, then lexicographic on
// (gen, positive exponent before negative, ascending |exp|) over the blocks
// in application order. A word's position in the sequence is its index used
// by the requirement stream.
bool word_less(const Word& a, const Word& b);
std::vector<Word> enumerate_words(int generators, int max_letters);

}  // namespace hamel
