#include "hamel/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace hamel {

namespace {
const std::string kDot = "\xC2\xB7";  // U+00B7, the block separator
}

int Word::total_letters() const {
    int s = 0;
    for (const auto& l : letters) s += std::abs(l.exp);
    return s;
}

Word reduce(const Word& w) {
    std::vector<Letter> out;
    for (const auto& l : w.letters) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word{std::move(out)};
}

Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word joined = a;
    joined.letters.insert(joined.letters.end(), b.letters.begin(), b.letters.end());
    return reduce(joined);
}

std::string Word::str() const {
    if (letters.empty()) return "id";
    std::string out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it != letters.rbegin()) out += kDot;
        out += 'f';
        out += std::to_string(it->gen);
        out += '^';
        out += std::to_string(it->exp);
    }
    return out;
}

namespace {

Letter parse_block(const std::string& text) {
    if (text.empty() || text[0] != 'f')
        throw std::invalid_argument("word block must start with 'f': '" + text + "'");
    const char* begin = text.data() + 1;
    const char* end = text.data() + text.size();
    GenId gen = 0;
    auto [p, ec] = std::from_chars(begin, end, gen);
    if (ec != std::errc() || p == begin || p == end || *p != '^')
        throw std::invalid_argument("malformed word block '" + text + "'");
    int exp = 0;
    auto [q, ec2] = std::from_chars(p + 1, end, exp);
    if (ec2 != std::errc() || q != end || exp == 0)
        throw std::invalid_argument("malformed word block '" + text + "'");
    return {gen, exp};
}

}  // namespace

Word Word::parse(const std::string& text) {
    if (text == "id") return Word{};
    std::vector<Letter> printed;
    std::size_t pos = 0;
    while (true) {
        std::size_t sep = text.find(kDot, pos);
        printed.push_back(parse_block(
            text.substr(pos, sep == std::string::npos ? sep : sep - pos)));
        if (sep == std::string::npos) break;
        pos = sep + kDot.size();
    }
    Word w;
    w.letters.assign(printed.rbegin(), printed.rend());
    w = reduce(w);
    if (w.letters.empty())
        throw std::invalid_argument("word text reduces to identity: '" + text + "'");
    return w;
}

namespace {

// (gen, sign with + first, |exp|): the per-block enumeration key.
bool letter_less(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    const bool aneg = a.exp < 0, bneg = b.exp < 0;
    if (aneg != bneg) return bneg;
    return std::abs(a.exp) < std::abs(b.exp);
}

void gen_blocks(int generators, int remaining, int last_gen, Word& cur,
                std::vector<Word>& out) {
    if (!cur.letters.empty()) out.push_back(cur);
    for (GenId g = 0; g < generators; ++g) {
        if (g == last_gen) continue;
        for (int a = 1; a <= remaining; ++a) {
            for (int sign : {+1, -1}) {
                cur.letters.push_back({g, sign * a});
                gen_blocks(generators, remaining - a, g, cur, out);
                cur.letters.pop_back();
            }
        }
    }
}

}  // namespace

bool word_less(const Word& a, const Word& b) {
    const int sa = a.total_letters(), sb = b.total_letters();
    if (sa != sb) return sa < sb;
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size();
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        if (a.letters[i] == b.letters[i]) continue;
        return letter_less(a.letters[i], b.letters[i]);
    }
    return false;
}

std::vector<Word> enumerate_words(int generators, int max_letters) {
    std::vector<Word> out;
    Word cur;
    gen_blocks(generators, max_letters, -1, cur, out);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

}  // namespace hamel
