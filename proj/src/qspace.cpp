#include "hamel/qspace.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hamel {

Vec1 Vec1::from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.sym < b.sym; });
    Vec1 out;
    for (auto& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().sym == t.sym)
            out.terms_.back().coeff += t.coeff;
        else
            out.terms_.push_back(std::move(t));
        if (!out.terms_.empty() && out.terms_.back().coeff.is_zero())
            out.terms_.pop_back();
    }
    return out;
}

Rat Vec1::coeff(Symbol s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, Symbol x) { return t.sym < x; });
    if (it != terms_.end() && it->sym == s) return it->coeff;
    return Rat(0);
}

std::optional<std::uint32_t> Vec1::max_symbol() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().sym.id;
}

bool operator==(const Vec1& a, const Vec1& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].sym == b.terms_[i].sym) ||
            a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

bool operator<(const Vec1& a, const Vec1& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].sym.id != b.terms_[i].sym.id)
            return a.terms_[i].sym.id < b.terms_[i].sym.id;
        int c = a.terms_[i].coeff.cmp(b.terms_[i].coeff);
        if (c != 0) return c < 0;
    }
    return a.terms_.size() < b.terms_.size();
}

Vec1 vec_add(const Vec1& a, const Vec1& b) {
    Vec1 out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.sym.id < tb.sym.id) {
            out.terms_.push_back(ta);
            ++i;
        } else if (tb.sym.id < ta.sym.id) {
            out.terms_.push_back(tb);
            ++j;
        } else {
            Rat c = ta.coeff + tb.coeff;
            if (!c.is_zero()) out.terms_.push_back({ta.sym, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

Vec1 vec_neg(const Vec1& a) {
    Vec1 out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Vec1 vec_scale(const Rat& q, const Vec1& a) {
    if (q.is_zero()) return Vec1{};
    Vec1 out = a;
    for (auto& t : out.terms_) t.coeff = q * t.coeff;
    return out;
}

std::string Vec1::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += '+';
        out += '(';
        out += terms_[i].coeff.str();
        out += ")s";
        out += std::to_string(terms_[i].sym.id);
    }
    return out;
}

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& text) {
    throw std::invalid_argument(what + " in '" + text + "'");
}

Vec1::Term parse_term(const std::string& text, std::size_t& i) {
    if (i >= text.size() || text[i] != '(') bad("expected '('", text);
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) bad("unclosed '('", text);
    Rat c = Rat::parse(text.substr(i + 1, close - i - 1));
    i = close + 1;
    if (i >= text.size() || text[i] != 's') bad("expected symbol", text);
    ++i;
    std::uint32_t id = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), id);
    if (ec != std::errc() || p == text.data() + i) bad("expected symbol id", text);
    i = static_cast<std::size_t>(p - text.data());
    return {Symbol{id}, std::move(c)};
}

}  // namespace

Vec1 Vec1::parse(const std::string& text) {
    if (text == "0") return Vec1{};
    if (text.empty()) bad("empty vector text", text);
    std::vector<Term> raw;
    std::size_t i = 0;
    while (true) {
        raw.push_back(parse_term(text, i));
        if (i == text.size()) break;
        if (text[i] != '+') bad("expected '+'", text);
        ++i;
    }
    return from_terms(std::move(raw));
}

std::string PairVec::str() const {
    return "<" + first.str() + " | " + second.str() + ">";
}

PairVec PairVec::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        bad("expected '<...>'", text);
    const std::string inner = text.substr(1, text.size() - 2);
    std::size_t sep = inner.find(" | ");
    if (sep == std::string::npos) bad("expected ' | '", text);
    return PairVec{Vec1::parse(inner.substr(0, sep)),
                   Vec1::parse(inner.substr(sep + 3))};
}

SpanBasis::Flat SpanBasis::flatten(const PairVec& v) {
    Flat f;
    f.reserve(v.first.terms().size() + v.second.terms().size());
    for (const auto& t : v.first.terms())
        f.push_back({static_cast<Coord>(t.sym.id), t.coeff});
    for (const auto& t : v.second.terms())
        f.push_back({(Coord{1} << 32) | t.sym.id, t.coeff});
    return f;
}

const Rat* SpanBasis::find_coeff(const Flat& f, Coord c) {
    auto it = std::lower_bound(f.begin(), f.end(), c,
                               [](const Entry& e, Coord x) { return e.coord < x; });
    if (it != f.end() && it->coord == c) return &it->coeff;
    return nullptr;
}

void SpanBasis::submul(Flat& f, const Rat& c, const Flat& row) {
    Flat out;
    out.reserve(f.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < row.size()) {
        if (f[i].coord < row[j].coord) {
            out.push_back(std::move(f[i++]));
        } else if (row[j].coord < f[i].coord) {
            out.push_back({row[j].coord, -(c * row[j].coeff)});
            ++j;
        } else {
            Rat r = f[i].coeff - c * row[j].coeff;
            if (!r.is_zero()) out.push_back({f[i].coord, std::move(r)});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(std::move(f[i]));
    for (; j < row.size(); ++j) out.push_back({row[j].coord, -(c * row[j].coeff)});
    f = std::move(out);
}

void SpanBasis::submul(Combo& f, const Rat& c, const Combo& row) {
    Combo out;
    out.reserve(f.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < row.size()) {
        if (f[i].gen < row[j].gen) {
            out.push_back(std::move(f[i++]));
        } else if (row[j].gen < f[i].gen) {
            out.push_back({row[j].gen, -(c * row[j].coeff)});
            ++j;
        } else {
            Rat r = f[i].coeff - c * row[j].coeff;
            if (!r.is_zero()) out.push_back({f[i].gen, std::move(r)});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(std::move(f[i]));
    for (; j < row.size(); ++j) out.push_back({row[j].gen, -(c * row[j].coeff)});
    f = std::move(out);
}

void SpanBasis::reduce(Flat& f, Combo* acc) const {
    // Reduced echelon: no row holds a nonzero entry at another row's pivot,
    // so one ascending pass eliminates everything.
    for (const Row& row : rows_) {
        if (f.empty()) break;
        const Rat* c = find_coeff(f, row.pivot);
        if (!c) continue;
        Rat cv = *c;  // submul invalidates c
        submul(f, cv, row.vec);
        if (acc) submul(*acc, cv, row.combo);
    }
}

bool SpanBasis::insert(const PairVec& v) {
    Flat f = flatten(v);
    Combo acc;
    const std::size_t gen = inserted_++;
    if (track_) acc.push_back({gen, Rat(1)});
    reduce(f, track_ ? &acc : nullptr);
    if (f.empty()) return false;

    const Rat lead = f.front().coeff;
    Row row;
    row.pivot = f.front().coord;
    row.vec = std::move(f);
    for (auto& e : row.vec) e.coeff = e.coeff / lead;
    if (track_) {
        for (auto& t : acc) t.coeff = t.coeff / lead;
        row.combo = std::move(acc);
    }

    for (Row& r : rows_) {
        const Rat* c = find_coeff(r.vec, row.pivot);
        if (!c) continue;
        Rat cv = *c;
        submul(r.vec, cv, row.vec);
        if (track_) submul(r.combo, cv, row.combo);
    }

    auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                                [](const Row& r, Coord p) { return r.pivot < p; });
    rows_.insert(pos, std::move(row));
    return true;
}

bool SpanBasis::contains(const PairVec& v) const {
    Flat f = flatten(v);
    reduce(f, nullptr);
    return f.empty();
}

std::optional<std::vector<Rat>> SpanBasis::represent(const PairVec& v) const {
    if (!track_) throw std::logic_error("represent: span built without provenance");
    Flat f = flatten(v);
    Combo acc;  // accumulates -(combination used)
    reduce(f, &acc);
    if (!f.empty()) return std::nullopt;
    std::vector<Rat> out(inserted_, Rat(0));
    for (const auto& t : acc) out[t.gen] = -t.coeff;
    return out;
}

bool is_plif(std::span<const PairVec> points) {
    SpanBasis basis;
    for (const auto& p : points)
        if (!basis.insert(p)) return false;
    return true;
}

}  // namespace hamel
