#pragma once

#include "hamel/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamel {

// One basis element of the ambient Q-vector space. Ids are allocated
// strictly increasing and never reused, so a freshly allocated symbol is
// guaranteed to lie outside the span of everything built before it.
struct Symbol {
    std::uint32_t id = 0;
    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend bool operator<(Symbol a, Symbol b) { return a.id < b.id; }
};

class SymbolAllocator {
public:
    Symbol fresh() { return Symbol{next_++}; }
    std::uint32_t allocated() const { return next_; }

private:
    std::uint32_t next_ = 0;
};

inline Symbol fresh_symbol(SymbolAllocator& alloc) { return alloc.fresh(); }

// Finite Q-linear combination of basis symbols, canonical form: terms sorted
// by symbol id, no zero coefficients stored. Equality is structural.
class Vec1 {
public:
    struct Term {
        Symbol sym;
        Rat coeff;
    };

    Vec1() = default;

    static Vec1 unit(Symbol s) {
        Vec1 v;
        v.terms_.push_back(Term{s, Rat(1)});
        return v;
    }
    // Builds canonical form from arbitrary (symbol, coefficient) pairs.
    static Vec1 from_terms(std::vector<Term> raw);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    Rat coeff(Symbol s) const;
    // Largest symbol id in the support, or nullopt for the zero vector.
    std::optional<std::uint32_t> max_symbol() const;

    friend bool operator==(const Vec1& a, const Vec1& b);
    friend bool operator<(const Vec1& a, const Vec1& b);  // lexicographic on terms

    std::string str() const;                       // "(p/q)s<k>+..." or "0"
    static Vec1 parse(const std::string& text);

private:
    std::vector<Term> terms_;
    friend Vec1 vec_add(const Vec1&, const Vec1&);
    friend Vec1 vec_neg(const Vec1&);
    friend Vec1 vec_scale(const Rat&, const Vec1&);
};

Vec1 vec_add(const Vec1& a, const Vec1& b);
Vec1 vec_neg(const Vec1& a);
Vec1 vec_scale(const Rat& q, const Vec1& a);

inline Vec1 operator+(const Vec1& a, const Vec1& b) { return vec_add(a, b); }
inline Vec1 operator-(const Vec1& a) { return vec_neg(a); }
inline Vec1 operator-(const Vec1& a, const Vec1& b) { return vec_add(a, vec_neg(b)); }
inline Vec1 operator*(const Rat& q, const Vec1& a) { return vec_scale(q, a); }

// A point of the surrogate plane.
struct PairVec {
    Vec1 first;
    Vec1 second;

    friend bool operator==(const PairVec& a, const PairVec& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(const PairVec& a, const PairVec& b) {
        if (a.first == b.first) return a.second < b.second;
        return a.first < b.first;
    }

    std::string str() const;  // "<v | w>"
    static PairVec parse(const std::string& text);
};

// Q-linear span of plane points, maintained in fully reduced row-echelon
// form. Pivot coordinates order first-slot symbols before second-slot
// symbols, each ascending by id. With provenance tracking enabled, every
// inserted point is recorded as a generator and represent() expresses span
// members as exact rational combinations of those generators.
class SpanBasis {
public:
    explicit SpanBasis(bool track_provenance = false) : track_(track_provenance) {}

    // Returns true iff v was independent of the current span.
    bool insert(const PairVec& v);
    bool contains(const PairVec& v) const;
    // Coefficients over all generators inserted so far; nullopt if v is
    // outside the span. Requires provenance tracking.
    std::optional<std::vector<Rat>> represent(const PairVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserts() const { return inserted_; }
    bool tracking() const { return track_; }

private:
    // (slot << 32) | symbol id; slot 0 = first, 1 = second.
    using Coord = std::uint64_t;
    struct Entry {
        Coord coord;
        Rat coeff;
    };
    using Flat = std::vector<Entry>;
    struct ComboTerm {
        std::size_t gen;
        Rat coeff;
    };
    using Combo = std::vector<ComboTerm>;
    struct Row {
        Flat vec;    // pivot coefficient normalized to 1
        Coord pivot;
        Combo combo;  // row as combination of inserted generators
    };

    static Flat flatten(const PairVec& v);
    // f := f - c * row, both sorted by coord.
    static void submul(Flat& f, const Rat& c, const Flat& row);
    static void submul(Combo& f, const Rat& c, const Combo& row);
    static const Rat* find_coeff(const Flat& f, Coord c);

    // Reduces f against the rows; when acc is non-null, accumulates the
    // row combination used (over generators).
    void reduce(Flat& f, Combo* acc) const;

    std::vector<Row> rows_;  // ascending pivot
    bool track_;
    std::size_t inserted_ = 0;
};

inline bool span_insert(SpanBasis& s, const PairVec& v) { return s.insert(v); }
inline bool span_contains(const SpanBasis& s, const PairVec& v) { return s.contains(v); }
inline std::optional<std::vector<Rat>> represent(const SpanBasis& s, const PairVec& v) {
    return s.represent(v);
}

// True iff the point set is Q-linearly independent as a subset of the plane.
bool is_plif(std::span<const PairVec> points);

}  // namespace hamel
