#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hamel {

// Exact rational scalar. Kept in lowest terms with a positive denominator;
// every constructor canonicalizes, every operation preserves the form.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" or "p/q", optionally signed.
    static Rat parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + text + "'");
        if (q.get_den() == 0)
            throw std::domain_error("Rat: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rat(RawTag{}, std::move(q));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(RawTag{}, a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(RawTag{}, a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(RawTag{}, a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(RawTag{}, a.v_ / b.v_);
    }
    Rat operator-() const { return Rat(RawTag{}, -v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }

    // Three-way compare, for lexicographic orderings of containers of Rat.
    int cmp(const Rat& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()); }

    // "p" or "p/q" (den omitted when 1), e.g. "3", "-1/2".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    struct RawTag {};
    Rat(RawTag, mpq_class v) : v_(std::move(v)) {}  // already canonical
    mpq_class v_;
};

}  // namespace hamel
