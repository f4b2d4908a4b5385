#pragma once

#include "hamel/qspace.hpp"
#include "hamel/words.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamel {

enum class FnError {
    DomainClash,          // same argument, different value
    InjectivityViolation  // same value, different argument
};

// Raised when an insert would break single-valuedness or injectivity. The
// construction's freshness discipline makes this unreachable on honest
// states; reaching it is a fatal bug, not a recoverable condition.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(FnError kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    FnError kind() const { return kind_; }

private:
    FnError kind_;
};

// Finite injective partial map on the surrogate space, with an exact inverse
// index so backward application is a lookup.
class PartialFn {
public:
    std::size_t size() const { return fwd_.size(); }
    bool empty() const { return fwd_.empty(); }

    bool has(const Vec1& x) const { return fwd_.count(x) != 0; }
    bool has_value(const Vec1& y) const { return bwd_.count(y) != 0; }
    std::optional<Vec1> apply(const Vec1& x) const;
    std::optional<Vec1> unapply(const Vec1& y) const;

    // Throws ConstructionError on a domain or injectivity clash.
    void insert(const Vec1& x, const Vec1& y);

    const std::map<Vec1, Vec1>& forward() const { return fwd_; }
    const std::map<Vec1, Vec1>& backward() const { return bwd_; }

    // Graph points sorted by first component (map order).
    std::vector<PairVec> graph() const;

    static PartialFn from_pairs(const std::vector<PairVec>& pairs);
    // First occurrence wins on clashes; for reconstructing possibly corrupt
    // inputs so the verifier can still evaluate words over them.
    static PartialFn from_pairs_lenient(const std::vector<PairVec>& pairs);

private:
    std::map<Vec1, Vec1> fwd_;
    std::map<Vec1, Vec1> bwd_;
};

// Extended-copy insert; the argument is left untouched.
PartialFn pf_insert(const PartialFn& f, const Vec1& x, const Vec1& y);

// Applies w's letters in application order: a letter (g, n) with n > 0 is n
// forward hops of funcs[g], with n < 0 |n| backward hops. Undefinedness is a
// value (nullopt), not an error. The empty word is the identity.
std::optional<Vec1> eval_word(std::span<const PartialFn> funcs, const Word& w,
                              const Vec1& x);

// { <x, w(x)> : x in the candidate domain, w(x) defined } where the candidate
// domain is dom(funcs[g0]) for a positive leading exponent and rng(funcs[g0])
// for a negative one. Requires w reduced and nonempty.
std::vector<PairVec> word_graph(std::span<const PartialFn> funcs, const Word& w);

}  // namespace hamel
