#include "hamel/partial_fn.hpp"

#include <cstdlib>

namespace hamel {

std::optional<Vec1> PartialFn::apply(const Vec1& x) const {
    auto it = fwd_.find(x);
    if (it == fwd_.end()) return std::nullopt;
    return it->second;
}

std::optional<Vec1> PartialFn::unapply(const Vec1& y) const {
    auto it = bwd_.find(y);
    if (it == bwd_.end()) return std::nullopt;
    return it->second;
}

void PartialFn::insert(const Vec1& x, const Vec1& y) {
    auto fit = fwd_.find(x);
    if (fit != fwd_.end()) {
        if (fit->second == y) return;  // already present, a set union no-op
        throw ConstructionError(
            FnError::DomainClash,
            "domain clash at " + x.str() + ": " + fit->second.str() + " vs " + y.str());
    }
    auto bit = bwd_.find(y);
    if (bit != bwd_.end()) {
        throw ConstructionError(
            FnError::InjectivityViolation,
            "injectivity violation at " + y.str() + ": " + bit->second.str() + " vs " + x.str());
    }
    fwd_.emplace(x, y);
    bwd_.emplace(y, x);
}

std::vector<PairVec> PartialFn::graph() const {
    std::vector<PairVec> out;
    out.reserve(fwd_.size());
    for (const auto& [x, y] : fwd_) out.push_back({x, y});
    return out;
}

PartialFn PartialFn::from_pairs(const std::vector<PairVec>& pairs) {
    PartialFn f;
    for (const auto& p : pairs) f.insert(p.first, p.second);
    return f;
}

PartialFn PartialFn::from_pairs_lenient(const std::vector<PairVec>& pairs) {
    PartialFn f;
    for (const auto& p : pairs) {
        if (f.fwd_.count(p.first) || f.bwd_.count(p.second)) continue;
        f.fwd_.emplace(p.first, p.second);
        f.bwd_.emplace(p.second, p.first);
    }
    return f;
}

PartialFn pf_insert(const PartialFn& f, const Vec1& x, const Vec1& y) {
    PartialFn g = f;
    g.insert(x, y);
    return g;
}

std::optional<Vec1> eval_word(std::span<const PartialFn> funcs, const Word& w,
                              const Vec1& x) {
    Vec1 cur = x;
    for (const auto& l : w.letters) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= funcs.size())
            throw std::out_of_range("eval_word: generator index " + std::to_string(l.gen));
        const PartialFn& f = funcs[static_cast<std::size_t>(l.gen)];
        const int hops = std::abs(l.exp);
        for (int t = 0; t < hops; ++t) {
            auto next = l.exp > 0 ? f.apply(cur) : f.unapply(cur);
            if (!next) return std::nullopt;
            cur = std::move(*next);
        }
    }
    return cur;
}

std::vector<PairVec> word_graph(std::span<const PartialFn> funcs, const Word& w) {
    if (w.empty()) throw std::invalid_argument("word_graph: empty word");
    const Letter& head = w.letters.front();
    if (head.gen < 0 || static_cast<std::size_t>(head.gen) >= funcs.size())
        throw std::out_of_range("word_graph: generator index " + std::to_string(head.gen));
    const auto& candidates = head.exp > 0
                                 ? funcs[static_cast<std::size_t>(head.gen)].forward()
                                 : funcs[static_cast<std::size_t>(head.gen)].backward();
    std::vector<PairVec> out;
    for (const auto& [x, unused] : candidates) {
        auto y = eval_word(funcs, w, x);
        if (y) out.push_back({x, std::move(*y)});
    }
    return out;
}

}  // namespace hamel
