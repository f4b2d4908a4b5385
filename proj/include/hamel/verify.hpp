#pragma once

#include "hamel/engine.hpp"
#include "hamel/partial_fn.hpp"
#include "hamel/qspace.hpp"
#include "hamel/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hamel::verify {

enum class CheckStatus { pass, warn, fail };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::string> witnesses;  // nonempty whenever status is fail
    double millis = 0;                   // informational; excluded from rendering
};

struct Report {
    std::vector<CheckResult> checks;

    bool has_fail() const;
    bool has_warn() const;
    bool all_pass(bool allow_warn) const;
    std::string render() const;  // "CHECK <name>: PASS|FAIL|WARN (<counts>)" lines
    std::string render_json() const;
};

// What one stage contributed, as reconstructed from the log: the point, the
// word and generator it targeted, and which of the three steps skipped.
struct LogEntry {
    Vec1 x;
    Word word;
    GenId gen = 0;
    bool skip_v = true;
    bool skip_vi = true;
    bool skip_vii = true;
};

// The verifier's entire window onto a construction: raw graphs plus the
// requirement log. Engine traces and spans are deliberately out of reach so
// every span here is recomputed from scratch.
struct StateView {
    int generators = 0;
    int stages = 0;
    std::vector<std::vector<PairVec>> graphs;  // per generator, as dumped
    std::vector<LogEntry> log;
};

using Snapshot = std::vector<std::vector<PairVec>>;

StateView view_of(const engine::EngineState& state);
std::vector<Snapshot> snapshots_of(const engine::EngineState& state);

// Per-generator evaluable functions from raw graph points, first-wins on
// clashes so corrupt inputs still evaluate deterministically.
std::vector<PartialFn> lenient_funcs(const StateView& view);

// Largest letter count among logged words; fallback when no cap was given.
int infer_max_letters(const StateView& view);

// Condition (I): every word graph up to the cap is linearly independent.
CheckResult check_plif_all(const StateView& view, int max_letters);
// Condition (II): no repeated first or second components in any graph.
CheckResult check_injective(const StateView& view);
// Condition (III): total points within the per-stage 2s+2 budget.
CheckResult check_growth(const StateView& view);
// Condition (IV): consecutive snapshots are pointwise nested.
CheckResult check_monotone(const std::vector<Snapshot>& snapshots);
// Condition (V): every logged <0, x> lies in the span of its word's graph.
CheckResult check_condition_v(const StateView& view);
// Conditions (VI)/(VII): every logged x is in dom and rng of its generator.
CheckResult check_dom_rng(const StateView& view);
// Freeness: every word that got a non-skipped span stage moves some point;
// words never scheduled are warnings, not failures.
CheckResult check_separation(const StateView& view, int max_letters);

// Desk-scale Hamel criterion: the subset of points x whose <0, x> is outside
// the span of the target's graph. Empty on everything condition (V) covered.
std::vector<Vec1> hamel_defect(const StateView& view, const Word& target,
                               const std::vector<Vec1>& points);
std::vector<Vec1> hamel_defect(const StateView& view, GenId target,
                               const std::vector<Vec1>& points);

// All seven checks in fixed order. Pass an empty snapshot list to fall back
// to the single final state (monotonicity is then trivially satisfied).
Report run_all_checks(const StateView& view, const std::vector<Snapshot>& snapshots,
                      int max_letters);

}  // namespace hamel::verify
