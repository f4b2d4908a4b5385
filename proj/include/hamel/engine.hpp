#pragma once

#include "hamel/partial_fn.hpp"
#include "hamel/qspace.hpp"
#include "hamel/words.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamel::engine {

// One obligation of the finitized recursion: discharge the span condition
// for (x, word at word_idx) and the dom/rng conditions for (x, gen).
struct Requirement {
    Vec1 x;
    std::size_t word_idx = 0;
    GenId gen = 0;
};

// Record of one chain-insertion step. For a skipped stage only x is
// meaningful. z threads x_hat to y, r threads -x_hat to y_prime; p holds the
// block offsets p_0..p_m with p_j the sum of |exp| over earlier blocks.
struct StepITrace {
    bool skipped = true;
    Vec1 x;                    // the requirement's point
    std::vector<Vec1> z;       // z_0 = x_hat, ..., z_s = y
    std::vector<Vec1> r;       // r_0 = -x_hat, ..., r_s = y_prime
    Vec1 y;
    Vec1 y_prime;              // x - y
    std::vector<int> p;
    std::vector<std::vector<PairVec>> added;  // per generator
    int inserts = 0;
};

struct StageRecord {
    Requirement req;
    Word word;
    StepITrace trace;
    bool skip_vi = false;
    bool skip_vii = false;
};

enum class SnapshotPolicy { none, last, all };
enum class AssertLevel { per_stage, end_only };

struct EngineConfig {
    int generators = 1;
    int max_letters = 1;
    int num_stages = 0;
    std::uint64_t seed = 0;
    int seed_symbols = 1;
    SnapshotPolicy snapshots = SnapshotPolicy::none;
    AssertLevel assert_level = AssertLevel::end_only;
};

struct EngineState {
    EngineConfig config;
    std::vector<PartialFn> funcs;     // one per generator
    SymbolAllocator alloc;
    int stage = 0;
    std::vector<Word> words;          // enumeration cache; word_idx indexes this
    std::vector<Vec1> seeds;          // externally injected seed points
    std::vector<StageRecord> log;
    std::vector<std::vector<PartialFn>> snapshots;
    long long budget_cap = 0;         // sum of 2*s_j + 2 over processed stages

    std::size_t total_points() const;
};

// A stage invariant failed: a chain insert clashed, a postcondition did not
// hold, or the growth budget was exceeded. Always a bug, never input error.
class SoundnessError : public std::runtime_error {
public:
    explicit SoundnessError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

class RequirementStream {
public:
    virtual ~RequirementStream() = default;
    virtual Requirement next(const EngineState& state) = 0;
};

// Fair deterministic schedule. Every allocated symbol joins a pool; each
// pool point enrolls max(wordCount, G) obligations covering every word index
// and every generator with that point, shuffled per point by the seed and
// consumed FIFO. If the queue ever drains, the whole pool re-enrolls.
class DefaultStream final : public RequirementStream {
public:
    DefaultStream(std::uint64_t seed, std::size_t word_count, int generators);
    Requirement next(const EngineState& state) override;

private:
    struct Obligation {
        std::uint32_t sym;
        std::size_t word_idx;
        GenId gen;
    };
    void enroll_new(const EngineState& state);
    void push_point(std::uint32_t sym, std::uint64_t round);

    std::uint64_t seed_;
    std::size_t word_count_;
    int generators_;
    std::uint32_t enrolled_ = 0;
    std::uint64_t round_ = 0;
    std::deque<Obligation> queue_;
};

EngineState init_state(const EngineConfig& cfg);

// Step I / condition (V): if <0, req.x> is already in the span of the word's
// graph, skip; otherwise thread fresh z- and r-chains through the word's
// blocks so the graph gains <x_hat, y> and <-x_hat, y_prime> with
// y + y_prime = req.x.
StepITrace step_v(EngineState& state, const Requirement& req);
// Step II / condition (VI): ensure req.x is in dom(funcs[gen]). Returns true
// when skipped.
bool step_vi(EngineState& state, const Requirement& req);
// Step III / condition (VII): ensure req.x is in rng(funcs[gen]).
bool step_vii(EngineState& state, const Requirement& req);

// Steps I-III, log append, snapshot, growth-budget assert, stage counter.
void run_stage(EngineState& state, const Requirement& req);

// Asserts every enumerated word's graph is linearly independent; throws
// SoundnessError naming the first failing word.
void plif_sweep(const EngineState& state);

EngineState run(const EngineConfig& cfg);
EngineState run(const EngineConfig& cfg, RequirementStream& stream);

}  // namespace hamel::engine
