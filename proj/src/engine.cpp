#include "hamel/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace hamel::engine {

namespace {

struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// std::shuffle is implementation-defined; dumps must be identical across
// standard libraries, so the permutation is spelled out.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.next() % i]);
}

}  // namespace

std::size_t EngineState::total_points() const {
    std::size_t n = 0;
    for (const auto& f : funcs) n += f.size();
    return n;
}

DefaultStream::DefaultStream(std::uint64_t seed, std::size_t word_count, int generators)
    : seed_(seed), word_count_(word_count), generators_(generators) {
    if (word_count_ == 0 || generators_ <= 0)
        throw std::invalid_argument("DefaultStream: empty word list or no generators");
}

void DefaultStream::push_point(std::uint32_t sym, std::uint64_t round) {
    const std::size_t L = std::max(word_count_, static_cast<std::size_t>(generators_));
    std::vector<Obligation> obs;
    obs.reserve(L);
    for (std::size_t j = 0; j < L; ++j)
        obs.push_back({sym, j % word_count_,
                       static_cast<GenId>(j % static_cast<std::size_t>(generators_))});
    SplitMix64 rng{seed_ ^ (0x5851F42D4C957F2DULL * (sym + 1)) ^
                   (0xD1342543DE82EF95ULL * round)};
    deterministic_shuffle(obs, rng);
    for (auto& o : obs) queue_.push_back(o);
}

void DefaultStream::enroll_new(const EngineState& state) {
    for (; enrolled_ < state.alloc.allocated(); ++enrolled_)
        push_point(enrolled_, 0);
}

Requirement DefaultStream::next(const EngineState& state) {
    enroll_new(state);
    if (queue_.empty()) {
        ++round_;
        for (std::uint32_t s = 0; s < enrolled_; ++s) push_point(s, round_);
    }
    if (queue_.empty())
        throw std::logic_error("DefaultStream: no pool points to schedule");
    Obligation o = queue_.front();
    queue_.pop_front();
    return Requirement{Vec1::unit(Symbol{o.sym}), o.word_idx, o.gen};
}

EngineState init_state(const EngineConfig& cfg) {
    if (cfg.generators < 1 || cfg.max_letters < 1 || cfg.num_stages < 0 ||
        cfg.seed_symbols < 1)
        throw std::invalid_argument("engine config out of range");
    EngineState st;
    st.config = cfg;
    st.funcs.resize(static_cast<std::size_t>(cfg.generators));
    st.words = enumerate_words(cfg.generators, cfg.max_letters);
    for (int i = 0; i < cfg.seed_symbols; ++i)
        st.seeds.push_back(Vec1::unit(st.alloc.fresh()));
    return st;
}

namespace {

void chain_insert(EngineState& state, StepITrace& tr, GenId g, const Vec1& a,
                  const Vec1& b) {
    state.funcs[static_cast<std::size_t>(g)].insert(a, b);
    tr.added[static_cast<std::size_t>(g)].push_back({a, b});
    ++tr.inserts;
}

[[noreturn]] void fail_stage(const EngineState& state, const Requirement& req,
                             const std::string& what) {
    throw SoundnessError("stage " + std::to_string(state.stage) + " (x=" +
                         req.x.str() + ", word=" +
                         state.words.at(req.word_idx).str() + ", gen=" +
                         std::to_string(req.gen) + "): " + what);
}

}  // namespace

StepITrace step_v(EngineState& state, const Requirement& req) {
    const Word& w = state.words.at(req.word_idx);
    const int s = w.total_letters();
    const int m = w.block_count();

    StepITrace tr;
    tr.x = req.x;
    tr.added.resize(state.funcs.size());

    SpanBasis span;
    for (const auto& pt : word_graph(state.funcs, w)) span.insert(pt);
    const PairVec target{Vec1{}, req.x};
    if (span.contains(target)) return tr;  // condition already holds
    tr.skipped = false;

    const Vec1 x_hat = Vec1::unit(state.alloc.fresh());
    tr.z.resize(static_cast<std::size_t>(s) + 1);
    tr.r.resize(static_cast<std::size_t>(s) + 1);
    tr.z[0] = x_hat;
    for (int i = 1; i < s; ++i) tr.z[static_cast<std::size_t>(i)] = Vec1::unit(state.alloc.fresh());
    tr.r[0] = vec_neg(x_hat);
    for (int i = 1; i < s; ++i) tr.r[static_cast<std::size_t>(i)] = Vec1::unit(state.alloc.fresh());
    tr.y = Vec1::unit(state.alloc.fresh());
    tr.y_prime = req.x - tr.y;
    tr.z[static_cast<std::size_t>(s)] = tr.y;
    tr.r[static_cast<std::size_t>(s)] = tr.y_prime;

    tr.p.resize(static_cast<std::size_t>(m) + 1);
    tr.p[0] = 0;
    for (int j = 0; j < m; ++j)
        tr.p[static_cast<std::size_t>(j) + 1] =
            tr.p[static_cast<std::size_t>(j)] + std::abs(w.letters[static_cast<std::size_t>(j)].exp);

    for (int j = 0; j < m; ++j) {
        const Letter& l = w.letters[static_cast<std::size_t>(j)];
        const std::size_t base = static_cast<std::size_t>(tr.p[static_cast<std::size_t>(j)]);
        const int hops = std::abs(l.exp);
        for (int t = 0; t < hops; ++t) {
            const std::size_t a = base + static_cast<std::size_t>(t);
            if (l.exp > 0) {
                chain_insert(state, tr, l.gen, tr.z[a], tr.z[a + 1]);
                chain_insert(state, tr, l.gen, tr.r[a], tr.r[a + 1]);
            } else {
                chain_insert(state, tr, l.gen, tr.z[a + 1], tr.z[a]);
                chain_insert(state, tr, l.gen, tr.r[a + 1], tr.r[a]);
            }
        }
    }

    auto ey = eval_word(state.funcs, w, x_hat);
    if (!ey || !(*ey == tr.y)) fail_stage(state, req, "chain does not carry x_hat to y");
    auto eyp = eval_word(state.funcs, w, tr.r[0]);
    if (!eyp || !(*eyp == tr.y_prime))
        fail_stage(state, req, "chain does not carry -x_hat to y_prime");
    // The graph gained <x_hat, y> and <-x_hat, y_prime>, whose sum is
    // <0, req.x>; extending the pre-step span with just these two points
    // underapproximates the new graph's span, which is enough.
    span.insert(PairVec{x_hat, tr.y});
    span.insert(PairVec{tr.r[0], tr.y_prime});
    if (!span.contains(target)) fail_stage(state, req, "span condition not established");
    return tr;
}

bool step_vi(EngineState& state, const Requirement& req) {
    PartialFn& f = state.funcs.at(static_cast<std::size_t>(req.gen));
    if (f.has(req.x)) return true;
    f.insert(req.x, Vec1::unit(state.alloc.fresh()));
    return false;
}

bool step_vii(EngineState& state, const Requirement& req) {
    PartialFn& f = state.funcs.at(static_cast<std::size_t>(req.gen));
    if (f.has_value(req.x)) return true;
    f.insert(Vec1::unit(state.alloc.fresh()), req.x);
    return false;
}

void run_stage(EngineState& state, const Requirement& req) {
    if (req.word_idx >= state.words.size() || req.gen < 0 ||
        req.gen >= state.config.generators)
        throw std::invalid_argument("requirement outside configured enumeration");

    const std::size_t before = state.total_points();
    StageRecord rec;
    rec.req = req;
    rec.word = state.words[req.word_idx];

    try {
        rec.trace = step_v(state, req);
        rec.skip_vi = step_vi(state, req);
        rec.skip_vii = step_vii(state, req);
    } catch (const ConstructionError& e) {
        fail_stage(state, req, e.what());
    }

    const int s = rec.word.total_letters();
    const std::size_t added = state.total_points() - before;
    if (added > static_cast<std::size_t>(2 * s + 2))
        fail_stage(state, req, "stage added " + std::to_string(added) +
                                   " points, budget " + std::to_string(2 * s + 2));
    state.budget_cap += 2 * s + 2;
    if (state.total_points() > static_cast<std::size_t>(state.budget_cap))
        fail_stage(state, req, "total growth budget exceeded");

    state.log.push_back(std::move(rec));
    ++state.stage;

    switch (state.config.snapshots) {
        case SnapshotPolicy::none:
            break;
        case SnapshotPolicy::last:
            state.snapshots.assign(1, state.funcs);
            break;
        case SnapshotPolicy::all:
            state.snapshots.push_back(state.funcs);
            break;
    }

    if (state.config.assert_level == AssertLevel::per_stage) plif_sweep(state);
}

void plif_sweep(const EngineState& state) {
    for (const auto& w : state.words) {
        auto graph = word_graph(state.funcs, w);
        if (!is_plif(graph))
            throw SoundnessError("graph of word " + w.str() +
                                 " is linearly dependent after stage " +
                                 std::to_string(state.stage));
    }
}

EngineState run(const EngineConfig& cfg, RequirementStream& stream) {
    EngineState st = init_state(cfg);
    for (int k = 0; k < cfg.num_stages; ++k) run_stage(st, stream.next(st));
    if (cfg.assert_level == AssertLevel::end_only && cfg.num_stages > 0) plif_sweep(st);
    return st;
}

EngineState run(const EngineConfig& cfg) {
    // Word enumeration must match init_state's; DefaultStream only needs the
    // count, which depends on (generators, max_letters) alone.
    DefaultStream stream(cfg.seed,
                         enumerate_words(cfg.generators, cfg.max_letters).size(),
                         cfg.generators);
    return run(cfg, stream);
}

}  // namespace hamel::engine
