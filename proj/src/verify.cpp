#include "hamel/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace hamel::verify {

namespace {

constexpr std::size_t kWitnessCap = 8;

const char* status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::warn: return "WARN";
        case CheckStatus::fail: return "FAIL";
    }
    return "FAIL";
}

void add_witness(CheckResult& r, std::string w) {
    if (r.witnesses.size() < kWitnessCap)
        r.witnesses.push_back(std::move(w));
    else if (r.witnesses.size() == kWitnessCap)
        r.witnesses.push_back("...");
}

void mark_fail(CheckResult& r, std::string w) {
    r.status = CheckStatus::fail;
    add_witness(r, std::move(w));
}

}  // namespace

bool Report::has_fail() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool Report::has_warn() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::warn; });
}

bool Report::all_pass(bool allow_warn) const {
    return !has_fail() && (allow_warn || !has_warn());
}

std::string Report::render() const {
    std::string out;
    for (const auto& c : checks) {
        out += "CHECK " + c.name + ": " + status_text(c.status) + " (";
        for (std::size_t i = 0; i < c.counts.size(); ++i) {
            if (i) out += ' ';
            out += c.counts[i].first + "=" + std::to_string(c.counts[i].second);
        }
        out += ")\n";
        for (const auto& w : c.witnesses) out += "  " + w + "\n";
    }
    return out;
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = status_text(c.status);
        nlohmann::ordered_json counts;
        for (const auto& [k, v] : c.counts) counts[k] = v;
        jc["counts"] = std::move(counts);
        jc["witnesses"] = c.witnesses;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

StateView view_of(const engine::EngineState& state) {
    StateView v;
    v.generators = state.config.generators;
    v.stages = state.stage;
    v.graphs.reserve(state.funcs.size());
    for (const auto& f : state.funcs) v.graphs.push_back(f.graph());
    v.log.reserve(state.log.size());
    for (const auto& rec : state.log)
        v.log.push_back(LogEntry{rec.req.x, rec.word, rec.req.gen,
                                 rec.trace.skipped, rec.skip_vi, rec.skip_vii});
    return v;
}

std::vector<Snapshot> snapshots_of(const engine::EngineState& state) {
    std::vector<Snapshot> out;
    out.reserve(state.snapshots.size());
    for (const auto& stage_funcs : state.snapshots) {
        Snapshot s;
        s.reserve(stage_funcs.size());
        for (const auto& f : stage_funcs) s.push_back(f.graph());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<PartialFn> lenient_funcs(const StateView& view) {
    std::vector<PartialFn> funcs;
    funcs.reserve(view.graphs.size());
    for (const auto& g : view.graphs) funcs.push_back(PartialFn::from_pairs_lenient(g));
    return funcs;
}

int infer_max_letters(const StateView& view) {
    int m = 1;
    for (const auto& e : view.log) m = std::max(m, e.word.total_letters());
    return m;
}

CheckResult check_plif_all(const StateView& view, int max_letters) {
    CheckResult r;
    r.name = "check_plif_all";
    auto funcs = lenient_funcs(view);
    auto words = enumerate_words(view.generators, max_letters);
    long long points = 0;
    for (const auto& w : words) {
        auto graph = word_graph(funcs, w);
        points += static_cast<long long>(graph.size());
        SpanBasis span(true);
        for (std::size_t i = 0; i < graph.size(); ++i) {
            if (span.insert(graph[i])) continue;
            // Dependent point: name the vanishing combination over the
            // points inserted before it.
            auto rep = span.represent(graph[i]);
            std::string combo;
            if (rep) {
                for (std::size_t k = 0; k < rep->size(); ++k) {
                    if ((*rep)[k].is_zero()) continue;
                    if (!combo.empty()) combo += " + ";
                    combo += "(" + (*rep)[k].str() + ")*" + graph[k].str();
                }
            }
            mark_fail(r, "word " + w.str() + ": dependent point " + graph[i].str() +
                             (combo.empty() ? "" : " = " + combo));
            break;
        }
        if (r.status == CheckStatus::fail) break;  // first failing word is the witness
    }
    r.counts = {{"words", static_cast<long long>(words.size())}, {"points", points}};
    return r;
}

CheckResult check_injective(const StateView& view) {
    CheckResult r;
    r.name = "check_injective";
    long long points = 0;
    for (std::size_t g = 0; g < view.graphs.size(); ++g) {
        const auto& graph = view.graphs[g];
        points += static_cast<long long>(graph.size());

        auto by_first = graph;
        std::sort(by_first.begin(), by_first.end());
        for (std::size_t i = 1; i < by_first.size(); ++i)
            if (by_first[i - 1].first == by_first[i].first &&
                !(by_first[i - 1].second == by_first[i].second))
                mark_fail(r, "gen " + std::to_string(g) + ": " + by_first[i - 1].str() +
                                 " and " + by_first[i].str() + " share an argument");

        auto by_second = graph;
        std::sort(by_second.begin(), by_second.end(),
                  [](const PairVec& a, const PairVec& b) {
                      if (a.second == b.second) return a.first < b.first;
                      return a.second < b.second;
                  });
        for (std::size_t i = 1; i < by_second.size(); ++i)
            if (by_second[i - 1].second == by_second[i].second &&
                !(by_second[i - 1].first == by_second[i].first))
                mark_fail(r, "gen " + std::to_string(g) + ": " + by_second[i - 1].str() +
                                 " and " + by_second[i].str() + " share a value");
    }
    r.counts = {{"gens", static_cast<long long>(view.graphs.size())}, {"points", points}};
    return r;
}

CheckResult check_growth(const StateView& view) {
    CheckResult r;
    r.name = "check_growth";
    long long points = 0;
    for (const auto& g : view.graphs) points += static_cast<long long>(g.size());
    long long budget = 0;
    for (const auto& e : view.log) budget += 2LL * e.word.total_letters() + 2;
    if (points > budget)
        mark_fail(r, "total points " + std::to_string(points) + " exceed budget " +
                         std::to_string(budget));
    r.counts = {{"points", points}, {"budget", budget}};
    return r;
}

CheckResult check_monotone(const std::vector<Snapshot>& snapshots) {
    CheckResult r;
    r.name = "check_monotone";
    long long compared = 0;
    for (std::size_t i = 0; i + 1 < snapshots.size(); ++i) {
        const Snapshot& a = snapshots[i];
        const Snapshot& b = snapshots[i + 1];
        if (a.size() > b.size()) {
            mark_fail(r, "snapshot " + std::to_string(i + 1) + " has fewer generators");
            continue;
        }
        for (std::size_t g = 0; g < a.size(); ++g) {
            auto later = b[g];
            std::sort(later.begin(), later.end());
            for (const auto& pt : a[g]) {
                ++compared;
                if (!std::binary_search(later.begin(), later.end(), pt))
                    mark_fail(r, "snapshot " + std::to_string(i) + "->" +
                                     std::to_string(i + 1) + ": gen " + std::to_string(g) +
                                     " lost " + pt.str());
            }
        }
    }
    r.counts = {{"snapshots", static_cast<long long>(snapshots.size())},
                {"points", compared}};
    return r;
}

CheckResult check_condition_v(const StateView& view) {
    CheckResult r;
    r.name = "check_condition_v";
    auto funcs = lenient_funcs(view);
    // One span per distinct word; checking against the final state is sound
    // because graphs only ever grow.
    std::map<std::string, SpanBasis> spans;
    long long distinct = 0;
    for (std::size_t k = 0; k < view.log.size(); ++k) {
        const LogEntry& e = view.log[k];
        auto [it, fresh_word] = spans.try_emplace(e.word.str());
        if (fresh_word) {
            ++distinct;
            for (const auto& pt : word_graph(funcs, e.word)) it->second.insert(pt);
        }
        if (!it->second.contains(PairVec{Vec1{}, e.x}))
            mark_fail(r, "stage " + std::to_string(k) + ": <0 | " + e.x.str() +
                             "> not in span of word " + e.word.str());
    }
    r.counts = {{"stages", static_cast<long long>(view.log.size())}, {"words", distinct}};
    return r;
}

CheckResult check_dom_rng(const StateView& view) {
    CheckResult r;
    r.name = "check_dom_rng";
    std::vector<std::vector<Vec1>> doms(view.graphs.size()), rngs(view.graphs.size());
    for (std::size_t g = 0; g < view.graphs.size(); ++g) {
        for (const auto& pt : view.graphs[g]) {
            doms[g].push_back(pt.first);
            rngs[g].push_back(pt.second);
        }
        std::sort(doms[g].begin(), doms[g].end());
        std::sort(rngs[g].begin(), rngs[g].end());
    }
    for (std::size_t k = 0; k < view.log.size(); ++k) {
        const LogEntry& e = view.log[k];
        if (e.gen < 0 || static_cast<std::size_t>(e.gen) >= view.graphs.size()) {
            mark_fail(r, "stage " + std::to_string(k) + ": generator " +
                             std::to_string(e.gen) + " out of range");
            continue;
        }
        const auto g = static_cast<std::size_t>(e.gen);
        if (!std::binary_search(doms[g].begin(), doms[g].end(), e.x))
            mark_fail(r, "stage " + std::to_string(k) + ": x=" + e.x.str() +
                             " not in dom of gen " + std::to_string(e.gen));
        if (!std::binary_search(rngs[g].begin(), rngs[g].end(), e.x))
            mark_fail(r, "stage " + std::to_string(k) + ": x=" + e.x.str() +
                             " not in rng of gen " + std::to_string(e.gen));
    }
    r.counts = {{"stages", static_cast<long long>(view.log.size())}};
    return r;
}

CheckResult check_separation(const StateView& view, int max_letters) {
    CheckResult r;
    r.name = "check_separation";
    auto funcs = lenient_funcs(view);
    auto words = enumerate_words(view.generators, max_letters);
    long long separated = 0, unseparated = 0;
    for (const auto& w : words) {
        bool nonskip_stage = false;
        for (const auto& e : view.log)
            if (e.word == w && !e.skip_v) nonskip_stage = true;
        bool moved = false;
        for (const auto& pt : word_graph(funcs, w))
            if (!(pt.first == pt.second)) { moved = true; break; }
        if (moved) {
            ++separated;
        } else if (nonskip_stage) {
            mark_fail(r, "word " + w.str() +
                             ": received a chain stage but moves no point");
        } else {
            ++unseparated;
            if (r.status == CheckStatus::pass) r.status = CheckStatus::warn;
            add_witness(r, "unseparated (insufficient stages): " + w.str());
        }
    }
    r.counts = {{"words", static_cast<long long>(words.size())},
                {"separated", separated},
                {"unseparated", unseparated}};
    return r;
}

namespace {

std::vector<Vec1> defect_of_graph(const std::vector<PairVec>& graph,
                                  const std::vector<Vec1>& points) {
    SpanBasis span;
    for (const auto& pt : graph) span.insert(pt);
    std::vector<Vec1> out;
    for (const auto& x : points)
        if (!span.contains(PairVec{Vec1{}, x})) out.push_back(x);
    return out;
}

}  // namespace

std::vector<Vec1> hamel_defect(const StateView& view, const Word& target,
                               const std::vector<Vec1>& points) {
    auto funcs = lenient_funcs(view);
    return defect_of_graph(word_graph(funcs, target), points);
}

std::vector<Vec1> hamel_defect(const StateView& view, GenId target,
                               const std::vector<Vec1>& points) {
    return defect_of_graph(view.graphs.at(static_cast<std::size_t>(target)), points);
}

Report run_all_checks(const StateView& view, const std::vector<Snapshot>& snapshots,
                      int max_letters) {
    if (max_letters <= 0) max_letters = infer_max_letters(view);
    const std::vector<Snapshot>* snaps = &snapshots;
    std::vector<Snapshot> final_only;
    if (snapshots.empty()) {
        final_only.push_back(view.graphs);
        snaps = &final_only;
    }

    Report rep;
    auto push = [&rep](CheckResult c,
                       std::chrono::steady_clock::time_point t0) {
        c.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        rep.checks.push_back(std::move(c));
    };
    auto now = [] { return std::chrono::steady_clock::now(); };

    auto t = now();
    push(check_plif_all(view, max_letters), t);
    t = now();
    push(check_injective(view), t);
    t = now();
    push(check_growth(view), t);
    t = now();
    push(check_monotone(*snaps), t);
    t = now();
    push(check_condition_v(view), t);
    t = now();
    push(check_dom_rng(view), t);
    t = now();
    push(check_separation(view, max_letters), t);
    return rep;
}

}  // namespace hamel::verify
