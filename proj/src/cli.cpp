#include "hamel/cli.hpp"

#include "hamel/dump.hpp"
#include "hamel/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hamel::cli {

engine::EngineConfig to_engine_config(const Config& cfg) {
    engine::EngineConfig ec;
    ec.generators = cfg.generators;
    ec.max_letters = cfg.max_letters;
    ec.num_stages = cfg.num_stages;
    ec.seed = cfg.seed;
    ec.seed_symbols = cfg.seed_symbols;
    if (cfg.snapshots == "none")
        ec.snapshots = engine::SnapshotPolicy::none;
    else if (cfg.snapshots == "last")
        ec.snapshots = engine::SnapshotPolicy::last;
    else if (cfg.snapshots == "all")
        ec.snapshots = engine::SnapshotPolicy::all;
    else
        throw std::invalid_argument("unknown snapshot policy '" + cfg.snapshots + "'");
    if (cfg.assert_level == "stage")
        ec.assert_level = engine::AssertLevel::per_stage;
    else if (cfg.assert_level == "end")
        ec.assert_level = engine::AssertLevel::end_only;
    else
        throw std::invalid_argument("unknown assert level '" + cfg.assert_level + "'");
    return ec;
}

namespace {

std::size_t view_points(const verify::StateView& view) {
    std::size_t n = 0;
    for (const auto& g : view.graphs) n += g.size();
    return n;
}

}  // namespace

int cmd_build(const Config& cfg, std::ostream& out, std::ostream& err) {
    try {
        auto state = engine::run(to_engine_config(cfg));
        auto view = verify::view_of(state);
        dump::save(view, cfg.out_path, cfg.format == "structured");
        out << "wrote " << cfg.out_path << " (stages=" << view.stages
            << " points=" << view_points(view) << " symbols=" << state.alloc.allocated()
            << ")\n";
        return 0;
    } catch (const engine::SoundnessError& e) {
        err << "construction failure: " << e.what() << "\n";
        return 1;
    } catch (const ConstructionError& e) {
        err << "construction failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const Config& cfg, const std::string& dump_path, int max_letters,
               std::ostream& out, std::ostream& err) {
    verify::StateView view;
    std::vector<verify::Snapshot> snaps;
    int cap = max_letters;
    if (!dump_path.empty()) {
        try {
            view = dump::load(dump_path);
        } catch (const dump::ParseError& e) {
            err << "parse error in " << dump_path << ": " << e.what() << "\n";
            return 2;
        } catch (const std::runtime_error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    } else {
        try {
            auto state = engine::run(to_engine_config(cfg));
            snaps = verify::snapshots_of(state);
            view = verify::view_of(state);
            cap = cfg.max_letters;
        } catch (const engine::SoundnessError& e) {
            err << "construction failure: " << e.what() << "\n";
            return 1;
        } catch (const ConstructionError& e) {
            err << "construction failure: " << e.what() << "\n";
            return 1;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }
    auto report = verify::run_all_checks(view, snaps, cap);
    out << (cfg.format == "structured" ? report.render_json() : report.render());
    return report.all_pass(cfg.allow_warn) ? 0 : 1;
}

namespace {

// Reconstructs the per-block insertion order from the chain lists, exactly
// mirroring the engine's ascending-t insertion.
void render_blocks(const Word& w, const engine::StepITrace& tr, std::ostream& out) {
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        const Letter& l = w.letters[j];
        const auto base = static_cast<std::size_t>(tr.p[j]);
        out << "block " << j << ": gen " << l.gen << " exp " << l.exp << " case "
            << (l.exp > 0 ? 'b' : 'a') << "\n";
        const int hops = std::abs(l.exp);
        for (int t = 0; t < hops; ++t) {
            const std::size_t a = base + static_cast<std::size_t>(t);
            if (l.exp > 0) {
                out << "  + gen " << l.gen << ": "
                    << PairVec{tr.z[a], tr.z[a + 1]}.str() << "\n";
                out << "  + gen " << l.gen << ": "
                    << PairVec{tr.r[a], tr.r[a + 1]}.str() << "\n";
            } else {
                out << "  + gen " << l.gen << ": "
                    << PairVec{tr.z[a + 1], tr.z[a]}.str() << "\n";
                out << "  + gen " << l.gen << ": "
                    << PairVec{tr.r[a + 1], tr.r[a]}.str() << "\n";
            }
        }
    }
}

void render_chain(const char* name, const std::vector<Vec1>& chain, std::ostream& out) {
    out << name << ":";
    for (const auto& v : chain) out << " " << v.str();
    out << "\n";
}

}  // namespace

int cmd_trace(const Config& cfg, int stage_idx, std::ostream& out, std::ostream& err) {
    if (stage_idx < 0 || stage_idx >= cfg.num_stages) {
        err << "error: stage " << stage_idx << " out of range (have "
            << cfg.num_stages << " stages)\n";
        return 2;
    }
    try {
        Config pre_cfg = cfg;
        pre_cfg.num_stages = stage_idx;
        auto pre = engine::run(to_engine_config(pre_cfg));
        Config full_cfg = cfg;
        full_cfg.num_stages = stage_idx + 1;
        auto full = engine::run(to_engine_config(full_cfg));

        const engine::StageRecord& rec = full.log.at(static_cast<std::size_t>(stage_idx));
        const engine::StepITrace& tr = rec.trace;
        out << "stage " << stage_idx << ": x=" << rec.req.x.str()
            << " word=" << rec.word.str() << " gen=" << rec.req.gen << "\n";

        if (tr.skipped) {
            out << "skipped: <0 | " << rec.req.x.str() << "> already in span\n";
            auto graph = word_graph(pre.funcs, rec.word);
            SpanBasis span(true);
            for (const auto& pt : graph) span.insert(pt);
            auto rep = span.represent(PairVec{Vec1{}, rec.req.x});
            if (rep) {
                for (std::size_t k = 0; k < rep->size(); ++k)
                    if (!(*rep)[k].is_zero())
                        out << "  (" << (*rep)[k].str() << ") * " << graph[k].str()
                            << "\n";
            }
        } else {
            out << "x_hat=" << tr.z[0].str() << " y=" << tr.y.str()
                << " y_prime=" << tr.y_prime.str() << "\n";
            std::ostringstream ps;
            for (std::size_t i = 0; i < tr.p.size(); ++i)
                ps << (i ? " " : "") << tr.p[i];
            out << "p: " << ps.str() << "\n";
            render_chain("z", tr.z, out);
            render_chain("r", tr.r, out);
            render_blocks(rec.word, tr, out);
        }

        const auto g = static_cast<std::size_t>(rec.req.gen);
        if (rec.skip_vi) {
            out << "stepVI: skipped (x in dom)\n";
        } else {
            auto y = full.funcs[g].apply(rec.req.x);
            out << "stepVI: inserted " << PairVec{rec.req.x, y ? *y : Vec1{}}.str()
                << "\n";
        }
        if (rec.skip_vii) {
            out << "stepVII: skipped (x in rng)\n";
        } else {
            auto z = full.funcs[g].unapply(rec.req.x);
            out << "stepVII: inserted " << PairVec{z ? *z : Vec1{}, rec.req.x}.str()
                << "\n";
        }
        return 0;
    } catch (const engine::SoundnessError& e) {
        err << "construction failure: " << e.what() << "\n";
        return 1;
    } catch (const ConstructionError& e) {
        err << "construction failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_stats(const std::string& dump_path, std::ostream& out, std::ostream& err) {
    verify::StateView view;
    try {
        view = dump::load(dump_path);
    } catch (const dump::ParseError& e) {
        err << "parse error in " << dump_path << ": " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    long long chain_stages = 0, skipped = 0;
    int cap = 0;
    long long budget = 0;
    for (const auto& e : view.log) {
        e.skip_v ? ++skipped : ++chain_stages;
        cap = std::max(cap, e.word.total_letters());
        budget += 2LL * e.word.total_letters() + 2;
    }
    std::uint32_t max_sym = 0;
    bool any_sym = false;
    auto note = [&](const Vec1& v) {
        if (auto m = v.max_symbol()) {
            max_sym = std::max(max_sym, *m);
            any_sym = true;
        }
    };
    for (const auto& g : view.graphs)
        for (const auto& pt : g) {
            note(pt.first);
            note(pt.second);
        }
    for (const auto& e : view.log) note(e.x);

    const long long points = static_cast<long long>(view_points(view));
    out << "generators: " << view.generators << "\n";
    out << "stages: " << view.log.size() << " (chain " << chain_stages << ", skipped "
        << skipped << ")\n";
    out << "points: " << points << "\n";
    for (std::size_t g = 0; g < view.graphs.size(); ++g)
        out << "  gen " << g << ": " << view.graphs[g].size() << "\n";
    out << "symbols: " << (any_sym ? max_sym + 1 : 0) << "\n";
    const long long words =
        cap == 0 ? 0
                 : static_cast<long long>(enumerate_words(view.generators, cap).size());
    out << "words: " << words << " (letter cap " << cap << ")\n";
    out << "budget: " << points << "/" << budget;
    if (budget > 0) out << " (" << (100 * points) / budget << "%)";
    out << "\n";
    return 0;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"builds and verifies finite stages of a free family of Hamel bijections"};
    app.require_subcommand(1);

    Config cfg;
    std::string dump_path;
    int stage_idx = 0;

    auto add_engine_flags = [&cfg](CLI::App* sub, bool with_letters = true) {
        sub->add_option("--generators", cfg.generators, "generator count G")
            ->check(CLI::PositiveNumber);
        if (with_letters)
            sub->add_option("--max-word-letters", cfg.max_letters,
                            "letter cap for enumerated words")
                ->check(CLI::PositiveNumber);
        sub->add_option("--stages", cfg.num_stages, "number of stages to run")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "requirement stream seed");
        sub->add_option("--seed-symbols", cfg.seed_symbols,
                        "externally injected seed symbols")
            ->check(CLI::PositiveNumber);
        sub->add_option("--snapshots", cfg.snapshots, "snapshot retention")
            ->check(CLI::IsMember({"none", "last", "all"}));
        sub->add_option("--assert-level", cfg.assert_level, "PLIF sweep frequency")
            ->check(CLI::IsMember({"stage", "end"}));
    };

    auto* build = app.add_subcommand("build", "run a construction and dump its state");
    add_engine_flags(build);
    build->add_option("--out", cfg.out_path, "dump file path");
    build->add_option("--format", cfg.format, "dump format")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* ver = app.add_subcommand("verify", "re-check all conditions");
    ver->add_option("dump", dump_path, "state dump to verify (omit to run a config)");
    add_engine_flags(ver, false);
    int verify_letters = 0;
    auto* vl = ver->add_option("--max-word-letters", verify_letters,
                               "letter cap for the word sweep (default: from the log)")
                   ->check(CLI::PositiveNumber);
    ver->add_flag("--allow-warn", cfg.allow_warn, "exit 0 on warnings");
    ver->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* trace = app.add_subcommand("trace", "render one stage's chain insertions");
    add_engine_flags(trace);
    trace->add_option("--stage", stage_idx, "stage index to trace")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* stats = app.add_subcommand("stats", "summarize a state dump");
    stats->add_option("dump", dump_path, "state dump to summarize")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(build)) return cmd_build(cfg, out, err);
    if (app.got_subcommand(ver)) {
        int cap = vl->count() > 0 ? verify_letters : (dump_path.empty() ? cfg.max_letters : 0);
        if (dump_path.empty() && vl->count() > 0) cfg.max_letters = verify_letters;
        return cmd_verify(cfg, dump_path, cap, out, err);
    }
    if (app.got_subcommand(trace)) return cmd_trace(cfg, stage_idx, out, err);
    if (app.got_subcommand(stats)) return cmd_stats(dump_path, out, err);
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace hamel::cli
