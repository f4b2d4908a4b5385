#pragma once

#include "hamel/engine.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace hamel::cli {

struct Config {
    int generators = 1;
    int max_letters = 1;
    int num_stages = 0;
    std::uint64_t seed = 0;
    int seed_symbols = 1;
    std::string snapshots = "none";     // none | last | all
    std::string assert_level = "end";   // stage | end
    std::string out_path = "state.dump";
    std::string format = "text";        // text | structured
    bool allow_warn = false;
};

engine::EngineConfig to_engine_config(const Config& cfg);

// Exit codes, also used by the binary: 0 success, 1 check or construction
// failure, 2 usage or IO error.
int cmd_build(const Config& cfg, std::ostream& out, std::ostream& err);
// With a dump path, verifies the file; with an empty path, runs the config
// in memory first. max_letters <= 0 means infer the cap from the log.
int cmd_verify(const Config& cfg, const std::string& dump_path, int max_letters,
               std::ostream& out, std::ostream& err);
int cmd_trace(const Config& cfg, int stage_idx, std::ostream& out, std::ostream& err);
int cmd_stats(const std::string& dump_path, std::ostream& out, std::ostream& err);

// Full argv-level entry point (flag parsing included); what main() calls.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hamel::cli
