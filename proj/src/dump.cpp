#include "hamel/dump.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace hamel::dump {

namespace {

// Graph lines are ordered by the first component's text form (ties by the
// second's) so dumps are diffable and reload in a stable order.
std::vector<std::string> sorted_lines(const std::vector<PairVec>& graph) {
    std::vector<std::pair<std::string, std::string>> keyed;
    keyed.reserve(graph.size());
    for (const auto& pt : graph) keyed.emplace_back(pt.first.str(), pt.second.str());
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    out.reserve(keyed.size());
    for (const auto& [a, b] : keyed) out.push_back("<" + a + " | " + b + ">");
    return out;
}

std::string log_line(std::size_t idx, const verify::LogEntry& e) {
    return "stage " + std::to_string(idx) + ": x=" + e.x.str() +
           " word=" + e.word.str() + " gen=" + std::to_string(e.gen) +
           " skipV=" + (e.skip_v ? "1" : "0") +
           " skipVI=" + (e.skip_vi ? "1" : "0") +
           " skipVII=" + (e.skip_vii ? "1" : "0");
}

}  // namespace

std::string write_text(const verify::StateView& view) {
    std::string out = "hamel-forge v1 G=" + std::to_string(view.generators) +
                      " stages=" + std::to_string(view.stages) + "\n";
    for (std::size_t g = 0; g < view.graphs.size(); ++g) {
        out += "gen " + std::to_string(g) + ":\n";
        for (const auto& line : sorted_lines(view.graphs[g])) out += "  " + line + "\n";
    }
    out += "log:\n";
    for (std::size_t k = 0; k < view.log.size(); ++k)
        out += "  " + log_line(k, view.log[k]) + "\n";
    return out;
}

std::string write_json(const verify::StateView& view) {
    nlohmann::ordered_json j;
    j["format"] = "hamel-forge";
    j["version"] = 1;
    j["G"] = view.generators;
    j["stages"] = view.stages;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& graph : view.graphs) gens.push_back(sorted_lines(graph));
    j["gens"] = std::move(gens);
    auto log = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < view.log.size(); ++k) {
        const auto& e = view.log[k];
        log.push_back({{"stage", k},
                       {"x", e.x.str()},
                       {"word", e.word.str()},
                       {"gen", e.gen},
                       {"skipV", e.skip_v},
                       {"skipVI", e.skip_vi},
                       {"skipVII", e.skip_vii}});
    }
    j["log"] = std::move(log);
    return j.dump(2) + "\n";
}

namespace {

struct Lines {
    std::vector<std::string> v;
    std::size_t pos = 0;

    bool done() const { return pos >= v.size(); }
    int lineno() const { return static_cast<int>(pos) + 1; }
    const std::string& peek() const { return v[pos]; }
    std::string take() { return v[pos++]; }
};

[[noreturn]] void fail(const Lines& ls, const std::string& msg) {
    const int line = ls.done() ? static_cast<int>(ls.v.size()) : ls.lineno();
    throw ParseError(std::max(1, line), msg);
}

// Consumes "<key>=<value>" from a space-separated token.
std::string field(const Lines& ls, const std::string& token, const std::string& key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        fail(ls, "expected " + key + "=..., got '" + token + "'");
    return token.substr(key.size() + 1);
}

long long to_int(const Lines& ls, const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(ls, "expected integer, got '" + text + "'");
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_skip(const Lines& ls, const std::string& v) {
    if (v == "0") return false;
    if (v == "1") return true;
    fail(ls, "skip flag must be 0 or 1, got '" + v + "'");
}

}  // namespace

verify::StateView parse_text(const std::string& content) {
    Lines ls;
    {
        std::string line;
        std::istringstream in(content);
        while (std::getline(in, line)) ls.v.push_back(line);
    }
    verify::StateView view;

    if (ls.done()) fail(ls, "empty dump");
    {
        auto toks = split_ws(ls.peek());
        if (toks.size() != 4 || toks[0] != "hamel-forge" || toks[1] != "v1")
            fail(ls, "bad header, expected 'hamel-forge v1 G=<G> stages=<N>'");
        view.generators = static_cast<int>(to_int(ls, field(ls, toks[2], "G")));
        view.stages = static_cast<int>(to_int(ls, field(ls, toks[3], "stages")));
        if (view.generators < 0) fail(ls, "negative generator count");
        ls.take();
    }

    view.graphs.resize(static_cast<std::size_t>(view.generators));
    for (int g = 0; g < view.generators; ++g) {
        const std::string want = "gen " + std::to_string(g) + ":";
        if (ls.done() || ls.peek() != want) fail(ls, "expected '" + want + "'");
        ls.take();
        while (!ls.done() && ls.peek().rfind("  <", 0) == 0) {
            try {
                view.graphs[static_cast<std::size_t>(g)].push_back(
                    PairVec::parse(ls.peek().substr(2)));
            } catch (const std::exception& e) {
                fail(ls, e.what());
            }
            ls.take();
        }
    }

    if (ls.done() || ls.peek() != "log:") fail(ls, "expected 'log:'");
    ls.take();
    while (!ls.done()) {
        if (ls.peek().rfind("  stage ", 0) != 0) fail(ls, "expected stage line");
        auto toks = split_ws(ls.peek());
        if (toks.size() != 8 || toks[0] != "stage" || toks[1].empty() ||
            toks[1].back() != ':')
            fail(ls, "malformed stage line");
        long long idx = to_int(ls, toks[1].substr(0, toks[1].size() - 1));
        if (idx != static_cast<long long>(view.log.size()))
            fail(ls, "stage index " + std::to_string(idx) + " out of sequence");
        verify::LogEntry e;
        try {
            e.x = Vec1::parse(field(ls, toks[2], "x"));
            e.word = Word::parse(field(ls, toks[3], "word"));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            fail(ls, ex.what());
        }
        e.gen = static_cast<GenId>(to_int(ls, field(ls, toks[4], "gen")));
        e.skip_v = parse_skip(ls, field(ls, toks[5], "skipV"));
        e.skip_vi = parse_skip(ls, field(ls, toks[6], "skipVI"));
        e.skip_vii = parse_skip(ls, field(ls, toks[7], "skipVII"));
        view.log.push_back(std::move(e));
        ls.take();
    }
    return view;
}

verify::StateView parse_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1 + static_cast<int>(std::count(
                           content.begin(),
                           content.begin() + std::min(content.size(), e.byte), '\n'));
        throw ParseError(line, e.what());
    }
    try {
        if (j.at("format") != "hamel-forge" || j.at("version") != 1)
            throw std::invalid_argument("not a hamel-forge dump");
        verify::StateView view;
        view.generators = j.at("G").get<int>();
        view.stages = j.at("stages").get<int>();
        for (const auto& gen : j.at("gens")) {
            std::vector<PairVec> graph;
            for (const auto& line : gen) graph.push_back(PairVec::parse(line.get<std::string>()));
            view.graphs.push_back(std::move(graph));
        }
        if (view.graphs.size() != static_cast<std::size_t>(view.generators))
            throw std::invalid_argument("generator count does not match sections");
        for (const auto& entry : j.at("log")) {
            verify::LogEntry e;
            e.x = Vec1::parse(entry.at("x").get<std::string>());
            e.word = Word::parse(entry.at("word").get<std::string>());
            e.gen = entry.at("gen").get<GenId>();
            e.skip_v = entry.at("skipV").get<bool>();
            e.skip_vi = entry.at("skipVI").get<bool>();
            e.skip_vii = entry.at("skipVII").get<bool>();
            view.log.push_back(std::move(e));
        }
        return view;
    } catch (const std::exception& e) {
        throw ParseError(1, e.what());
    }
}

verify::StateView load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') return parse_json(content);
    return parse_text(content);
}

void save(const verify::StateView& view, const std::string& path, bool structured) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << (structured ? write_json(view) : write_text(view));
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace hamel::dump
