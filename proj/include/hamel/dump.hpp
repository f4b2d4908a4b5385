#pragma once

#include "hamel/verify.hpp"

#include <stdexcept>
#include <string>

namespace hamel::dump {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Line-based text form: a header, one "gen <g>:" section per generator with
// its graph points sorted by the first component's text, then a "log:"
// section with one stage line each. Fully deterministic for a given view.
std::string write_text(const verify::StateView& view);
// Field-for-field JSON mirror of the text form, also deterministic.
std::string write_json(const verify::StateView& view);

verify::StateView parse_text(const std::string& content);
verify::StateView parse_json(const std::string& content);

// Reads a dump file, dispatching on the leading character ('{' means JSON).
verify::StateView load(const std::string& path);
void save(const verify::StateView& view, const std::string& path, bool structured);

}  // namespace hamel::dump
