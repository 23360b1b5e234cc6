/*
 * io.hpp
 * ------
 * Line-based text formats:
 *   graph:   `vertex <id>` and `edge <id> <v1> <v2> <p>/<q>`
 *   point:   `v:<id>` or `e:<id>@<p>/<q>`
 *   divisor: `chip <point> <integer>`
 *   group:   `auto`, `rotate <p>/<q>`, `reflect <point> <point>`,
 *            `map v<i>-><j> ... ; e<a>-><b>[+|-] ...`
 * Vertex and edge ids must be 0,1,2,... in order of first appearance.
 * Parse errors carry line numbers.
 */
#pragma once

#include "tropcurve/automorphism.hpp"
#include "tropcurve/divisor.hpp"
#include "tropcurve/model.hpp"
#include "tropcurve/rational_fn.hpp"

#include <memory>
#include <string>

namespace tropcurve {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::shared_ptr<const Model> parse_model(const std::string& text);
std::string serialize_model(const Model& m);

Point parse_point(const Model& m, const std::string& token);

Divisor parse_divisor(const Model& m, const std::string& text);
std::string serialize_divisor(const Divisor& d);

// Requires the model (shared for the automorphism frames). `auto` lines ask
// for the full automorphism group; otherwise generators accumulate.
FiniteGroup parse_group(std::shared_ptr<const Model> m, const std::string& text);

std::string serialize_function(const RationalFunction& f);

} // namespace tropcurve
