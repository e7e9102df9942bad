#ifndef DYNATOMIC_MAPSPEC_HPP
#define DYNATOMIC_MAPSPEC_HPP

// The CLI-facing map description: a small expression language (variables,
// integer/rational literals, + - * ^ with nonnegative integer exponents,
// parentheses; coordinates comma-separated) resolved against a declared
// coefficient field into a validated PolyMap.

#include "dynatomic/polymap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynatomic {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line), column(column) {}
    int line;
    int column;
};

struct MapSpec {
    std::string field_text;         // "Q" | "F<p>" | "F<p>^<k>"
    std::vector<std::string> vars;
    std::string model = "affine";   // "affine" | "P1"
    std::vector<std::string> coords_canonical; // canonical expanded renderings
    Field field = Field::Q();
    std::optional<PolyMap> map;

    std::string render() const; // comma-joined canonical coordinates
};

// field_text: required ("Q", "F5", "F5^2", ...). vars: explicit variable
// list; if empty, a single variable is inferred for univariate input
// (multivariate input requires the explicit list). "t" is reserved for the
// deformation parameter.
MapSpec parse_map(const std::string& text, const std::string& field_text,
                  const std::vector<std::string>& vars = {},
                  const std::string& model = "affine");

Field parse_field_descriptor(const std::string& text);

// Canonical expanded rendering of one coordinate.
std::string render_poly(const Poly& p, const std::vector<std::string>& vars);

} // namespace dynatomic

#endif
