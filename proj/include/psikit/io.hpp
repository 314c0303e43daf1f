#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "psikit/poset.hpp"
#include "psikit/qsym.hpp"

namespace psikit {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text form: "-1*psi[3] + 2*psi[1,1,1]"; zero prints as "0".  Coefficients
// are p or p/q in lowest terms; parsing the printed form reproduces the
// element exactly.
std::string toText(const QSymElement& f);
QSymElement parseExpression(const std::string& text);

std::string ratText(const Rat& r);
Rat parseRat(const std::string& text);

Composition parseComposition(const std::string& text);  // "[1,1,4,2,1]"

// JSON form: {"basis": "psi", "terms": [{"comp": [3,2], "coef": "1/2"}]}.
nlohmann::json toJson(const QSymElement& f);
QSymElement qsymFromJson(const nlohmann::json& j);

// {"n": 5, "covers": [[1,3],[3,5]]}
nlohmann::json toJson(const LabeledPoset& p);
LabeledPoset posetFromJson(const nlohmann::json& j);

// {"lambda": [6,5,2], "mu": [2,1]}; "mu" may be omitted.
nlohmann::json toJson(const SkewShape& s);
SkewShape shapeFromJson(const nlohmann::json& j);

}  // namespace psikit
