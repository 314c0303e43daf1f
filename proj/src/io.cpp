#include "psikit/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace psikit {

namespace {

std::string compText(const Composition& alpha) { return alpha.str(); }

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skipWs() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skipWs();
        return i >= s.size();
    }
    char peek() {
        skipWs();
        if (i >= s.size()) throw ParseError("unexpected end of expression");
        return s[i];
    }
    char take() {
        char c = peek();
        ++i;
        return c;
    }
    void expect(char c) {
        if (take() != c) throw ParseError(std::string("expected '") + c + "'");
    }
    BigInt integer() {
        skipWs();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected an integer");
        return BigInt(s.substr(start, i - start));
    }
    std::string word() {
        skipWs();
        size_t start = i;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected a basis name");
        return s.substr(start, i - start);
    }
};

Basis basisFromName(const std::string& name) {
    if (name == "M") return Basis::M;
    if (name == "L") return Basis::L;
    if (name == "psi") return Basis::Psi;
    throw ParseError("unknown basis '" + name + "'");
}

Composition compositionAt(Cursor& c) {
    c.expect('[');
    std::vector<int> parts;
    if (c.peek() != ']') {
        while (true) {
            BigInt p = c.integer();
            if (p < 1 || p > 1000000) throw ParseError("composition part out of range");
            parts.push_back(static_cast<int>(p));
            if (c.peek() == ']') break;
            c.expect(',');
        }
    }
    c.expect(']');
    return Composition(std::move(parts));
}

}  // namespace

std::string ratText(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat parseRat(const std::string& text) {
    Cursor c{text};
    bool neg = false;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) neg = c.take() == '-';
    BigInt num = c.integer();
    BigInt den = 1;
    if (!c.done() && c.peek() == '/') {
        c.take();
        den = c.integer();
        if (den == 0) throw ParseError("zero denominator");
    }
    if (!c.done()) throw ParseError("trailing characters in rational");
    Rat r(num, den);
    return neg ? -r : r;
}

Composition parseComposition(const std::string& text) {
    Cursor c{text};
    Composition out = compositionAt(c);
    if (!c.done()) throw ParseError("trailing characters after composition");
    return out;
}

std::string toText(const QSymElement& f) {
    if (f.isZero()) return "0";
    std::string name = basisName(f.basis());
    std::string out;
    bool first = true;
    for (const auto& [alpha, coef] : f.terms()) {
        Rat a = coef < 0 ? Rat(-coef) : coef;
        if (first) {
            if (coef < 0) out += "-";
            first = false;
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        out += ratText(a) + "*" + name + compText(alpha);
    }
    return out;
}

QSymElement parseExpression(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty expression");
    // A bare "0" denotes the zero element (monomial basis by convention).
    if (c.peek() == '0') {
        c.take();
        if (!c.done()) throw ParseError("trailing characters after 0");
        return QSymElement::zero(Basis::M);
    }
    std::optional<Basis> basis;
    QSymElement out(Basis::M);
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.peek() == '-' || c.peek() == '+') {
            neg = c.take() == '-';
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        Rat coef(1);
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            BigInt num = c.integer();
            BigInt den = 1;
            if (!c.done() && c.peek() == '/') {
                c.take();
                den = c.integer();
                if (den == 0) throw ParseError("zero denominator");
            }
            coef = Rat(num, den);
            c.expect('*');
        }
        Basis b = basisFromName(c.word());
        if (basis && *basis != b) throw ParseError("mixed bases in one expression");
        if (!basis) {
            basis = b;
            out = QSymElement(b);
        }
        Composition alpha = compositionAt(c);
        out.addTerm(alpha, neg ? Rat(-coef) : coef);
        first = false;
    }
    return out;
}

nlohmann::json toJson(const QSymElement& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, coef] : f.terms()) {
        terms.push_back({{"comp", alpha.parts()}, {"coef", ratText(coef)}});
    }
    return {{"basis", basisName(f.basis())}, {"terms", terms}};
}

QSymElement qsymFromJson(const nlohmann::json& j) {
    try {
        QSymElement out(basisFromName(j.at("basis").get<std::string>()));
        for (const auto& t : j.at("terms")) {
            Composition alpha(t.at("comp").get<std::vector<int>>());
            out.addTerm(alpha, parseRat(t.at("coef").get<std::string>()));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad qsym json: ") + e.what());
    }
}

nlohmann::json toJson(const LabeledPoset& p) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return {{"n", p.size()}, {"covers", covers}};
}

LabeledPoset posetFromJson(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> rels;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw ParseError("cover must be a pair");
            rels.emplace_back(c[0].get<int>(), c[1].get<int>());
        }
        return LabeledPoset(n, rels);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad poset json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad poset json: ") + e.what());
    }
}

nlohmann::json toJson(const SkewShape& s) {
    return {{"lambda", s.lambda().parts()}, {"mu", s.mu().parts()}};
}

SkewShape shapeFromJson(const nlohmann::json& j) {
    try {
        Partition lambda(j.at("lambda").get<std::vector<int>>());
        Partition mu;
        if (j.contains("mu")) mu = Partition(j.at("mu").get<std::vector<int>>());
        return SkewShape(lambda, mu);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad shape json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad shape json: ") + e.what());
    }
}

}  // namespace psikit
