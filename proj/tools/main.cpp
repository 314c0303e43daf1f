// psikit: compositions, quasisymmetric functions, labeled posets, and
// border-strip expansions on the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/input error,
// 3 enumeration guard exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psikit/composition.hpp"
#include "psikit/io.hpp"
#include "psikit/poset.hpp"
#include "psikit/ppartition.hpp"
#include "psikit/qsym.hpp"
#include "psikit/tableaux.hpp"

namespace {

using namespace psikit;
using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

std::string readInput(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parseJsonInput(const std::string& arg) {
    try {
        return json::parse(readInput(arg));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

LabeledPoset readPoset(const std::string& arg) { return posetFromJson(parseJsonInput(arg)); }

SkewShape readShape(const std::string& arg) { return shapeFromJson(parseJsonInput(arg)); }

// Expression arguments are inline text ("2*psi[2] - 1*psi[1,1]"), a file
// name, or "-" for stdin.
QSymElement readExpression(const std::string& arg) {
    if (arg != "-" && arg.find('[') != std::string::npos) return parseExpression(arg);
    std::string text = readInput(arg);
    if (!text.empty() && text.front() == '{') return qsymFromJson(json::parse(text));
    return parseExpression(text);
}

Basis parseBasis(const std::string& name) {
    if (name == "M") return Basis::M;
    if (name == "L") return Basis::L;
    if (name == "psi") return Basis::Psi;
    throw ParseError("unknown basis: " + name + " (expected M, L, or psi)");
}

void printElement(const QSymElement& f, const std::string& format) {
    if (format == "json") {
        std::cout << toJson(f).dump(2) << "\n";
    } else {
        std::cout << toText(f) << "\n";
    }
}

std::string tensorText(const TensorElement& t) {
    if (t.isZero()) return "0";
    std::string name = basisName(t.basis());
    std::string out;
    for (const auto& [legs, coef] : t.terms()) {
        std::string term = ratText(coef);
        for (const auto& leg : legs) term += "*" + name + leg.str();
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

json tensorJson(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [legs, coef] : t.terms()) {
        json legsJson = json::array();
        for (const auto& leg : legs) legsJson.push_back(leg.parts());
        terms.push_back({{"legs", legsJson}, {"coef", ratText(coef)}});
    }
    return {{"basis", basisName(t.basis())}, {"arity", t.arity()}, {"terms", terms}};
}

int verifyFail(const std::string& message) {
    std::cerr << "verification failed: " << message << "\n";
    return kExitVerify;
}

int cmdKpw(const std::string& file, const std::string& basis, bool verify,
           const std::string& format, int guard) {
    LabeledPoset p = readPoset(file);
    QSymElement k = kGeneratingFunction(p, guard);
    QSymElement out = convert(k, parseBasis(basis));
    printElement(out, format);
    if (verify) {
        QSymElement viaConversion = convert(k, Basis::Psi);
        QSymElement viaPointed = psiExpansionPointed(p, guard);
        if (!(viaConversion == viaPointed)) {
            return verifyFail("pointed-partition route disagrees with basis conversion: " +
                              toText(viaConversion) + " vs " + toText(viaPointed));
        }
    }
    return 0;
}

int cmdKtilde(const std::string& file, bool verify, const std::string& format, int guard) {
    LabeledPoset p = readPoset(file);
    QSymElement kt = kTilde(p, guard);
    printElement(kt, format);
    if (verify) {
        // kTilde must equal the minimal-length truncation of K in the psi basis.
        QSymElement full = convert(kGeneratingFunction(p, guard), Basis::Psi);
        int minLen = 0;
        bool first = true;
        for (const auto& [alpha, coef] : full.terms()) {
            if (first || alpha.length() < minLen) minLen = alpha.length();
            first = false;
        }
        QSymElement truncated = QSymElement::zero(Basis::Psi);
        for (const auto& [alpha, coef] : full.terms()) {
            if (alpha.length() == minLen) truncated.addTerm(alpha, coef);
        }
        if (!(kt == truncated)) {
            return verifyFail("minimal-length truncation of K is " + toText(truncated) +
                              ", not " + toText(kt));
        }
    }
    return 0;
}

int cmdZigzag(const std::string& file, bool verify, bool list, const std::string& format,
              int guard) {
    LabeledPoset p = readPoset(file);
    if (!p.naturallyLabeled()) throw ParseError("poset is not naturally labeled");
    BigInt count = zigzagCountFormula(p);
    std::vector<std::vector<int>> labelings;
    if (verify || list) labelings = enumerateZigzagLabelings(p, guard);
    if (format == "json") {
        json j = {{"count", count.str()}};
        if (list) {
            json all = json::array();
            for (const auto& phi : labelings) all.push_back(phi);
            j["labelings"] = all;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << count << "\n";
        if (list) {
            for (const auto& phi : labelings) {
                std::string line;
                for (size_t i = 0; i < phi.size(); ++i) {
                    if (i) line += " ";
                    line += std::to_string(phi[i]);
                }
                std::cout << line << "\n";
            }
        }
    }
    if (verify && BigInt(labelings.size()) != count) {
        return verifyFail("formula gives " + count.str() + " but enumeration finds " +
                          std::to_string(labelings.size()));
    }
    return 0;
}

int cmdIrreducible(const std::string& file, const std::string& format) {
    LabeledPoset p = readPoset(file);
    if (!p.naturallyLabeled()) throw ParseError("poset is not naturally labeled");
    bool irr = isIrreducibleNatural(p);
    std::vector<int> factors;
    for (const LabeledPoset& c : p.components()) factors.push_back(c.size());
    if (format == "json") {
        std::cout << json{{"irreducible", irr}, {"factors", factors}}.dump(2) << "\n";
    } else if (irr) {
        std::cout << "irreducible\n";
    } else {
        std::string sizes;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) sizes += ",";
            sizes += std::to_string(factors[i]);
        }
        std::cout << "reducible, factors [" << sizes << "]\n";
    }
    return 0;
}

int cmdSpDistinguish(int maxN, const std::string& format, int guard) {
    json report = json::array();
    bool ok = true;
    for (int n = 1; n <= maxN; ++n) {
        std::vector<LabeledPoset> classes = enumerateSeriesParallel(n, guard);
        std::map<std::map<Composition, Rat>, int> seen;
        int collisions = 0;
        for (size_t i = 0; i < classes.size(); ++i) {
            QSymElement k = convert(kGeneratingFunction(classes[i]), Basis::Psi);
            auto [it, inserted] = seen.emplace(k.terms(), static_cast<int>(i));
            if (!inserted) {
                ++collisions;
                ok = false;
                std::cerr << "collision at n=" << n << ": classes " << it->second << " and "
                          << i << " share K = " << toText(k) << "\n";
            }
        }
        if (format == "json") {
            report.push_back({{"n", n},
                              {"classes", classes.size()},
                              {"distinct", seen.size()},
                              {"collisions", collisions}});
        } else {
            std::cout << "n=" << n << ": " << classes.size() << " classes, " << seen.size()
                      << " distinct K" << (collisions ? " (COLLISION)" : "") << "\n";
        }
    }
    if (format == "json") std::cout << report.dump(2) << "\n";
    return ok ? 0 : kExitVerify;
}

int cmdMn(const std::string& file, bool table, bool min1Flag, bool verify,
          const std::string& format, int guard) {
    SkewShape shape = readShape(file);
    if (min1Flag) {
        std::cout << ratText(min1Skew(shape)) << "\n";
        if (verify) {
            Rat direct = min1(skewSchurPsi(shape, guard));
            if (direct != min1Skew(shape)) {
                return verifyFail("border-strip test gives " + ratText(min1Skew(shape)) +
                                  " but the expansion gives " + ratText(direct));
            }
        }
        return 0;
    }
    if (table) {
        json rows = json::array();
        for (const Composition& alpha : compositionsOf(shape.cellCount())) {
            BigInt value = chi(shape, alpha);
            if (format == "json") {
                rows.push_back({{"alpha", alpha.parts()}, {"chi", value.str()}});
            } else {
                std::cout << "chi" << alpha.str() << " = " << value << "\n";
            }
        }
        if (format == "json") std::cout << rows.dump(2) << "\n";
        return 0;
    }
    QSymElement expansion = skewSchurPsi(shape, guard);
    printElement(expansion, format);
    if (verify) {
        QSymElement viaPoset = convert(kGeneratingFunction(skewShapePoset(shape), guard),
                                       Basis::Psi);
        if (!(expansion == viaPoset)) {
            return verifyFail("cell-poset route gives " + toText(viaPoset));
        }
    }
    return 0;
}

int cmdConvert(const std::string& expr, const std::string& to, const std::string& format) {
    printElement(convert(readExpression(expr), parseBasis(to)), format);
    return 0;
}

int cmdFunctional(const std::string& expr, const std::string& which) {
    QSymElement f = readExpression(expr);
    if (which == "min1") {
        std::cout << ratText(min1(f)) << "\n";
    } else if (which == "max1") {
        std::cout << ratText(max1(f)) << "\n";
    } else {
        throw ParseError("unknown functional: " + which + " (expected min1 or max1)");
    }
    return 0;
}

int cmdAuto(const std::string& expr, const std::string& which, const std::string& format) {
    Automorphism a;
    if (which == "omega") {
        a = Automorphism::Omega;
    } else if (which == "rho") {
        a = Automorphism::Rho;
    } else if (which == "omegarho") {
        a = Automorphism::OmegaRho;
    } else {
        throw ParseError("unknown automorphism: " + which +
                         " (expected omega, rho, or omegarho)");
    }
    printElement(automorphism(readExpression(expr), a), format);
    return 0;
}

int cmdProduct(const std::string& exprA, const std::string& exprB, const std::string& format) {
    printElement(readExpression(exprA) * readExpression(exprB), format);
    return 0;
}

int cmdCoproduct(const std::string& expr, const std::string& format) {
    TensorElement t = coproduct(readExpression(expr));
    if (format == "json") {
        std::cout << tensorJson(t).dump(2) << "\n";
    } else {
        std::cout << tensorText(t) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasisymmetric functions, labeled posets, and border strips"};
    app.require_subcommand(1);

    std::string format = "text";
    int guard = 12;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--guard", guard, "Enumeration size cap")->check(CLI::PositiveNumber);

    std::string posetFile, shapeFile, expr, exprB;
    std::string basis = "L";
    std::string to = "M";
    std::string which;
    bool verify = false, list = false, table = false, min1Flag = false;
    int maxN = 5;

    CLI::App* kpw = app.add_subcommand("kpw", "Partition generating function of a poset");
    kpw->add_option("poset", posetFile, "Poset JSON file or -")->required();
    kpw->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"M", "L", "psi"}));
    kpw->add_flag("--verify", verify, "Cross-check the pointed-partition route");

    CLI::App* ktilde = app.add_subcommand("ktilde", "Minimal-length truncation of K");
    ktilde->add_option("poset", posetFile, "Poset JSON file or -")->required();
    ktilde->add_flag("--verify", verify, "Cross-check against the truncation of K");

    CLI::App* zigzag = app.add_subcommand("zigzag", "Count zigzag labelings");
    zigzag->add_option("poset", posetFile, "Poset JSON file or -")->required();
    zigzag->add_flag("--verify", verify, "Also enumerate and compare");
    zigzag->add_flag("--list", list, "Print the labelings");

    CLI::App* irred = app.add_subcommand("irreducible", "Test irreducibility of K-tilde");
    irred->add_option("poset", posetFile, "Poset JSON file or -")->required();

    CLI::App* spd = app.add_subcommand("sp-distinguish",
                                       "Check series-parallel posets have distinct K");
    spd->add_option("n", maxN, "Maximum number of elements")->required()
        ->check(CLI::Range(1, 8));

    CLI::App* mn = app.add_subcommand("mn", "Border-strip expansion of a skew Schur function");
    mn->add_option("shape", shapeFile, "Shape JSON file or -")->required();
    mn->add_flag("--table", table, "Print chi for every composition");
    mn->add_flag("--min1", min1Flag, "Print min1 of the skew Schur function");
    mn->add_flag("--verify", verify, "Cross-check against the cell-poset route");

    CLI::App* conv = app.add_subcommand("convert", "Change of basis");
    conv->add_option("expr", expr, "Expression, file, or -")->required();
    conv->add_option("--to", to, "Target basis")->check(CLI::IsMember({"M", "L", "psi"}));

    CLI::App* func = app.add_subcommand("functional", "Apply min1 or max1");
    func->add_option("expr", expr, "Expression, file, or -")->required();
    func->add_option("which", which, "min1 or max1")->required();

    CLI::App* aut = app.add_subcommand("auto", "Apply omega, rho, or omegarho");
    aut->add_option("expr", expr, "Expression, file, or -")->required();
    aut->add_option("which", which, "omega, rho, or omegarho")->required();

    CLI::App* prod = app.add_subcommand("product", "Multiply two expressions");
    prod->add_option("a", expr, "Expression, file, or -")->required();
    prod->add_option("b", exprB, "Expression, file, or -")->required();

    CLI::App* cop = app.add_subcommand("coproduct", "Binary coproduct");
    cop->add_option("expr", expr, "Expression, file, or -")->required();

    // Let --format/--guard be given after the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (kpw->parsed()) return cmdKpw(posetFile, basis, verify, format, guard);
        if (ktilde->parsed()) return cmdKtilde(posetFile, verify, format, guard);
        if (zigzag->parsed()) return cmdZigzag(posetFile, verify, list, format, guard);
        if (irred->parsed()) return cmdIrreducible(posetFile, format);
        if (spd->parsed()) return cmdSpDistinguish(maxN, format, guard);
        if (mn->parsed()) return cmdMn(shapeFile, table, min1Flag, verify, format, guard);
        if (conv->parsed()) return cmdConvert(expr, to, format);
        if (func->parsed()) return cmdFunctional(expr, which);
        if (aut->parsed()) return cmdAuto(expr, which, format);
        if (prod->parsed()) return cmdProduct(expr, exprB, format);
        if (cop->parsed()) return cmdCoproduct(expr, format);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
