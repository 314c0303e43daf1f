#include "psikit/qsym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace psikit {

std::string basisName(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::L: return "L";
        case Basis::Psi: return "psi";
    }
    throw std::logic_error("unknown basis");
}

QSymElement QSymElement::one(Basis b) { return term(b, Composition{}, 1); }

QSymElement QSymElement::term(Basis b, const Composition& alpha, const Rat& coef) {
    QSymElement f(b);
    f.addTerm(alpha, coef);
    return f;
}

Rat QSymElement::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rat(0) : it->second;
}

void QSymElement::addTerm(const Composition& alpha, const Rat& coef) {
    if (coef == 0) return;
    Rat& c = terms_[alpha];
    c += coef;
    if (c == 0) terms_.erase(alpha);
}

std::set<int> QSymElement::degrees() const {
    std::set<int> d;
    for (const auto& [alpha, coef] : terms_) d.insert(alpha.size());
    return d;
}

int QSymElement::degree() const {
    std::set<int> d = degrees();
    if (d.size() != 1) throw std::domain_error("degree: element is not homogeneous nonzero");
    return *d.begin();
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch in addition");
    for (const auto& [alpha, coef] : other.terms_) addTerm(alpha, coef);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch in subtraction");
    for (const auto& [alpha, coef] : other.terms_) addTerm(alpha, -coef);
    return *this;
}

QSymElement& QSymElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coef] : terms_) coef *= c;
    return *this;
}

bool operator==(const QSymElement& a, const QSymElement& b) {
    if (a.basis() == b.basis()) return a.terms() == b.terms();
    return convert(a, Basis::M).terms() == convert(b, Basis::M).terms();
}

void TensorElement::addTerm(const std::vector<Composition>& legs, const Rat& coef) {
    if (static_cast<int>(legs.size()) != arity_) {
        throw std::invalid_argument("tensor arity mismatch");
    }
    if (coef == 0) return;
    Rat& c = terms_[legs];
    c += coef;
    if (c == 0) terms_.erase(legs);
}

Rat TensorElement::coefficient(const std::vector<Composition>& legs) const {
    auto it = terms_.find(legs);
    return it == terms_.end() ? Rat(0) : it->second;
}

namespace {

// psi_alpha = sum over coarsenings beta of (1/pi(alpha,beta)) M_beta.
QSymElement psiTermInM(const Composition& alpha) {
    QSymElement out(Basis::M);
    for (const Composition& beta : alpha.coarsenings()) {
        out.addTerm(beta, Rat(1) / Rat(pi(alpha, beta)));
    }
    return out;
}

// L_alpha = sum over refinements beta of M_beta.
QSymElement lTermInM(const Composition& alpha) {
    QSymElement out(Basis::M);
    for (const Composition& beta : alpha.refinements()) out.addTerm(beta, 1);
    return out;
}

// M_alpha = sum over refinements beta of (-1)^{l(beta)-l(alpha)} L_beta.
QSymElement mTermInL(const Composition& alpha) {
    QSymElement out(Basis::L);
    for (const Composition& beta : alpha.refinements()) {
        out.addTerm(beta, ((beta.length() - alpha.length()) % 2) ? Rat(-1) : Rat(1));
    }
    return out;
}

// M_alpha in the Psi basis, by back-substitution along coarsening (coarser
// compositions are strictly shorter, so the recursion terminates).
const QSymElement& mTermInPsi(const Composition& alpha) {
    static std::map<Composition, QSymElement> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto rec = [&](auto&& self, const Composition& a) -> const QSymElement& {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        QSymElement out = QSymElement::term(Basis::Psi, a, 1);
        Rat lead = 1;  // pi(a, a) = product of the parts of a
        for (int p : a.parts()) lead *= p;
        for (const Composition& beta : a.coarsenings()) {
            if (beta == a) continue;
            QSymElement sub = self(self, beta);
            sub *= Rat(-1) / Rat(pi(a, beta));
            out += sub;
        }
        out *= lead;
        return cache.emplace(a, std::move(out)).first->second;
    };
    return rec(rec, alpha);
}

QSymElement mapTerms(const QSymElement& f, Basis target,
                     const std::function<QSymElement(const Composition&)>& imageOfTerm) {
    QSymElement out(target);
    for (const auto& [alpha, coef] : f.terms()) {
        QSymElement img = imageOfTerm(alpha);
        img *= coef;
        out += img;
    }
    return out;
}

}  // namespace

QSymElement convert(const QSymElement& f, Basis target) {
    if (f.basis() == target) return f;
    switch (f.basis()) {
        case Basis::M:
            if (target == Basis::L) return mapTerms(f, target, mTermInL);
            return mapTerms(f, target, [](const Composition& a) { return mTermInPsi(a); });
        case Basis::L:
            if (target == Basis::M) return mapTerms(f, target, lTermInM);
            return convert(convert(f, Basis::M), Basis::Psi);
        case Basis::Psi:
            if (target == Basis::M) return mapTerms(f, target, psiTermInM);
            return convert(convert(f, Basis::M), Basis::L);
    }
    throw std::logic_error("unknown basis");
}

namespace {

// Quasi-shuffle of compositions: interleave parts, optionally fusing one part
// of each side.
void quasiShuffleRec(const std::vector<int>& a, size_t i, const std::vector<int>& b, size_t j,
                     std::vector<int>& cur, const Rat& coef, QSymElement& out) {
    if (i == a.size() && j == b.size()) {
        out.addTerm(Composition(cur), coef);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        quasiShuffleRec(a, i + 1, b, j, cur, coef, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        quasiShuffleRec(a, i, b, j + 1, cur, coef, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        quasiShuffleRec(a, i + 1, b, j + 1, cur, coef, out);
        cur.pop_back();
    }
}

}  // namespace

QSymElement multiply(const QSymElement& f, const QSymElement& g) {
    Basis b = f.basis();
    QSymElement gg = convert(g, b);
    QSymElement out(b);
    switch (b) {
        case Basis::Psi:
            for (const auto& [alpha, ca] : f.terms()) {
                for (const auto& [beta, cb] : gg.terms()) {
                    for (const Composition& gamma : shuffles(alpha, beta)) {
                        out.addTerm(gamma, ca * cb);
                    }
                }
            }
            return out;
        case Basis::M:
            for (const auto& [alpha, ca] : f.terms()) {
                for (const auto& [beta, cb] : gg.terms()) {
                    std::vector<int> cur;
                    quasiShuffleRec(alpha.parts(), 0, beta.parts(), 0, cur, ca * cb, out);
                }
            }
            return out;
        case Basis::L: {
            QSymElement prod =
                multiply(convert(f, Basis::M), convert(g, Basis::M));
            return convert(prod, Basis::L);
        }
    }
    throw std::logic_error("unknown basis");
}

namespace {

// The two halves of L_beta when its word is cut after position p.
std::pair<Composition, Composition> cutFundamental(const Composition& beta, int p) {
    int n = beta.size();
    std::set<int> d = beta.descentSet();
    std::set<int> left, right;
    for (int x : d) {
        if (x < p) left.insert(x);
        if (x > p) right.insert(x - p);
    }
    return {Composition::ofSet(left, p), Composition::ofSet(right, n - p)};
}

}  // namespace

TensorElement coproduct(const QSymElement& f) {
    TensorElement out(f.basis(), 2);
    for (const auto& [alpha, coef] : f.terms()) {
        if (f.basis() == Basis::L) {
            for (int p = 0; p <= alpha.size(); ++p) {
                auto [l, r] = cutFundamental(alpha, p);
                out.addTerm({l, r}, coef);
            }
        } else {
            // Deconcatenation of the part sequence.
            const std::vector<int>& parts = alpha.parts();
            for (size_t k = 0; k <= parts.size(); ++k) {
                Composition l(std::vector<int>(parts.begin(), parts.begin() + k));
                Composition r(std::vector<int>(parts.begin() + k, parts.end()));
                out.addTerm({l, r}, coef);
            }
        }
    }
    return out;
}

TensorElement gradedCoproduct(const QSymElement& f, const Composition& alpha) {
    if (!f.isZero() && f.degree() != alpha.size()) {
        throw std::invalid_argument("gradedCoproduct: degree mismatch");
    }
    int l = alpha.length();
    TensorElement out(f.basis(), l);
    for (const auto& [beta, coef] : f.terms()) {
        if (f.basis() == Basis::L) {
            // Cut the word at the running sums of alpha; each leg keeps the
            // descents falling inside its window.
            std::vector<Composition> legs;
            int start = 0;
            std::set<int> d = beta.descentSet();
            for (int i = 0; i < l; ++i) {
                int stop = start + alpha[i];
                std::set<int> win;
                for (int x : d) {
                    if (x > start && x < stop) win.insert(x - start);
                }
                legs.push_back(Composition::ofSet(win, alpha[i]));
                start = stop;
            }
            out.addTerm(legs, coef);
        } else {
            // Nonzero only when beta refines alpha; the split is then unique.
            if (!beta.refines(alpha)) continue;
            out.addTerm(beta.blocksUnder(alpha), coef);
        }
    }
    return out;
}

namespace {

Rat min1Term(Basis b, const Composition& alpha) {
    int l = alpha.length();
    switch (b) {
        case Basis::M:
            return (l % 2 ? Rat(1) : Rat(-1)) * Rat(alpha[l - 1]);
        case Basis::L: {
            // Nonzero exactly on hooks (1^k, n-k).
            for (int i = 0; i + 1 < l; ++i) {
                if (alpha[i] != 1) return 0;
            }
            return (l % 2 ? Rat(1) : Rat(-1));
        }
        case Basis::Psi:
            return l == 1 ? Rat(1) : Rat(0);
    }
    throw std::logic_error("unknown basis");
}

Rat max1Term(Basis b, const Composition& alpha) {
    int l = alpha.length();
    switch (b) {
        case Basis::M:
            return (l % 2 ? Rat(1) : Rat(-1)) * Rat(alpha[0]);
        case Basis::L: {
            // Nonzero exactly on hooks (n-k, 1^k).
            for (int i = 1; i < l; ++i) {
                if (alpha[i] != 1) return 0;
            }
            return (l % 2 ? Rat(1) : Rat(-1));
        }
        case Basis::Psi: {
            // Alternating sum over the position of the distinguished part.
            Rat total = 0;
            const std::vector<int>& p = alpha.parts();
            for (int i = 0; i < l; ++i) {
                Composition before(std::vector<int>(p.begin(), p.begin() + i));
                Composition afterRev(std::vector<int>(p.rbegin(), p.rend() - i - 1));
                Rat term = Rat(1) / (Rat(pi(before)) * Rat(pi(afterRev)));
                total += ((l - 1 - i) % 2) ? -term : term;
            }
            return total;
        }
    }
    throw std::logic_error("unknown basis");
}

void checkFunctionalDomain(const QSymElement& f) {
    if (f.isZero()) return;
    std::set<int> d = f.degrees();
    if (d.size() != 1) throw std::domain_error("functional needs a homogeneous element");
    if (*d.begin() == 0) throw std::domain_error("functional undefined on constants");
}

}  // namespace

Rat min1(const QSymElement& f) {
    checkFunctionalDomain(f);
    Rat total = 0;
    for (const auto& [alpha, coef] : f.terms()) total += coef * min1Term(f.basis(), alpha);
    return total;
}

Rat max1(const QSymElement& f) {
    checkFunctionalDomain(f);
    Rat total = 0;
    for (const auto& [alpha, coef] : f.terms()) total += coef * max1Term(f.basis(), alpha);
    return total;
}

Rat min1(const TensorElement& t) {
    Rat total = 0;
    for (const auto& [legs, coef] : t.terms()) {
        Rat prod = coef;
        for (const Composition& leg : legs) {
            if (leg.size() == 0) throw std::domain_error("functional undefined on constants");
            prod *= min1Term(t.basis(), leg);
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

Rat max1(const TensorElement& t) {
    Rat total = 0;
    for (const auto& [legs, coef] : t.terms()) {
        Rat prod = coef;
        for (const Composition& leg : legs) {
            if (leg.size() == 0) throw std::domain_error("functional undefined on constants");
            prod *= max1Term(t.basis(), leg);
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

std::map<Composition, Rat> psiCoefficients(const QSymElement& f) {
    std::map<Composition, Rat> out;
    if (f.isZero()) return out;
    int n = f.degree();
    if (n == 0) {
        out[Composition{}] = f.coefficient(Composition{});
        return out;
    }
    for (const Composition& alpha : compositionsOf(n)) {
        Rat c = min1(gradedCoproduct(f, alpha));
        if (c != 0) out[alpha] = c;
    }
    return out;
}

namespace {

Composition mapIndex(const Composition& alpha, Automorphism which) {
    switch (which) {
        case Automorphism::Omega: return alpha.complement().reversed();
        case Automorphism::Rho: return alpha.reversed();
        case Automorphism::OmegaRho: return alpha.complement();
    }
    throw std::logic_error("unknown automorphism");
}

QSymElement automorphismPsi(const QSymElement& f, Automorphism which) {
    QSymElement out(Basis::Psi);
    for (const auto& [alpha, coef] : f.terms()) {
        int n = alpha.size();
        if (which == Automorphism::Omega) {
            Rat sign = ((n - alpha.length()) % 2) ? Rat(-1) : Rat(1);
            out.addTerm(alpha.reversed(), sign * coef);
            continue;
        }
        // Images of psi_alpha under rho/omega-rho are supported on (reversed)
        // coarsenings; the coefficients are products of max1 over the blocks.
        for (const Composition& gamma : alpha.coarsenings()) {
            Rat val = 1;
            for (const Composition& blk : alpha.blocksUnder(gamma)) {
                val *= max1Term(Basis::Psi, blk);
                if (val == 0) break;
            }
            if (val == 0) continue;
            if (which == Automorphism::Rho) {
                out.addTerm(gamma.reversed(), coef * val);
            } else {
                Rat sign = ((n - gamma.length()) % 2) ? Rat(-1) : Rat(1);
                out.addTerm(gamma, sign * coef * val);
            }
        }
    }
    return out;
}

}  // namespace

QSymElement automorphism(const QSymElement& f, Automorphism which) {
    switch (f.basis()) {
        case Basis::L: {
            QSymElement out(Basis::L);
            for (const auto& [alpha, coef] : f.terms()) {
                out.addTerm(mapIndex(alpha, which), coef);
            }
            return out;
        }
        case Basis::Psi:
            return automorphismPsi(f, which);
        case Basis::M:
            return convert(automorphism(convert(f, Basis::L), which), Basis::M);
    }
    throw std::logic_error("unknown basis");
}

QSymElement powerSum(const Partition& lambda) {
    QSymElement out(Basis::Psi);
    Rat z(zee(Composition(lambda.parts())));
    for (const Composition& alpha : rearrangements(lambda)) out.addTerm(alpha, z);
    return out;
}

QSymElement normalizedPsi(const Composition& alpha) {
    return QSymElement::term(Basis::Psi, alpha, Rat(zee(alpha)));
}

}  // namespace psikit
