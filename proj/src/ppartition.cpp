#include "psikit/ppartition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace psikit {

RootedDiagnosis rootedDiagnosis(const LabeledPoset& p) {
    RootedDiagnosis d;
    int n = p.size();
    // Generalized border strip: no chain a < b > c of labels along a chain
    // a < b < c of the poset.
    d.isGbs = true;
    for (int b = 1; b <= n && d.isGbs; ++b) {
        bool hasSmallerBelow = false, hasSmallerAbove = false;
        for (int a = 1; a <= n; ++a) {
            if (p.less(a, b) && a < b) hasSmallerBelow = true;
            if (p.less(b, a) && a < b) hasSmallerAbove = true;
        }
        if (hasSmallerBelow && hasSmallerAbove) d.isGbs = false;
    }
    const auto& covers = p.covers();
    for (int x = 1; x <= n; ++x) {
        bool inI = true, allNaturalAbove = true;
        for (const auto& cov : covers) {
            if (p.leq(cov.second, x) && !LabeledPoset::isStrictEdge(cov)) inI = false;
            if (p.leq(x, cov.first) && LabeledPoset::isStrictEdge(cov)) allNaturalAbove = false;
        }
        if (inI) {
            d.I.push_back(x);
            if (allNaturalAbove) d.J.push_back(x);
        }
    }
    d.rooted = d.isGbs && d.J == std::vector<int>{1};
    d.min1Value = d.rooted ? (d.I.size() % 2 ? 1 : -1) : 0;
    return d;
}

Composition StarredPartition::weight() const {
    std::map<int, int> sizes;
    for (const auto& [label, lv] : assignment) ++sizes[lv.first];
    std::vector<int> parts;
    for (const auto& [level, count] : sizes) parts.push_back(count);
    return Composition(parts);
}

int StarredPartition::sign() const {
    int minus = 0;
    for (const auto& [label, lv] : assignment) {
        if (lv.second == Mark::Minus) ++minus;
    }
    return minus % 2 ? -1 : 1;
}

std::vector<int> StarredPartition::starsPerLevel() const {
    std::map<int, int> stars;
    for (const auto& [label, lv] : assignment) {
        stars.try_emplace(lv.first, 0);
        if (lv.second == Mark::Star) ++stars[lv.first];
    }
    std::vector<int> out;
    for (const auto& [level, count] : stars) out.push_back(count);
    return out;
}

QSymElement kGeneratingFunction(const LabeledPoset& p, int guard) {
    QSymElement out(Basis::L);
    int n = p.size();
    for (const std::vector<int>& word : p.linearExtensions(guard)) {
        std::set<int> descents;
        for (int i = 1; i < n; ++i) {
            if (word[static_cast<size_t>(i) - 1] > word[static_cast<size_t>(i)]) descents.insert(i);
        }
        out.addTerm(Composition::ofSet(descents, n), 1);
    }
    return out;
}

namespace {

std::vector<int> maskLabels(uint32_t mask, int n) {
    std::vector<int> labels;
    for (int x = 0; x < n; ++x) {
        if (mask & (1u << x)) labels.push_back(x + 1);
    }
    return labels;
}

// Marks forced on the elements of an order ideal forming one level: an
// element at the bottom of a strict cover of the induced subposet gets Minus,
// at the top of a natural cover Plus, otherwise Star.  (In a generalized
// border strip no element is both.)
std::map<int, Mark> levelMarks(const LabeledPoset& p, const std::vector<int>& labels) {
    std::map<int, Mark> marks;
    for (int x : labels) marks[x] = Mark::Star;
    for (int a : labels) {
        for (int b : labels) {
            if (!p.less(a, b)) continue;
            bool isCover = std::none_of(labels.begin(), labels.end(), [&](int c) {
                return p.less(a, c) && p.less(c, b);
            });
            if (!isCover) continue;
            if (a > b) {
                marks[a] = Mark::Minus;
            } else {
                marks[b] = Mark::Plus;
            }
        }
    }
    return marks;
}

// Nonempty order ideals of the subposet induced on `mask` whose induced
// subposet is rooted.
std::vector<uint32_t> rootedIdeals(const LabeledPoset& p, uint32_t mask, int n) {
    std::vector<uint32_t> out;
    for (uint32_t s = mask; s; s = (s - 1) & mask) {
        bool ideal = true;
        for (int x = 0; x < n && ideal; ++x) {
            if (!(s & (1u << x))) continue;
            for (int y = 0; y < n && ideal; ++y) {
                if ((mask & ~s) & (1u << y)) {
                    if (p.less(y + 1, x + 1)) ideal = false;
                }
            }
        }
        if (!ideal) continue;
        if (rootedDiagnosis(p.inducedSubposet(maskLabels(s, n))).rooted) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<StarredPartition> enumeratePointedPartitions(const LabeledPoset& p, int guard) {
    int n = p.size();
    if (n > guard) throw GuardExceeded("enumeratePointedPartitions: size exceeds guard");
    std::vector<StarredPartition> out;
    StarredPartition cur;
    auto rec = [&](auto&& self, uint32_t remaining, int level) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (uint32_t s : rootedIdeals(p, remaining, n)) {
            std::vector<int> labels = maskLabels(s, n);
            std::map<int, Mark> marks = levelMarks(p, labels);
            for (int x : labels) cur.assignment[x] = {level, marks[x]};
            self(self, remaining & ~s, level + 1);
            for (int x : labels) cur.assignment.erase(x);
        }
    };
    rec(rec, n >= 32 ? 0u : (1u << n) - 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

QSymElement psiExpansionPointed(const LabeledPoset& p, int guard) {
    int n = p.size();
    if (n > guard) throw GuardExceeded("psiExpansionPointed: size exceeds guard");
    // Memoized over the set of elements not yet assigned to a level.
    std::map<uint32_t, std::map<Composition, Rat>> memo;
    auto rec = [&](auto&& self, uint32_t remaining) -> const std::map<Composition, Rat>& {
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        std::map<Composition, Rat> acc;
        if (remaining == 0) {
            acc[Composition{}] = 1;
        } else {
            for (uint32_t s : rootedIdeals(p, remaining, n)) {
                std::vector<int> labels = maskLabels(s, n);
                RootedDiagnosis d = rootedDiagnosis(p.inducedSubposet(labels));
                const auto& tail = self(self, remaining & ~s);
                for (const auto& [comp, coef] : tail) {
                    std::vector<int> parts{static_cast<int>(labels.size())};
                    parts.insert(parts.end(), comp.parts().begin(), comp.parts().end());
                    acc[Composition(parts)] += coef * d.min1Value;
                }
            }
            std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        }
        return memo.emplace(remaining, std::move(acc)).first->second;
    };
    const auto& terms = rec(rec, n >= 32 ? 0u : (1u << n) - 1);
    QSymElement out(Basis::Psi);
    for (const auto& [comp, coef] : terms) out.addTerm(comp, coef);
    return out;
}

Composition sigmaWeight(const LabeledPoset& p, const std::vector<int>& sigma) {
    std::vector<int> minimals = p.minimalElements();
    std::vector<int> check = sigma;
    std::sort(check.begin(), check.end());
    if (check != minimals) {
        throw std::invalid_argument("sigmaWeight: not an ordering of the minimal elements");
    }
    size_t m = sigma.size();
    std::vector<int> parts;
    int prevSize = 0;
    for (size_t i = m; i-- > 0;) {
        std::vector<int> suffix(sigma.begin() + static_cast<long>(i), sigma.end());
        int sz = static_cast<int>(p.filterOf(suffix).size());
        parts.push_back(sz - prevSize);
        prevSize = sz;
    }
    std::reverse(parts.begin(), parts.end());
    return Composition(parts);
}

QSymElement kTilde(const LabeledPoset& p, int guard) {
    if (!p.naturallyLabeled()) throw std::domain_error("kTilde needs a naturally labeled poset");
    QSymElement out(Basis::Psi);
    std::vector<int> sigma = p.minimalElements();
    if (static_cast<int>(sigma.size()) > guard) {
        throw GuardExceeded("kTilde: too many minimal elements");
    }
    if (p.size() == 0) {
        out.addTerm(Composition{}, 1);
        return out;
    }
    std::sort(sigma.begin(), sigma.end());
    do {
        out.addTerm(sigmaWeight(p, sigma), 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<std::vector<int>> enumerateZigzagLabelings(const LabeledPoset& p, int guard) {
    int n = p.size();
    if (n > guard) throw GuardExceeded("enumerateZigzagLabelings: size exceeds guard");
    std::vector<bool> minimal(static_cast<size_t>(n) + 1, false);
    for (int x : p.minimalElements()) minimal[static_cast<size_t>(x)] = true;
    std::vector<int> phi(static_cast<size_t>(n));
    std::iota(phi.begin(), phi.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int x = 1; x <= n && ok; ++x) {
            int vx = phi[static_cast<size_t>(x) - 1];
            if (minimal[static_cast<size_t>(x)]) {
                if (vx == 1) continue;
                bool found = false;
                for (int y = 1; y <= n && !found; ++y) {
                    if (p.less(x, y) && phi[static_cast<size_t>(y) - 1] < vx) found = true;
                }
                ok = found;
            } else {
                bool found = false;
                for (int y = 1; y <= n && !found; ++y) {
                    if (minimal[static_cast<size_t>(y)] && p.less(y, x) &&
                        phi[static_cast<size_t>(y) - 1] < vx) {
                        found = true;
                    }
                }
                ok = found;
            }
        }
        if (ok) out.push_back(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return out;
}

BigInt zigzagCountFormula(const LabeledPoset& p) {
    if (!p.naturallyLabeled()) {
        throw std::domain_error("zigzagCountFormula needs a naturally labeled poset");
    }
    int n = p.size();
    if (n == 0) return 1;
    Rat r = Rat(factorial(n - 1)) * max1(kTilde(p));
    if (denominator(r) != 1) throw std::logic_error("zigzag count came out non-integral");
    return numerator(r);
}

std::vector<std::vector<int>> enumerateT(const LabeledPoset& p, const std::vector<int>& piOrd,
                                         const std::vector<int>& sigmaOrd, int guard) {
    int n = p.size();
    if (n > guard) throw GuardExceeded("enumerateT: size exceeds guard");
    std::vector<int> minimals = p.minimalElements();
    for (const std::vector<int>* ord : {&piOrd, &sigmaOrd}) {
        std::vector<int> check = *ord;
        std::sort(check.begin(), check.end());
        if (check != minimals) {
            throw std::invalid_argument("enumerateT: not an ordering of the minimal elements");
        }
    }
    // For each element, the minimal element below it occurring last in sigma.
    std::vector<int> anchor(static_cast<size_t>(n) + 1, 0);
    for (int y = 1; y <= n; ++y) {
        int best = -1;
        for (size_t i = 0; i < sigmaOrd.size(); ++i) {
            if (p.leq(sigmaOrd[i], y)) best = static_cast<int>(i);
        }
        anchor[static_cast<size_t>(y)] = sigmaOrd[static_cast<size_t>(best)];
    }
    std::vector<int> phi(static_cast<size_t>(n));
    std::iota(phi.begin(), phi.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (size_t i = 0; i + 1 < piOrd.size() && ok; ++i) {
            if (phi[static_cast<size_t>(piOrd[i]) - 1] <= phi[static_cast<size_t>(piOrd[i + 1]) - 1]) {
                ok = false;
            }
        }
        for (int y = 1; y <= n && ok; ++y) {
            if (phi[static_cast<size_t>(y) - 1] < phi[static_cast<size_t>(anchor[static_cast<size_t>(y)]) - 1]) {
                ok = false;
            }
        }
        if (ok) out.push_back(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return out;
}

std::vector<int> applyFS(const std::vector<int>& word, const std::set<int>& positions) {
    for (int s : positions) {
        if (s < 1 || s > static_cast<int>(word.size())) {
            throw std::invalid_argument("position out of range");
        }
    }
    std::vector<int> kept, moved;
    for (size_t i = 0; i < word.size(); ++i) {
        if (positions.count(static_cast<int>(i) + 1)) {
            moved.push_back(word[i]);
        } else {
            kept.push_back(word[i]);
        }
    }
    kept.insert(kept.end(), moved.rbegin(), moved.rend());
    return kept;
}

std::vector<int> applyGS(const std::vector<int>& word, const std::set<int>& positions) {
    for (int s : positions) {
        if (s < 1 || s > static_cast<int>(word.size())) {
            throw std::invalid_argument("position out of range");
        }
    }
    size_t l = positions.size();
    std::vector<int> out(word.size());
    // The last l entries, reversed, return to the positions in S.
    auto tail = word.end() - static_cast<long>(l);
    std::vector<int> moved(tail, word.end());
    std::reverse(moved.begin(), moved.end());
    size_t mi = 0;
    for (int s : positions) out[static_cast<size_t>(s) - 1] = moved[mi++];
    size_t ki = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        if (!positions.count(static_cast<int>(i) + 1)) out[i] = word[ki++];
    }
    return out;
}

bool isIrreducibleNatural(const LabeledPoset& p) {
    if (!p.naturallyLabeled()) {
        throw std::domain_error("isIrreducibleNatural needs a naturally labeled poset");
    }
    if (p.size() == 0) return false;
    return p.isConnected();
}

}  // namespace psikit
