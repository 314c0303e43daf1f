#include "psikit/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace psikit {

LabeledPoset::LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
    if (n < 0) throw std::invalid_argument("poset size must be nonnegative");
    less_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) {
            throw std::invalid_argument("bad relation in poset");
        }
        less_[static_cast<size_t>(a) - 1][static_cast<size_t>(b) - 1] = true;
    }
    // Transitive closure.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!less_[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (less_[k][j]) less_[i][j] = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (less_[i][i]) throw std::invalid_argument("relations contain a cycle");
    }
    // Transitive reduction.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!less_[a][b]) continue;
            bool isCover = true;
            for (int c = 0; c < n && isCover; ++c) {
                if (less_[a][c] && less_[c][b]) isCover = false;
            }
            if (isCover) covers_.emplace_back(a + 1, b + 1);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

bool LabeledPoset::less(int a, int b) const {
    return less_[static_cast<size_t>(a) - 1][static_cast<size_t>(b) - 1];
}

bool LabeledPoset::leq(int a, int b) const { return a == b || less(a, b); }

bool LabeledPoset::naturallyLabeled() const {
    return std::none_of(covers_.begin(), covers_.end(), isStrictEdge);
}

std::vector<int> LabeledPoset::minimalElements() const {
    std::vector<int> out;
    for (int b = 1; b <= n_; ++b) {
        bool minimal = true;
        for (int a = 1; a <= n_ && minimal; ++a) {
            if (less(a, b)) minimal = false;
        }
        if (minimal) out.push_back(b);
    }
    return out;
}

std::vector<int> LabeledPoset::maximalElements() const {
    std::vector<int> out;
    for (int a = 1; a <= n_; ++a) {
        bool maximal = true;
        for (int b = 1; b <= n_ && maximal; ++b) {
            if (less(a, b)) maximal = false;
        }
        if (maximal) out.push_back(a);
    }
    return out;
}

std::vector<int> LabeledPoset::filterOf(const std::vector<int>& elements) const {
    std::vector<bool> in(static_cast<size_t>(n_) + 1, false);
    for (int e : elements) {
        if (e < 1 || e > n_) throw std::invalid_argument("label out of range");
        in[static_cast<size_t>(e)] = true;
        for (int y = 1; y <= n_; ++y) {
            if (less(e, y)) in[static_cast<size_t>(y)] = true;
        }
    }
    std::vector<int> out;
    for (int y = 1; y <= n_; ++y) {
        if (in[static_cast<size_t>(y)]) out.push_back(y);
    }
    return out;
}

namespace {
void extensionsRec(const LabeledPoset& p, std::vector<bool>& used, std::vector<int>& word,
                   std::vector<std::vector<int>>& out) {
    int n = p.size();
    if (static_cast<int>(word.size()) == n) {
        out.push_back(word);
        return;
    }
    for (int x = 1; x <= n; ++x) {
        if (used[static_cast<size_t>(x)]) continue;
        bool free = true;
        for (int y = 1; y <= n && free; ++y) {
            if (!used[static_cast<size_t>(y)] && p.less(y, x)) free = false;
        }
        if (!free) continue;
        used[static_cast<size_t>(x)] = true;
        word.push_back(x);
        extensionsRec(p, used, word, out);
        word.pop_back();
        used[static_cast<size_t>(x)] = false;
    }
}
}  // namespace

std::vector<std::vector<int>> LabeledPoset::linearExtensions(int guard) const {
    if (n_ > guard) throw GuardExceeded("linearExtensions: size exceeds guard");
    std::vector<std::vector<int>> out;
    std::vector<bool> used(static_cast<size_t>(n_) + 1, false);
    std::vector<int> word;
    extensionsRec(*this, used, word, out);
    return out;
}

BigInt LabeledPoset::countLinearExtensions() const {
    // Count via memoized peeling of minimal elements over down-closed subsets.
    if (n_ > 20) throw GuardExceeded("countLinearExtensions: poset too large");
    std::map<uint32_t, BigInt> memo;
    auto rec = [&](auto&& self, uint32_t remaining) -> BigInt {
        if (remaining == 0) return 1;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int x = 0; x < n_; ++x) {
            if (!(remaining & (1u << x))) continue;
            bool minimal = true;
            for (int y = 0; y < n_ && minimal; ++y) {
                if ((remaining & (1u << y)) && less_[static_cast<size_t>(y)][static_cast<size_t>(x)]) {
                    minimal = false;
                }
            }
            if (minimal) total += self(self, remaining & ~(1u << x));
        }
        memo[remaining] = total;
        return total;
    };
    return rec(rec, n_ >= 32 ? 0u : (1u << n_) - 1);
}

std::vector<LabeledPoset> LabeledPoset::components() const {
    std::vector<int> comp(static_cast<size_t>(n_) + 1, 0);
    int numComp = 0;
    for (int start = 1; start <= n_; ++start) {
        if (comp[static_cast<size_t>(start)]) continue;
        ++numComp;
        std::vector<int> stack{start};
        comp[static_cast<size_t>(start)] = numComp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 1; y <= n_; ++y) {
                if (!comp[static_cast<size_t>(y)] && comparable(x, y)) {
                    comp[static_cast<size_t>(y)] = numComp;
                    stack.push_back(y);
                }
            }
        }
    }
    std::vector<LabeledPoset> out;
    for (int c = 1; c <= numComp; ++c) {
        std::vector<int> labels;
        for (int x = 1; x <= n_; ++x) {
            if (comp[static_cast<size_t>(x)] == c) labels.push_back(x);
        }
        out.push_back(inducedSubposet(labels));
    }
    return out;
}

bool LabeledPoset::isConnected() const { return n_ <= 1 || components().size() == 1; }

LabeledPoset LabeledPoset::inducedSubposet(const std::vector<int>& labels) const {
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate label in subposet request");
    }
    std::map<int, int> newLabel;
    for (size_t i = 0; i < sorted.size(); ++i) newLabel[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> rels;
    for (int a : sorted) {
        for (int b : sorted) {
            if (less(a, b)) rels.emplace_back(newLabel[a], newLabel[b]);
        }
    }
    return LabeledPoset(static_cast<int>(sorted.size()), rels);
}

LabeledPoset disjointUnion(const LabeledPoset& p, const LabeledPoset& q) {
    int np = p.size();
    std::vector<std::pair<int, int>> rels = p.covers();
    for (auto [a, b] : q.covers()) rels.emplace_back(a + np, b + np);
    return LabeledPoset(np + q.size(), rels);
}

LabeledPoset ordinalSum(const LabeledPoset& p, const LabeledPoset& q) {
    int np = p.size();
    std::vector<std::pair<int, int>> rels = p.covers();
    for (auto [a, b] : q.covers()) rels.emplace_back(a + np, b + np);
    for (int a : p.maximalElements()) {
        for (int b : q.minimalElements()) rels.emplace_back(a, b + np);
    }
    return LabeledPoset(np + q.size(), rels);
}

bool isNFree(const LabeledPoset& p) {
    int n = p.size();
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 1; c <= n; ++c) {
                if (c == a || !p.less(c, b) || p.comparable(a, c)) continue;
                for (int d = 1; d <= n; ++d) {
                    if (d == b || !p.less(c, d)) continue;
                    if (!p.comparable(a, d) && !p.comparable(b, d)) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Canonical decomposition trees for series-parallel posets: series nodes have
// an ordered list of non-series children, parallel nodes a sorted multiset of
// non-parallel children.  One tree per isomorphism class.
struct SPTree {
    enum Kind { Leaf, Series, Parallel } kind = Leaf;
    std::vector<SPTree> children;
    int size = 1;

    std::string serial() const {
        switch (kind) {
            case Leaf: return "*";
            case Series: {
                std::string s = "S(";
                for (const SPTree& c : children) s += c.serial();
                return s + ")";
            }
            case Parallel: {
                std::string s = "P(";
                for (const SPTree& c : children) s += c.serial();
                return s + ")";
            }
        }
        return "";
    }
};

struct SPGen {
    // nonSeries[n], nonParallel[n]: trees of that size, sorted by serial.
    std::vector<std::vector<SPTree>> nonSeries, nonParallel;

    explicit SPGen(int n) : nonSeries(static_cast<size_t>(n) + 1), nonParallel(static_cast<size_t>(n) + 1) {
        for (int m = 1; m <= n; ++m) build(m);
    }

    void build(int m) {
        if (m == 1) {
            nonSeries[1] = {SPTree{}};
            nonParallel[1] = {SPTree{}};
            return;
        }
        // Series nodes: ordered sequences of >= 2 non-series children.
        std::vector<SPTree> seq;
        auto serRec = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                if (seq.size() >= 2) {
                    SPTree t;
                    t.kind = SPTree::Series;
                    t.children = seq;
                    t.size = m;
                    nonParallel[static_cast<size_t>(m)].push_back(std::move(t));
                }
                return;
            }
            for (int s = 1; s <= remaining; ++s) {
                if (s == m) continue;  // at least two children
                for (const SPTree& c : nonSeries[static_cast<size_t>(s)]) {
                    seq.push_back(c);
                    self(self, remaining - s);
                    seq.pop_back();
                }
            }
        };
        serRec(serRec, m);
        // Parallel nodes: non-decreasing (by (size, serial)) sequences of
        // >= 2 non-parallel children.
        std::vector<std::pair<std::pair<int, std::string>, const SPTree*>> pool;
        for (int s = 1; s < m; ++s) {
            for (const SPTree& c : nonParallel[static_cast<size_t>(s)]) {
                pool.push_back({{s, c.serial()}, &c});
            }
        }
        std::sort(pool.begin(), pool.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto parRec = [&](auto&& self, int remaining, size_t minIdx) -> void {
            if (remaining == 0) {
                if (seq.size() >= 2) {
                    SPTree t;
                    t.kind = SPTree::Parallel;
                    t.children = seq;
                    t.size = m;
                    nonSeries[static_cast<size_t>(m)].push_back(std::move(t));
                }
                return;
            }
            for (size_t i = minIdx; i < pool.size(); ++i) {
                if (pool[i].first.first > remaining) continue;
                seq.push_back(*pool[i].second);
                self(self, remaining - pool[i].first.first, i);
                seq.pop_back();
            }
        };
        parRec(parRec, m, 0);
        // A size-m tree that is neither series nor parallel exists only at m=1.
    }
};

LabeledPoset buildPoset(const SPTree& t) {
    if (t.kind == SPTree::Leaf) return LabeledPoset(1, {});
    LabeledPoset acc = buildPoset(t.children[0]);
    for (size_t i = 1; i < t.children.size(); ++i) {
        LabeledPoset next = buildPoset(t.children[i]);
        acc = (t.kind == SPTree::Series) ? ordinalSum(acc, next) : disjointUnion(acc, next);
    }
    return acc;
}

}  // namespace

std::vector<LabeledPoset> enumerateSeriesParallel(int n, int guard) {
    if (n < 0) throw std::invalid_argument("enumerateSeriesParallel: negative size");
    if (n > guard) throw GuardExceeded("enumerateSeriesParallel: size exceeds guard");
    if (n == 0) return {LabeledPoset(0, {})};
    SPGen gen(n);
    std::vector<LabeledPoset> out;
    for (const SPTree& t : gen.nonSeries[static_cast<size_t>(n)]) out.push_back(buildPoset(t));
    for (const SPTree& t : gen.nonParallel[static_cast<size_t>(n)]) {
        if (t.kind == SPTree::Series) out.push_back(buildPoset(t));
    }
    return out;
}

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (!lambda_.contains(mu_)) throw std::invalid_argument("mu must fit inside lambda");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < lambda_.length(); ++i) {
        for (int j = mu_.partOr0(i) + 1; j <= lambda_[i]; ++j) out.emplace_back(i + 1, j);
    }
    return out;
}

int SkewShape::cellCount() const { return lambda_.size() - mu_.size(); }

LabeledPoset skewShapePoset(const SkewShape& shape) {
    std::vector<std::pair<int, int>> cells = shape.cells();
    // Label up each column (largest row index first), columns left to right.
    std::vector<std::pair<int, int>> order = cells;
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first > b.first;
    });
    std::map<std::pair<int, int>, int> label;
    for (size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> rels;
    for (const auto& c : cells) {
        std::pair<int, int> right{c.first, c.second + 1};
        std::pair<int, int> down{c.first + 1, c.second};
        if (label.count(right)) rels.emplace_back(label[c], label[right]);
        if (label.count(down)) rels.emplace_back(label[c], label[down]);
    }
    return LabeledPoset(static_cast<int>(cells.size()), rels);
}

}  // namespace psikit
