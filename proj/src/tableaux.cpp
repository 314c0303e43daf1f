#include "psikit/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace psikit {

namespace {

bool cellsConnected(const std::set<std::pair<int, int>>& cells) {
    if (cells.empty()) return true;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    seen.insert(*cells.begin());
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            std::pair<int, int> nb{i + di, j + dj};
            if (cells.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    return seen.size() == cells.size();
}

bool isBorderStrip(const std::set<std::pair<int, int>>& cells) {
    if (cells.empty()) return false;
    if (!cellsConnected(cells)) return false;
    for (const auto& [i, j] : cells) {
        if (cells.count({i, j + 1}) && cells.count({i + 1, j}) && cells.count({i + 1, j + 1})) {
            return false;
        }
    }
    return true;
}

int rowsSpanned(const std::set<std::pair<int, int>>& cells) {
    std::set<int> rows;
    for (const auto& [i, j] : cells) rows.insert(i);
    return static_cast<int>(rows.size());
}

// Ways to strip a border strip of the given size off the outside of lambda
// while staying above mu; yields the smaller partition and the strip height.
void removableStrips(const std::vector<int>& lambda, const Partition& mu, int size,
                     const std::function<void(std::vector<int>, int)>& emit) {
    int rows = static_cast<int>(lambda.size());
    // The strip occupies rows lo..hi with exactly one shared column between
    // consecutive rows; derive the removal row by row from the bottom up.
    for (int hi = 0; hi < rows; ++hi) {
        // Choose how many cells the bottom row keeps.
        for (int keepHi = mu.partOr0(hi); keepHi < lambda[static_cast<size_t>(hi)]; ++keepHi) {
            std::vector<int> next(lambda.begin(), lambda.end());
            int removed = lambda[static_cast<size_t>(hi)] - keepHi;
            next[static_cast<size_t>(hi)] = keepHi;
            bool ok = true;
            int lo = hi;
            while (removed < size && ok) {
                // Extend the strip one row up; the rows must overlap in
                // exactly one column.
                --lo;
                if (lo < 0) {
                    ok = false;
                    break;
                }
                int newLen = lambda[static_cast<size_t>(lo + 1)] - 1;
                if (newLen < mu.partOr0(lo) || newLen >= lambda[static_cast<size_t>(lo)]) {
                    ok = false;
                    break;
                }
                removed += lambda[static_cast<size_t>(lo)] - newLen;
                next[static_cast<size_t>(lo)] = newLen;
            }
            if (!ok || removed != size) continue;
            // next must remain a partition above mu.
            bool partitionOk = true;
            for (int i = 0; i + 1 < rows && partitionOk; ++i) {
                if (next[static_cast<size_t>(i)] < next[static_cast<size_t>(i) + 1]) {
                    partitionOk = false;
                }
            }
            for (int i = 0; i < rows && partitionOk; ++i) {
                if (next[static_cast<size_t>(i)] < mu.partOr0(i)) partitionOk = false;
            }
            if (partitionOk) emit(next, hi - lo);
        }
    }
}

}  // namespace

int BorderStripTableau::height() const {
    std::map<int, std::set<std::pair<int, int>>> classes;
    for (const auto& [cell, v] : fill) classes[v].insert(cell);
    int h = 0;
    for (const auto& [v, cells] : classes) h += rowsSpanned(cells) - 1;
    return h;
}

Composition BorderStripTableau::type() const {
    std::map<int, int> counts;
    for (const auto& [cell, v] : fill) ++counts[v];
    std::vector<int> parts;
    int expect = 1;
    for (const auto& [v, c] : counts) {
        if (v != expect++) throw std::domain_error("tableau values are not 1..l");
        parts.push_back(c);
    }
    return Composition(parts);
}

bool BorderStripTableau::valid() const {
    std::vector<std::pair<int, int>> cells = shape.cells();
    if (cells.size() != fill.size()) return false;
    for (const auto& c : cells) {
        if (!fill.count(c)) return false;
    }
    // Rows and columns weakly increase.
    for (const auto& [cell, v] : fill) {
        auto right = fill.find({cell.first, cell.second + 1});
        if (right != fill.end() && right->second < v) return false;
        auto down = fill.find({cell.first + 1, cell.second});
        if (down != fill.end() && down->second < v) return false;
    }
    // Each value class is a border strip, and peeling the classes off from
    // the largest value down leaves a partition at every stage.
    std::map<int, std::set<std::pair<int, int>>> classes;
    int maxV = 0;
    for (const auto& [cell, v] : fill) {
        if (v < 1) return false;
        classes[v].insert(cell);
        maxV = std::max(maxV, v);
    }
    for (int v = 1; v <= maxV; ++v) {
        if (!classes.count(v) || !isBorderStrip(classes[v])) return false;
    }
    // Running outer shapes: cells with value <= v joined with mu must form a
    // partition for each v.
    for (int v = 0; v <= maxV; ++v) {
        std::vector<int> rowLen;
        for (int i = 0; i < shape.lambda().length(); ++i) {
            int len = shape.mu().partOr0(i);
            for (int j = len + 1; j <= shape.lambda()[i]; ++j) {
                auto it = fill.find({i + 1, j});
                if (it != fill.end() && it->second <= v && j == len + 1) {
                    ++len;
                }
            }
            rowLen.push_back(len);
        }
        // Rows must be left-justified (no gaps) and weakly decreasing.
        for (int i = 0; i < shape.lambda().length(); ++i) {
            int len = rowLen[static_cast<size_t>(i)];
            for (int j = shape.mu().partOr0(i) + 1; j <= shape.lambda()[i]; ++j) {
                auto it = fill.find({i + 1, j});
                bool inside = it != fill.end() && it->second <= v;
                if (inside != (j <= len)) return false;
            }
            if (i && rowLen[static_cast<size_t>(i)] > rowLen[static_cast<size_t>(i) - 1]) {
                return false;
            }
        }
        (void)v;
    }
    return true;
}

std::vector<BorderStripTableau> enumerateBST(const SkewShape& shape, const Composition& alpha) {
    if (alpha.size() != shape.cellCount()) return {};
    std::vector<BorderStripTableau> out;
    BorderStripTableau cur;
    cur.shape = shape;
    std::vector<int> lambda = shape.lambda().parts();
    auto rec = [&](auto&& self, std::vector<int>& outer, int k) -> void {
        if (k == 0) {
            // Everything down to mu must be consumed.
            bool done = true;
            for (size_t i = 0; i < outer.size(); ++i) {
                if (outer[i] != shape.mu().partOr0(static_cast<int>(i))) done = false;
            }
            if (done) out.push_back(cur);
            return;
        }
        removableStrips(outer, shape.mu(), alpha[k - 1], [&](std::vector<int> next, int) {
            std::vector<std::pair<int, int>> placed;
            for (size_t i = 0; i < outer.size(); ++i) {
                for (int j = next[i] + 1; j <= outer[i]; ++j) {
                    std::pair<int, int> cell{static_cast<int>(i) + 1, j};
                    cur.fill[cell] = k;
                    placed.push_back(cell);
                }
            }
            self(self, next, k - 1);
            for (const auto& cell : placed) cur.fill.erase(cell);
        });
    };
    rec(rec, lambda, alpha.length());
    return out;
}

BigInt chi(const SkewShape& shape, const Composition& alpha) {
    if (alpha.size() != shape.cellCount()) return 0;
    std::vector<int> lambda = shape.lambda().parts();
    BigInt total = 0;
    auto rec = [&](auto&& self, std::vector<int>& outer, int k, int heightSoFar) -> void {
        if (k == 0) {
            for (size_t i = 0; i < outer.size(); ++i) {
                if (outer[i] != shape.mu().partOr0(static_cast<int>(i))) return;
            }
            total += heightSoFar % 2 ? -1 : 1;
            return;
        }
        removableStrips(outer, shape.mu(), alpha[k - 1], [&](std::vector<int> next, int h) {
            self(self, next, k - 1, heightSoFar + h);
        });
    };
    rec(rec, lambda, alpha.length(), 0);
    return total;
}

QSymElement skewSchurPsi(const SkewShape& shape, int guard) {
    int n = shape.cellCount();
    if (n > guard) throw GuardExceeded("skewSchurPsi: shape exceeds guard");
    QSymElement out(Basis::Psi);
    for (const Composition& alpha : compositionsOf(n)) {
        BigInt c = chi(shape, alpha);
        if (c != 0) out.addTerm(alpha, Rat(c));
    }
    return out;
}

Rat min1Skew(const SkewShape& shape) {
    std::set<std::pair<int, int>> cells;
    for (const auto& c : shape.cells()) cells.insert(c);
    if (cells.empty()) throw std::domain_error("min1Skew undefined on the empty shape");
    if (!isBorderStrip(cells)) return 0;
    return rowsSpanned(cells) % 2 ? Rat(1) : Rat(-1);
}

}  // namespace psikit
