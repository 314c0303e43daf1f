#pragma once

#include <utility>
#include <vector>

#include "psikit/composition.hpp"

namespace psikit {

// A finite poset on labels 1..n.  The label order doubles as the labeling
// omega: a cover a < b in the poset is "natural" when a < b as integers and
// "strict" when a > b.  Relations passed to the constructor may be any acyclic
// set; they are closed transitively and the stored covers are the transitive
// reduction.
class LabeledPoset {
public:
    LabeledPoset() = default;
    LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool less(int a, int b) const;  // a strictly below b
    bool leq(int a, int b) const;
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    // A cover is strict when its lower label exceeds its upper label.
    static bool isStrictEdge(const std::pair<int, int>& cover) {
        return cover.first > cover.second;
    }
    bool naturallyLabeled() const;

    std::vector<int> minimalElements() const;
    std::vector<int> maximalElements() const;
    // V(S): union of the principal filters of the given elements.
    std::vector<int> filterOf(const std::vector<int>& elements) const;

    // All linear extensions as words of labels.
    std::vector<std::vector<int>> linearExtensions(int guard = 12) const;
    BigInt countLinearExtensions() const;

    // Connected components; each component is relabeled 1..k preserving the
    // relative order of the original labels.
    std::vector<LabeledPoset> components() const;
    bool isConnected() const;

    // The subposet induced on the given labels, relabeled 1..k preserving
    // relative label order.
    LabeledPoset inducedSubposet(const std::vector<int>& labels) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<bool>> less_;  // strict order, 0-based
};

// Disjoint union: Q is relabeled to sit above P's label range.
LabeledPoset disjointUnion(const LabeledPoset& p, const LabeledPoset& q);
// Ordinal sum: everything in P below everything in Q (labels as above).
LabeledPoset ordinalSum(const LabeledPoset& p, const LabeledPoset& q);

// True if no four elements induce a ≺ b ≻ c ≺ d with no other comparabilities.
bool isNFree(const LabeledPoset& p);

// All series-parallel posets on n elements, one naturally labeled
// representative per isomorphism class.
std::vector<LabeledPoset> enumerateSeriesParallel(int n, int guard = 8);

// A skew shape lambda/mu with mu contained in lambda.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition lambda, Partition mu);

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    // Cells (row, col), 1-based, row-major; row 1 is the longest row.
    std::vector<std::pair<int, int>> cells() const;
    int cellCount() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) = default;
    friend std::strong_ordering operator<=>(const SkewShape& a, const SkewShape& b) = default;

private:
    Partition lambda_;
    Partition mu_;
};

// The cell poset of a skew shape: cells ordered componentwise ((i,j) below
// (i',j') when i <= i' and j <= j'), labeled up each column bottom to top,
// columns left to right.  Right-neighbor covers come out natural and
// down-neighbor covers strict.
LabeledPoset skewShapePoset(const SkewShape& shape);

}  // namespace psikit
