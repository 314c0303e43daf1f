#pragma once

#include <map>
#include <set>

#include "psikit/poset.hpp"
#include "psikit/qsym.hpp"

namespace psikit {

// Outcome of testing a labeled poset for the rooted property: I is the
// largest order ideal all of whose internal covers are strict, J the elements
// of I whose filters carry only natural covers.  The poset is rooted when it
// is a generalized border strip and J = {1}; min1Value is then (-1)^(|I|-1),
// otherwise 0.
struct RootedDiagnosis {
    bool isGbs = false;
    std::vector<int> I;
    std::vector<int> J;
    bool rooted = false;
    int min1Value = 0;
};

RootedDiagnosis rootedDiagnosis(const LabeledPoset& p);

enum class Mark { Minus, Star, Plus };

// A pointed/starred partition of a labeled poset: each element is assigned a
// level (1,2,...) and a mark.  The weight is the composition of level sizes;
// the sign is (-1)^(number of Minus marks).
struct StarredPartition {
    // label -> (level, mark)
    std::map<int, std::pair<int, Mark>> assignment;

    Composition weight() const;
    int sign() const;
    // Number of Star marks per level (all ones for pointed partitions).
    std::vector<int> starsPerLevel() const;

    friend bool operator==(const StarredPartition&, const StarredPartition&) = default;
    friend auto operator<=>(const StarredPartition&, const StarredPartition&) = default;
};

// The generating function K_(P,omega) summed over linear extensions, in the
// fundamental basis.
QSymElement kGeneratingFunction(const LabeledPoset& p, int guard = 12);

// All pointed partitions of p: level decompositions into successive order
// ideals each of which induces a rooted subposet, with the forced marks.
std::vector<StarredPartition> enumeratePointedPartitions(const LabeledPoset& p, int guard = 12);

// K_(P,omega) expanded in the Psi basis directly from pointed partitions
// (no basis conversion).
QSymElement psiExpansionPointed(const LabeledPoset& p, int guard = 12);

// The weight alpha(sigma) of an ordering sigma of the minimal elements:
// alpha_i = |V(z_sigma(i),...,z_sigma(m))| - |V(z_sigma(i+1),...,z_sigma(m))|.
Composition sigmaWeight(const LabeledPoset& p, const std::vector<int>& sigma);

// The truncation of K to terms of minimal length, for naturally labeled
// posets: sum of psi_{alpha(sigma)} over orderings of the minimal elements.
QSymElement kTilde(const LabeledPoset& p, int guard = 12);

// Labelings phi (bijections to 1..n) such that each non-first value sits above
// an earlier-started chain: every minimal x with phi(x) != 1 has some y above
// it with phi(y) < phi(x), and every non-minimal x has a minimal y below it
// with phi(y) < phi(x).  Returned as vectors phi with phi[label-1] = value.
std::vector<std::vector<int>> enumerateZigzagLabelings(const LabeledPoset& p, int guard = 9);

// (n-1)! * max1(kTilde): the count of zigzag labelings of a naturally labeled
// poset.
BigInt zigzagCountFormula(const LabeledPoset& p);

// The labeling classes T_P(pi, sigma) for orderings pi, sigma of the minimal
// elements: labelings phi with phi(z_pi(1)) > ... > phi(z_pi(m)) and, for
// every element y, phi(y) >= phi(z), z the minimal element below y occurring
// last in sigma.
std::vector<std::vector<int>> enumerateT(const LabeledPoset& p, const std::vector<int>& piOrd,
                                         const std::vector<int>& sigmaOrd, int guard = 9);

// f_S moves the entries at positions S (1-based) of a word to the end in
// decreasing position order; g_S is its inverse.
std::vector<int> applyFS(const std::vector<int>& word, const std::set<int>& positions);
std::vector<int> applyGS(const std::vector<int>& word, const std::set<int>& positions);

// A naturally labeled poset is irreducible (K_tilde has no nontrivial
// factorization) iff it is connected.
bool isIrreducibleNatural(const LabeledPoset& p);

}  // namespace psikit
