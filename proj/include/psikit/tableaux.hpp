#pragma once

#include <map>

#include "psikit/poset.hpp"
#include "psikit/qsym.hpp"

namespace psikit {

// A filling of a skew shape by values 1..l whose value classes form border
// strips peeled off from the outside in.
struct BorderStripTableau {
    SkewShape shape;
    std::map<std::pair<int, int>, int> fill;  // cell -> value

    // The sum over values of (rows spanned - 1).
    int height() const;
    // Content composition: how many cells carry each value (zero parts are
    // not representable, so the type is defined only for valid tableaux).
    Composition type() const;
    // Checks rows/columns weakly increase, each value class is a border
    // strip, and the running shapes are partitions.
    bool valid() const;
};

// All border strip tableaux of the given shape and type.
std::vector<BorderStripTableau> enumerateBST(const SkewShape& shape, const Composition& alpha);

// The Murnaghan-Nakayama character value: signed count of border strip
// tableaux, chi^{lambda/mu}(alpha).
BigInt chi(const SkewShape& shape, const Composition& alpha);

// s_{lambda/mu} = sum over compositions alpha of chi(alpha) psi_alpha.
QSymElement skewSchurPsi(const SkewShape& shape, int guard = 10);

// min1 of the skew Schur function: (-1)^(rows-1) if the shape is a single
// border strip, else 0.
Rat min1Skew(const SkewShape& shape);

}  // namespace psikit
