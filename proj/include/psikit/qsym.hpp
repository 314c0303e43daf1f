#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "psikit/composition.hpp"

namespace psikit {

enum class Basis { M, L, Psi };

std::string basisName(Basis b);

// A quasisymmetric function held as a sparse rational combination of basis
// elements of a single tagged basis.  Zero coefficients are never stored.
class QSymElement {
public:
    explicit QSymElement(Basis b = Basis::M) : basis_(b) {}

    static QSymElement zero(Basis b) { return QSymElement(b); }
    static QSymElement one(Basis b);  // the empty composition with coefficient 1
    static QSymElement term(Basis b, const Composition& alpha, const Rat& coef = 1);

    Basis basis() const { return basis_; }
    const std::map<Composition, Rat>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    Rat coefficient(const Composition& alpha) const;
    void addTerm(const Composition& alpha, const Rat& coef);

    std::set<int> degrees() const;
    bool isHomogeneous() const { return degrees().size() <= 1; }
    // Degree of a nonzero homogeneous element; throws otherwise.
    int degree() const;

    QSymElement& operator+=(const QSymElement& other);  // requires same basis
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const Rat& c);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const Rat& c) { return a *= c; }
    friend QSymElement operator*(const Rat& c, QSymElement a) { return a *= c; }

    // Basis-aware equality: both sides are compared in the monomial basis.
    friend bool operator==(const QSymElement& a, const QSymElement& b);

private:
    Basis basis_;
    std::map<Composition, Rat> terms_;
};

// An element of a tensor power of QSym, all legs in one basis.
class TensorElement {
public:
    TensorElement(Basis b, int arity) : basis_(b), arity_(arity) {}

    Basis basis() const { return basis_; }
    int arity() const { return arity_; }
    const std::map<std::vector<Composition>, Rat>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const std::vector<Composition>& legs, const Rat& coef);
    Rat coefficient(const std::vector<Composition>& legs) const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) = default;

private:
    Basis basis_;
    int arity_;
    std::map<std::vector<Composition>, Rat> terms_;
};

// Change of basis.  Exact; cached per degree internally.
QSymElement convert(const QSymElement& f, Basis target);

// Product, computed in the basis of f (g is converted if needed):
// shuffle rule in Psi, quasi-shuffle in M, via M for L.
QSymElement multiply(const QSymElement& f, const QSymElement& g);
inline QSymElement operator*(const QSymElement& f, const QSymElement& g) {
    return multiply(f, g);
}

// Binary coproduct, basis-native: deconcatenation of parts in M and Psi,
// the n+1 word cuts in L.
TensorElement coproduct(const QSymElement& f);

// Graded coproduct Delta_alpha: the component of the iterated coproduct in
// which leg i is homogeneous of degree alpha_i.  f must be homogeneous of
// degree |alpha|.
TensorElement gradedCoproduct(const QSymElement& f, const Composition& alpha);

// The functionals taking the coefficient of x1^n at the (first|last) variable
// block; defined on homogeneous f of positive degree.
Rat min1(const QSymElement& f);
Rat max1(const QSymElement& f);
// min1/max1 on a tensor: the product of the functional over the legs.
Rat min1(const TensorElement& t);
Rat max1(const TensorElement& t);

// Coefficients c_alpha with f = sum c_alpha psi_alpha, extracted functionally
// as min1^{tensor l(alpha)} applied to Delta_alpha f (no basis conversion).
std::map<Composition, Rat> psiCoefficients(const QSymElement& f);

enum class Automorphism { Omega, Rho, OmegaRho };

// The involutions omega, rho and their composite, in the basis of f.
QSymElement automorphism(const QSymElement& f, Automorphism which);

// The symmetric power sum p_lambda expanded in the Psi basis:
// p_lambda = z_lambda * sum of psi_alpha over rearrangements alpha of lambda.
QSymElement powerSum(const Partition& lambda);
// The normalized element z_alpha * psi_alpha (a scaling, not a fourth basis).
QSymElement normalizedPsi(const Composition& alpha);

}  // namespace psikit
