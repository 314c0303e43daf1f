#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psikit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A composition of n: a finite sequence of positive integers (possibly empty,
// the unique composition of 0).  Canonical order: by length, then lexicographic.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    // The composition of n whose descent set is s (a subset of {1,...,n-1}).
    static Composition ofSet(const std::set<int>& s, int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }     // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    // D(alpha) = {a1, a1+a2, ...} minus the full sum, as a subset of {1,...,n-1}.
    std::set<int> descentSet() const;

    Composition reversed() const;
    // Complement: the composition of n whose descent set is {1,...,n-1} \ D(alpha).
    Composition complement() const;

    Composition concat(const Composition& other) const;
    // Near-concatenation: fuse last part of *this with first part of other.
    Composition nearConcat(const Composition& other) const;

    // True if every part boundary of beta is a part boundary of *this.
    bool refines(const Composition& beta) const;
    // All compositions beta with *this refining beta (2^(length-1) of them).
    std::vector<Composition> coarsenings() const;
    // All compositions refining *this.
    std::vector<Composition> refinements() const;

    // Split *this into consecutive blocks, one per part of beta.
    // Requires refines(beta).
    std::vector<Composition> blocksUnder(const Composition& beta) const;

    std::string str() const;  // "[1,1,4,2,1]"

    friend bool operator==(const Composition& a, const Composition& b) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    // Part i (0-based), 0 beyond the last part.
    int partOr0(int i) const;
    bool contains(const Partition& mu) const;
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Sort the parts of alpha weakly decreasing.
Partition sortedPartition(const Composition& alpha);
// All distinct rearrangements of lambda's parts.
std::vector<Composition> rearrangements(const Partition& lambda);

BigInt factorial(int n);

// pi(alpha) = prod_i (alpha_1 + ... + alpha_i).
BigInt pi(const Composition& alpha);
// pi(alpha, beta) = prod_i pi(alpha^{(i)}) over the beta-blocks of alpha.
// Requires alpha to refine beta.
BigInt pi(const Composition& alpha, const Composition& beta);
// z_lambda for the partition rearrangement of alpha.
BigInt zee(const Composition& alpha);

// Membership test for the permutation set Pi(alpha, beta): sigma (one-line,
// values 1..n) lies in Pi(alpha, beta) iff for every beta-block, read left to
// right, each alpha-block end within it carries the running maximum of sigma
// over the beta-block so far.
bool isInPi(const std::vector<int>& sigma, const Composition& alpha, const Composition& beta);
// All of Pi(alpha, beta) by brute force over S_n; |result| = n!/pi(alpha,beta).
std::vector<std::vector<int>> enumeratePi(const Composition& alpha, const Composition& beta,
                                          int guard = 10);

// The shuffle multiset of two compositions, sorted canonically, with
// multiplicity; size C(l(a)+l(b), l(a)).
std::vector<Composition> shuffles(const Composition& a, const Composition& b);

// All 2^(n-1) compositions of n, canonically ordered.
std::vector<Composition> compositionsOf(int n);
// All partitions of n, canonically ordered.
std::vector<Partition> partitionsOf(int n);

}  // namespace psikit
