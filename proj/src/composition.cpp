#include "psikit/composition.hpp"

#include <algorithm>
#include <numeric>

namespace psikit {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::ofSet(const std::set<int>& s, int n) {
    if (n < 0) throw std::invalid_argument("composition size must be nonnegative");
    std::vector<int> parts;
    int prev = 0;
    for (int d : s) {
        if (d < 1 || d > n - 1) throw std::invalid_argument("descent out of range");
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::set<int> Composition::descentSet() const {
    std::set<int> s;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        s.insert(acc);
    }
    return s;
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

Composition Composition::complement() const {
    std::set<int> d = descentSet();
    std::set<int> c;
    for (int i = 1; i <= size_ - 1; ++i) {
        if (!d.count(i)) c.insert(i);
    }
    return ofSet(c, size_);
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(p));
}

Composition Composition::nearConcat(const Composition& other) const {
    if (empty() || other.empty()) {
        throw std::invalid_argument("near-concatenation needs nonempty operands");
    }
    std::vector<int> p = parts_;
    p.back() += other.parts_.front();
    p.insert(p.end(), other.parts_.begin() + 1, other.parts_.end());
    return Composition(std::move(p));
}

bool Composition::refines(const Composition& beta) const {
    if (size_ != beta.size_) return false;
    std::set<int> d = descentSet();
    for (int b : beta.descentSet()) {
        if (!d.count(b)) return false;
    }
    return true;
}

std::vector<Composition> Composition::coarsenings() const {
    // Choose a subset of the internal boundaries to keep.
    std::vector<Composition> out;
    int l = length();
    if (l == 0) return {Composition{}};
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        std::vector<int> p;
        int acc = parts_[0];
        for (int i = 0; i + 1 < l; ++i) {
            if (mask & (1u << i)) {
                p.push_back(acc);
                acc = 0;
            }
            acc += parts_[static_cast<size_t>(i) + 1];
        }
        p.push_back(acc);
        out.emplace_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> Composition::refinements() const {
    std::vector<Composition> out{Composition{}};
    for (int part : parts_) {
        std::vector<Composition> next;
        for (const Composition& pre : out) {
            for (const Composition& mid : compositionsOf(part)) {
                next.push_back(pre.concat(mid));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> Composition::blocksUnder(const Composition& beta) const {
    if (!refines(beta)) throw std::invalid_argument("blocksUnder: not a refinement");
    std::vector<Composition> blocks;
    size_t i = 0;
    for (int target : beta.parts()) {
        std::vector<int> blk;
        int acc = 0;
        while (acc < target) {
            blk.push_back(parts_[i]);
            acc += parts_[i];
            ++i;
        }
        blocks.emplace_back(std::move(blk));
    }
    return blocks;
}

std::string Composition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.parts_ <=> b.parts_;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::partOr0(int i) const {
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i) {
        if (mu[i] > parts_[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::string Partition::str() const {
    return Composition(parts_).str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.parts_ <=> b.parts_;
}

Partition sortedPartition(const Composition& alpha) {
    std::vector<int> p = alpha.parts();
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<int> p = lambda.parts();
    std::sort(p.begin(), p.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt pi(const Composition& alpha) {
    BigInt prod = 1;
    BigInt acc = 0;
    for (int p : alpha.parts()) {
        acc += p;
        prod *= acc;
    }
    return prod;
}

BigInt pi(const Composition& alpha, const Composition& beta) {
    BigInt prod = 1;
    for (const Composition& blk : alpha.blocksUnder(beta)) prod *= pi(blk);
    return prod;
}

BigInt zee(const Composition& alpha) {
    std::vector<int> p = alpha.parts();
    std::sort(p.begin(), p.end());
    BigInt z = 1;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        // part^multiplicity * multiplicity!
        for (size_t k = i; k < j; ++k) z *= BigInt(p[i]) * BigInt(k - i + 1);
        i = j;
    }
    return z;
}

bool isInPi(const std::vector<int>& sigma, const Composition& alpha, const Composition& beta) {
    if (static_cast<int>(sigma.size()) != alpha.size() || !alpha.refines(beta)) return false;
    // Positions (1-based) where alpha-blocks end, grouped by beta-block.
    size_t ai = 0;
    int pos = 0;
    for (int bpart : beta.parts()) {
        int blockStart = pos;
        int runMax = 0;
        int seen = 0;
        while (seen < bpart) {
            int end = pos + alpha[static_cast<int>(ai)];
            for (int q = pos; q < end; ++q) runMax = std::max(runMax, sigma[static_cast<size_t>(q)]);
            if (sigma[static_cast<size_t>(end) - 1] != runMax) return false;
            seen += end - pos;
            pos = end;
            ++ai;
        }
        (void)blockStart;
    }
    return true;
}

std::vector<std::vector<int>> enumeratePi(const Composition& alpha, const Composition& beta,
                                          int guard) {
    if (!alpha.refines(beta)) throw std::invalid_argument("enumeratePi: alpha must refine beta");
    int n = alpha.size();
    if (n > guard) throw GuardExceeded("enumeratePi: n exceeds guard");
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        if (isInPi(sigma, alpha, beta)) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace {
void shuffleRec(const std::vector<int>& a, size_t i, const std::vector<int>& b, size_t j,
                std::vector<int>& cur, std::vector<Composition>& out) {
    if (i == a.size() && j == b.size()) {
        out.emplace_back(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffleRec(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffleRec(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Composition> shuffles(const Composition& a, const Composition& b) {
    std::vector<Composition> out;
    std::vector<int> cur;
    shuffleRec(a.parts(), 0, b.parts(), 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositionsOf(int n) {
    if (n < 0) throw std::invalid_argument("compositionsOf: negative size");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) s.insert(i);
        }
        out.push_back(Composition::ofSet(s, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace psikit
