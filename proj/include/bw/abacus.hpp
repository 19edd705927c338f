#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bw/partition.hpp"

namespace bw {

/* A beta-set: a non-empty finite set of distinct non-negative integers,
 * stored in decreasing order. Equality is set equality; distinct beta-sets
 * can encode the same partition. */
class BetaSet {
public:
    explicit BetaSet(std::vector<long long> elements);

    // Text form "{9,7,6,3,1}".
    static BetaSet parse(const std::string& text);

    const std::vector<long long>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(long long x) const;

    bool operator==(const BetaSet&) const = default;

    std::string to_string() const;

private:
    std::vector<long long> elements_;  // strictly decreasing
};

// P(X) = (x_1 - (t-1), x_2 - (t-2), ..., x_t), zero parts normalized away.
Partition partition_of(const BetaSet& X);

// The unique beta-set of size t with P(X) = lam. Throws if t < length(lam).
BetaSet beta_set_of(const Partition& lam, int t);

// (X \ {x}) u {y} with y < x: removes an (x-y)-hook from P(X).
BetaSet hook_removal_move(const BetaSet& X, long long x, long long y);

// (X \ {x}) u {y} with y > x: adds a (y-x)-hook to P(X).
BetaSet add_hook_move(const BetaSet& X, long long x, long long y);

struct AbacusConfig {
    int e = 1;
    // runner[x] holds the bead rows y (ascending); bead b = x + e*y.
    std::vector<std::vector<long long>> runners;
};

AbacusConfig abacus_config(const BetaSet& X, int e);

/* Pushes every bead as high as possible on its runner; the partition of
 * the result is the e-core of P(X). Same element count as X. */
BetaSet core_via_abacus(const BetaSet& X, int e);

// Split by parity: (evens X_0, odds X_1); either side may be empty.
std::pair<std::vector<long long>, std::vector<long long>> parity_split(const BetaSet& X);

// The c with C_2(P(X)) = gamma_c, read off the 2-runner bead counts.
long long two_core_index(const BetaSet& X);

// ASCII rendering: runners 0..e-1 left to right, rows top down from 0.
std::string render_abacus(const AbacusConfig& cfg, long long rows = -1);

}  // namespace bw
