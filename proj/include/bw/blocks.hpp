#pragma once

#include <string>
#include <vector>

#include "bw/partition.hpp"

namespace bw {

enum class GroupTag { Sym, Alt };
enum class BlockSign { None, Plus, Minus };

/* Label of a 2-block: B_c of S_n, or the block(s) of A_n it covers.
 * Weight-0 alternating blocks split into a +/- pair. */
struct BlockLabel {
    GroupTag group = GroupTag::Sym;
    long long n = 0;
    long long c = 0;
    BlockSign sign = BlockSign::None;

    bool operator==(const BlockLabel&) const = default;
    bool valid() const;
    std::string to_string() const;  // "S_75:B_5", "A_75:b_5", "A_15:b_5^+"
};

// n = a*p^k + r with 0 < a < p, 0 <= r < p^k.
struct PDecomposition {
    long long n = 0;
    long long p = 0;
    long long a = 0;
    long long k = 0;
    long long pk = 1;
    long long r = 0;
};

// Staircase partition (c, c-1, ..., 1); gamma(0) is empty.
Partition gamma(long long c);

// The 2-block of S_n containing the character of lam.
BlockLabel block_of(const Partition& lam);

// All valid B_c of S_n, ascending c.
std::vector<BlockLabel> blocks_of_sym(long long n);

long long weight(const BlockLabel& label);  // throws on invalid label

PDecomposition p_decompose(long long n, long long p);  // throws if p not prime

/* Recursive p-divisibility criterion: with n = a*p^k + r, the character of
 * lam is p-divisible iff |C_{p^k}(lam)| > r or the criterion holds for the
 * core. Partitions smaller than p are never p-divisible. */
bool macdonald_p_divisible(const Partition& lam, long long p);

}  // namespace bw
