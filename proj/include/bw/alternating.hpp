#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bw/blocks.hpp"
#include "bw/character.hpp"
#include "bw/partition.hpp"

namespace bw {

/* An irreducible character of A_n obtained by restricting the S_n
 * character of `source`. Self-conjugate sources split into two halves. */
struct AltCharacter {
    Partition source;
    bool split = false;
    BlockSign half = BlockSign::None;
    BigInt degree;
};

std::vector<AltCharacter> restrict_to_alt(const Partition& lam);

// All 2-blocks of A_n: one b_c per positive-weight B_c, a +/- pair otherwise.
std::vector<BlockLabel> blocks_of_alt(long long n);

// The unique 2-block of S_n covering the given A_n block.
BlockLabel covering_block(const BlockLabel& b);

/* rational_part + surd_coefficient * sqrt(radicand), all exact. */
struct QuadraticValue {
    mpq_class rational_part;
    mpq_class surd_coefficient;
    BigInt radicand;

    bool is_rational() const;
    std::string to_string() const;  // e.g. "(1 + sqrt(45))/2"
};

/* The four values of the split characters of gamma_c on the two classes of
 * cycle type h(gamma_c). Which split class carries which sign is fixed by
 * convention; swapping conventions swaps zeta^+ and zeta^-. */
struct SplitClassValues {
    long long epsilon = 0;  // character value of gamma_c on the class, +-1
    BigInt hook_product;    // prod of diagonal hook lengths
    QuadraticValue plus_on_sigma, minus_on_sigma;
    QuadraticValue plus_on_tau, minus_on_tau;
};

SplitClassValues split_class_values(long long c);  // throws for c < 2

/* Theorem-range classification: the block contains a rational valued
 * p-divisible character iff its weight is positive. */
bool has_rational_p_divisible(const BlockLabel& b, long long p);

}  // namespace bw
