#pragma once

#include <gmpxx.h>

#include "bw/partition.hpp"

namespace bw {

using BigInt = mpz_class;

bool is_prime(long long p);

BigInt factorial(long long n);

// v_p(n!) by Legendre's formula, never materializing the factorial.
long long factorial_valuation(long long n, long long p);

long long int_valuation(long long m, long long p);

// Character degree n! / prod of hook lengths; division is checked exact.
BigInt degree(const Partition& lam);

// v_p(degree(lam)) = v_p(n!) - sum of hook valuations. Throws if p not prime.
long long p_valuation_of_degree(const Partition& lam, long long p);

/* Murnaghan-Nakayama character value: the value of the irreducible
 * character of S_n labelled by lam on the class of cycle type rho.
 * Memoized internally per call; throws on |lam| != |rho|. */
long long mn_value(const Partition& lam, const Partition& rho);

// Conjugacy class size n! / (prod i^{m_i} m_i!) for cycle type rho.
BigInt class_size(const Partition& rho);

bool is_perfect_square(const BigInt& m);

// prod_{i=1..n} (4i + r) for r in {1,-1}.
BigInt lemma42_product(int n, int r);

}  // namespace bw
