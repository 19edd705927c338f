#pragma once

#include <stdexcept>
#include <string>

#include "bw/abacus.hpp"
#include "bw/blocks.hpp"
#include "bw/partition.hpp"

namespace bw {

enum class CaseTag { A, B, C, D, E, F, G, H, Search };

char case_letter(CaseTag tag);

struct OutOfTheoremRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificateInvalid : std::logic_error {
    using std::logic_error::logic_error;
};

struct ExhaustedSearch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WitnessFacts {
    bool size_ok = false;
    bool core_ok = false;
    bool pk_core_exceeds_r = false;
    bool p_divisible_by_valuation = false;
    bool self_conjugate = false;
};

struct WitnessCertificate {
    long long n = 0;
    long long p = 0;
    long long c = 0;
    PDecomposition decomposition;
    CaseTag case_tag = CaseTag::Search;
    BetaSet beta_set = BetaSet({0});
    Partition partition;
    WitnessFacts facts;

    bool valid() const;
    std::string to_json(int indent = -1) const;  // schema "v1"
};

// Case parameters of the constructions below.
long long sigma(long long a);          // in {1,2}, congruent to a-1 mod 2
long long delta_a1(long long a);       // Kronecker delta at a = 1
long long case2_f(long long n, long long c, const PDecomposition& d, long long i);
long long case2_s(long long n, long long c, const PDecomposition& d);

// True iff (n, c) satisfies hypothesis (1) or (2) for the prime p.
bool in_theorem_range(long long n, long long p, long long c);

/* Picks the unique matching condition (a)-(h), checked in order.
 * Throws OutOfTheoremRange when neither hypothesis holds. */
CaseTag classify_case(long long n, long long p, long long c);

BetaSet construct_case1(long long n, long long p, long long c);  // tags d, g
BetaSet construct_case2(long long n, long long p, long long c);  // tags a, e, h
BetaSet construct_case3(long long n, long long p, long long c);  // tag b

/* Deterministic search for a beta-set whose partition lies in B_c and is
 * p-divisible; requires a non-self-conjugate witness when the block has
 * positive weight. Used for tags c, f and as a generic fallback
 * (including c in {0,1}). Throws ExhaustedSearch past the budget. */
BetaSet search_witness(long long n, long long p, long long c);

/* Dispatches on classify_case and validates every fact by independent
 * recomputation (core via abacus and direct removal, divisibility via the
 * valuation oracle). Throws CertificateInvalid if validation fails. */
WitnessCertificate construct_witness(long long n, long long p, long long c);

}  // namespace bw
