#pragma once

#include <string>
#include <vector>

#include "bw/blocks.hpp"
#include "bw/witness.hpp"

namespace bw {

/* Batch drivers behind the `scan` and `oracle` CLI commands. Each tuple is
 * independent; the parallel paths split tuples across OpenMP threads and
 * merge results in deterministic input order. `jobs <= 1` selects the
 * serial reference implementation, which must produce identical reports. */

struct ScanParams {
    long long n_lo = 0;
    long long n_hi = 0;
    std::vector<long long> primes;
    bool sym = true;
    bool alt = false;
    int jobs = 1;
};

struct BlockOutcome {
    BlockLabel block;
    long long p = 0;
    std::string status;     // "witness", "search", "split", "failure"
    std::string case_tag;   // for "witness"
    std::string partition;  // witnessing partition, text form
    bool p_divisible = false;
    bool rational_available = false;  // Alt only: rational p-divisible exists
    std::string detail;               // failure reason or notes
};

struct ScanReport {
    ScanParams params;
    std::vector<BlockOutcome> outcomes;
    long long witnessed = 0;
    long long searched = 0;
    long long split_checked = 0;
    long long failures = 0;
    double elapsed_sec = 0.0;

    bool ok() const { return failures == 0; }
    std::string to_json(bool stable, int indent = -1) const;
};

ScanReport run_scan(const ScanParams& params);

struct OracleParams {
    long long n_max = 24;
    std::vector<long long> primes;
    int jobs = 1;
};

struct OracleReport {
    OracleParams params;
    long long checked = 0;
    long long mismatches = 0;
    std::string first_mismatch;  // "(lambda, p)" text, empty when none
    double elapsed_sec = 0.0;

    bool ok() const { return mismatches == 0; }
    std::string to_json(bool stable, int indent = -1) const;
};

/* Exhaustive check of the recursive p-divisibility criterion against the
 * Legendre-valuation oracle over every partition of every n <= n_max. */
OracleReport run_oracle(const OracleParams& params);

}  // namespace bw
