#include "bw/sweep.hpp"

#include <chrono>

#include <json.hpp>

#include "bw/alternating.hpp"
#include "bw/character.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bw {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/* One (block, p) tuple. Pure: safe to run from any thread. */
BlockOutcome scan_tuple(const BlockLabel& block, long long p) {
    BlockOutcome out;
    out.block = block;
    out.p = p;
    const long long n = block.n;
    const long long c = block.c;
    const long long w = weight(block);

    try {
        if (block.group == GroupTag::Alt && w == 0) {
            // Irr(b_c^+-) is a single half character of degree deg(gamma_c)/2.
            out.status = "split";
            out.partition = gamma(c).to_string();
            out.p_divisible = p_valuation_of_degree(gamma(c), p) >= 1;
            out.rational_available = false;
            if (!out.p_divisible) {
                out.status = "failure";
                out.detail = "weight-0 half character has degree prime to p";
            } else {
                out.detail = "no rational p-divisible (weight 0)";
            }
            return out;
        }

        // Find a p-divisible character in the covering symmetric block.
        Partition witness_partition;
        if (c >= 2 && in_theorem_range(n, p, c)) {
            WitnessCertificate cert = construct_witness(n, p, c);
            out.status = cert.case_tag == CaseTag::Search ? "search" : "witness";
            out.case_tag = cert.case_tag == CaseTag::Search
                               ? std::string("search")
                               : std::string(1, case_letter(cert.case_tag));
            witness_partition = cert.partition;
        } else {
            BetaSet X = search_witness(n, p, c);
            out.status = "search";
            witness_partition = partition_of(X);
        }
        out.partition = witness_partition.to_string();
        out.p_divisible = p_valuation_of_degree(witness_partition, p) >= 1;
        if (block.group == GroupTag::Alt) {
            // weight > 0: the restriction of a non-self-conjugate witness is
            // a single rational valued character of the same degree.
            out.rational_available = !is_self_conjugate(witness_partition);
        }
        if (!out.p_divisible) {
            out.status = "failure";
            out.detail = "witness degree not divisible by p";
        }
    } catch (const std::exception& e) {
        out.status = "failure";
        out.detail = e.what();
    }
    return out;
}

nlohmann::json outcome_json(const BlockOutcome& o) {
    nlohmann::json j;
    j["block"] = o.block.to_string();
    j["p"] = o.p;
    j["status"] = o.status;
    if (!o.case_tag.empty()) j["case_tag"] = o.case_tag;
    if (!o.partition.empty()) j["partition"] = o.partition;
    j["p_divisible"] = o.p_divisible;
    if (o.block.group == GroupTag::Alt) j["rational_available"] = o.rational_available;
    if (!o.detail.empty()) j["detail"] = o.detail;
    return j;
}

}  // namespace

ScanReport run_scan(const ScanParams& params) {
    auto start = std::chrono::steady_clock::now();
    ScanReport report;
    report.params = params;

    // Deterministic tuple list: (n, p, group, block) in input order.
    std::vector<std::pair<BlockLabel, long long>> tuples;
    for (long long n = params.n_lo; n <= params.n_hi; ++n) {
        for (long long p : params.primes) {
            if (params.sym)
                for (const BlockLabel& b : blocks_of_sym(n)) tuples.emplace_back(b, p);
            if (params.alt)
                for (const BlockLabel& b : blocks_of_alt(n)) tuples.emplace_back(b, p);
        }
    }

    report.outcomes.resize(tuples.size());
    const long long count = static_cast<long long>(tuples.size());
    if (params.jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(params.jobs)
#endif
        for (long long i = 0; i < count; ++i)
            report.outcomes[i] = scan_tuple(tuples[i].first, tuples[i].second);
    } else {
        // serial reference path
        for (long long i = 0; i < count; ++i)
            report.outcomes[i] = scan_tuple(tuples[i].first, tuples[i].second);
    }

    for (const BlockOutcome& o : report.outcomes) {
        if (o.status == "witness") ++report.witnessed;
        else if (o.status == "search") ++report.searched;
        else if (o.status == "split") ++report.split_checked;
        else ++report.failures;
    }
    report.elapsed_sec = seconds_since(start);
    return report;
}

std::string ScanReport::to_json(bool stable, int indent) const {
    nlohmann::json j;
    j["parameters"] = {{"n_lo", params.n_lo}, {"n_hi", params.n_hi},
                       {"primes", params.primes},
                       {"groups", std::string(params.sym ? "sym" : "") +
                                      (params.sym && params.alt ? "+" : "") +
                                      (params.alt ? "alt" : "")}};
    j["counters"] = {{"witnessed", witnessed}, {"searched", searched},
                     {"split_checked", split_checked}, {"failures", failures},
                     {"tuples", static_cast<long long>(outcomes.size())}};
    j["ok"] = ok();
    if (!stable) j["elapsed_sec"] = elapsed_sec;
    auto arr = nlohmann::json::array();
    for (const BlockOutcome& o : outcomes) arr.push_back(outcome_json(o));
    j["outcomes"] = std::move(arr);
    return j.dump(indent);
}

OracleReport run_oracle(const OracleParams& params) {
    auto start = std::chrono::steady_clock::now();
    OracleReport report;
    report.params = params;

    for (long long n = 0; n <= params.n_max; ++n) {
        std::vector<Partition> parts = all_partitions(static_cast<int>(n));
        const long long count = static_cast<long long>(parts.size());
        std::vector<unsigned char> bad(parts.size(), 0);

        for (long long pi = 0; pi < static_cast<long long>(params.primes.size()); ++pi) {
            long long p = params.primes[pi];
            if (params.jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(params.jobs)
#endif
                for (long long i = 0; i < count; ++i)
                    if (macdonald_p_divisible(parts[i], p) !=
                        (p_valuation_of_degree(parts[i], p) >= 1))
                        bad[i] = 1;
            } else {
                for (long long i = 0; i < count; ++i)
                    if (macdonald_p_divisible(parts[i], p) !=
                        (p_valuation_of_degree(parts[i], p) >= 1))
                        bad[i] = 1;
            }
            report.checked += count;
            for (long long i = 0; i < count; ++i) {
                if (bad[i]) {
                    ++report.mismatches;
                    if (report.first_mismatch.empty())
                        report.first_mismatch =
                            parts[i].to_string() + ", p=" + std::to_string(p);
                    bad[i] = 0;
                }
            }
        }
    }
    report.elapsed_sec = seconds_since(start);
    return report;
}

std::string OracleReport::to_json(bool stable, int indent) const {
    nlohmann::json j;
    j["parameters"] = {{"n_max", params.n_max}, {"primes", params.primes}};
    j["checked"] = checked;
    j["mismatches"] = mismatches;
    if (!first_mismatch.empty()) j["first_mismatch"] = first_mismatch;
    j["ok"] = ok();
    if (!stable) j["elapsed_sec"] = elapsed_sec;
    return j.dump(indent);
}

}  // namespace bw
