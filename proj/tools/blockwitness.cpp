// blockwitness: exact 2-block combinatorics for symmetric and alternating
// groups. Subcommands wrap the library; JSON output via --json.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bw/abacus.hpp"
#include "bw/alternating.hpp"
#include "bw/blocks.hpp"
#include "bw/character.hpp"
#include "bw/partition.hpp"
#include "bw/sweep.hpp"
#include "bw/witness.hpp"

namespace {

enum ExitCode { kOk = 0, kParse = 2, kOutOfRange = 3, kInvalidCertificate = 4, kMismatch = 5 };

int log_level() {
    const char* env = std::getenv("BLOCKWITNESS_LOG");
    if (!env) return 0;
    std::string v = env;
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

std::vector<long long> parse_prime_list(const std::string& text) {
    std::vector<long long> primes;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        primes.push_back(std::stoll(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (primes.empty()) throw std::invalid_argument("empty prime list");
    return primes;
}

std::pair<long long, long long> parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        long long n = std::stoll(text);
        return {n, n};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-block combinatorics of symmetric and alternating groups"};
    app.require_subcommand(1);

    std::string partition_text, rho_text, n_range = "66..66", prime_list = "3";
    long long arg_e = 2, arg_n = 0, arg_p = 3, arg_c = 2, arg_t = 0, n_max = 24;
    int jobs = 1;
    bool json_out = false, stable = false, show_abacus = false, allow_p2 = false;
    std::string group = "sym";

    auto* cmd_core = app.add_subcommand("core", "e-core and e-weight of a partition");
    cmd_core->add_option("partition", partition_text)->required();
    cmd_core->add_option("--e", arg_e, "hook length to remove")->default_val(2);
    cmd_core->add_flag("--abacus", show_abacus, "render the abacus configuration");
    cmd_core->add_flag("--json", json_out);

    auto* cmd_abacus = app.add_subcommand("abacus", "render a beta-set on the e-abacus");
    cmd_abacus->add_option("partition", partition_text)->required();
    cmd_abacus->add_option("--e", arg_e)->default_val(2);
    cmd_abacus->add_option("--t", arg_t, "beta-set size (defaults to partition length)");

    auto* cmd_block = app.add_subcommand("block", "2-block label of a partition");
    cmd_block->add_option("partition", partition_text)->required();
    cmd_block->add_flag("--json", json_out);

    auto* cmd_witness = app.add_subcommand("witness", "construct a p-divisible witness certificate");
    cmd_witness->add_option("n", arg_n)->required();
    cmd_witness->add_option("p", arg_p)->required();
    cmd_witness->add_option("c", arg_c)->required();
    cmd_witness->add_flag("--json", json_out);

    auto* cmd_scan = app.add_subcommand("scan", "witness every 2-block over a range of n");
    cmd_scan->add_option("--n", n_range, "range A..B")->required();
    cmd_scan->add_option("--p", prime_list, "comma-separated primes")->required();
    cmd_scan->add_option("--group", group, "sym | alt | both")->default_val("sym");
    cmd_scan->add_option("--jobs", jobs)->default_val(1);
    cmd_scan->add_flag("--json", json_out);
    cmd_scan->add_flag("--stable", stable, "omit timing fields");

    auto* cmd_oracle = app.add_subcommand("oracle", "divisibility criterion vs valuation oracle");
    cmd_oracle->add_option("--n-max", n_max)->default_val(24);
    cmd_oracle->add_option("--p", prime_list)->default_val("3,5,7,11,13");
    cmd_oracle->add_option("--jobs", jobs)->default_val(1);
    cmd_oracle->add_flag("--allow-p2", allow_p2, "permit p=2 (criterion is prime-generic)");
    cmd_oracle->add_flag("--json", json_out);
    cmd_oracle->add_flag("--stable", stable);

    auto* cmd_anblocks = app.add_subcommand("an-blocks", "2-blocks of the alternating group");
    cmd_anblocks->add_option("n", arg_n)->required();
    cmd_anblocks->add_flag("--json", json_out);

    auto* cmd_rational = app.add_subcommand("rational", "rational p-divisible classification for A_n blocks");
    cmd_rational->add_option("n", arg_n)->required();
    cmd_rational->add_option("p", arg_p)->required();
    cmd_rational->add_option("c", arg_c)->required();
    cmd_rational->add_flag("--json", json_out);

    auto* cmd_degree = app.add_subcommand("degree", "character degree by the hook length formula");
    cmd_degree->add_option("partition", partition_text)->required();
    cmd_degree->add_flag("--json", json_out);

    auto* cmd_mn = app.add_subcommand("mn", "character value by the Murnaghan-Nakayama rule");
    cmd_mn->add_option("partition", partition_text)->required();
    cmd_mn->add_option("cycle_type", rho_text)->required();
    cmd_mn->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*cmd_core) {
            bw::Partition lam = bw::Partition::parse(partition_text);
            bw::Partition core = bw::e_core(lam, static_cast<int>(arg_e));
            long long w = bw::e_weight(lam, static_cast<int>(arg_e));
            if (json_out) {
                nlohmann::json j{{"partition", lam.parts()}, {"e", arg_e},
                                 {"core", core.parts()}, {"weight", w}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << core.to_string() << "\nweight " << w << "\n";
                if (show_abacus) {
                    auto X = bw::beta_set_of(lam, std::max(1, lam.length()));
                    std::cout << bw::render_abacus(bw::abacus_config(X, static_cast<int>(arg_e)));
                }
            }
        } else if (*cmd_abacus) {
            bw::Partition lam = bw::Partition::parse(partition_text);
            int t = arg_t > 0 ? static_cast<int>(arg_t) : std::max(1, lam.length());
            auto X = bw::beta_set_of(lam, t);
            std::cout << X.to_string() << "\n"
                      << bw::render_abacus(bw::abacus_config(X, static_cast<int>(arg_e)));
        } else if (*cmd_block) {
            bw::Partition lam = bw::Partition::parse(partition_text);
            bw::BlockLabel b = bw::block_of(lam);
            if (json_out) {
                nlohmann::json j{{"block", b.to_string()}, {"n", b.n}, {"c", b.c},
                                 {"weight", bw::weight(b)}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << b.to_string() << " weight " << bw::weight(b) << "\n";
            }
        } else if (*cmd_witness) {
            if (arg_c < 2) {
                std::cerr << "out of theorem range: principal block: see scan\n";
                return kOutOfRange;
            }
            bw::WitnessCertificate cert = bw::construct_witness(arg_n, arg_p, arg_c);
            if (json_out) {
                std::cout << cert.to_json() << "\n";
            } else {
                std::cout << "case " << (cert.case_tag == bw::CaseTag::Search
                                             ? std::string("search")
                                             : std::string(1, bw::case_letter(cert.case_tag)))
                          << "\nbeta-set " << cert.beta_set.to_string() << "\npartition "
                          << cert.partition.to_string() << "\nself-conjugate "
                          << (cert.facts.self_conjugate ? "yes" : "no") << "\n";
            }
        } else if (*cmd_scan) {
            bw::ScanParams params;
            auto [lo, hi] = parse_range(n_range);
            params.n_lo = lo;
            params.n_hi = hi;
            params.primes = parse_prime_list(prime_list);
            params.sym = group == "sym" || group == "both";
            params.alt = group == "alt" || group == "both";
            if (!params.sym && !params.alt) {
                std::cerr << "unknown group '" << group << "'\n";
                return kParse;
            }
            params.jobs = jobs;
            log_info("scan n=" + std::to_string(lo) + ".." + std::to_string(hi));
            bw::ScanReport report = bw::run_scan(params);
            if (json_out) {
                std::cout << report.to_json(stable, 2) << "\n";
            } else {
                for (const auto& o : report.outcomes) {
                    std::cout << o.block.to_string() << " p=" << o.p << " " << o.status;
                    if (!o.partition.empty()) std::cout << " " << o.partition;
                    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
                    std::cout << "\n";
                }
                std::cout << "witnessed " << report.witnessed << ", searched " << report.searched
                          << ", split " << report.split_checked << ", failures "
                          << report.failures << "\n";
            }
            return report.ok() ? kOk : kMismatch;
        } else if (*cmd_oracle) {
            bw::OracleParams params;
            params.n_max = n_max;
            params.primes = parse_prime_list(prime_list);
            params.jobs = jobs;
            for (long long p : params.primes) {
                if (p == 2 && !allow_p2) {
                    std::cerr << "p=2 is outside the intended scope; pass --allow-p2 to run it\n";
                    return kParse;
                }
                if (!bw::is_prime(p)) {
                    std::cerr << "not a prime: " << p << "\n";
                    return kParse;
                }
            }
            if (params.n_max > 40) {
                std::cerr << "budget exceeded: n-max is capped at 40\n";
                return kParse;
            }
            bw::OracleReport report = bw::run_oracle(params);
            if (json_out)
                std::cout << report.to_json(stable) << "\n";
            else
                std::cout << (report.ok() ? "pass" : "FAIL") << " (" << report.checked
                          << " checks, " << report.mismatches << " mismatches)\n";
            return report.ok() ? kOk : kMismatch;
        } else if (*cmd_anblocks) {
            auto blocks = bw::blocks_of_alt(arg_n);
            if (json_out) {
                auto arr = nlohmann::json::array();
                for (const auto& b : blocks)
                    arr.push_back({{"block", b.to_string()}, {"c", b.c}, {"weight", bw::weight(b)}});
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& b : blocks)
                    std::cout << b.to_string() << " weight " << bw::weight(b) << "\n";
            }
        } else if (*cmd_rational) {
            auto blocks = bw::blocks_of_alt(arg_n);
            bool any = false;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& b : blocks) {
                if (b.c != arg_c) continue;
                any = true;
                bool rational = bw::has_rational_p_divisible(b, arg_p);
                if (json_out)
                    arr.push_back({{"block", b.to_string()}, {"rational_p_divisible", rational}});
                else
                    std::cout << b.to_string() << " rational p-divisible: "
                              << (rational ? "yes" : "no") << "\n";
            }
            if (json_out) std::cout << arr.dump() << "\n";
            if (!any) {
                std::cerr << "no 2-block of A_" << arg_n << " with core index " << arg_c << "\n";
                return kOutOfRange;
            }
        } else if (*cmd_degree) {
            bw::Partition lam = bw::Partition::parse(partition_text);
            bw::BigInt deg = bw::degree(lam);
            if (json_out)
                std::cout << nlohmann::json{{"partition", lam.parts()},
                                            {"degree", deg.get_str()}}.dump()
                          << "\n";
            else
                std::cout << deg.get_str() << "\n";
        } else if (*cmd_mn) {
            bw::Partition lam = bw::Partition::parse(partition_text);
            bw::Partition rho = bw::Partition::parse(rho_text);
            long long value = bw::mn_value(lam, rho);
            if (json_out)
                std::cout << nlohmann::json{{"partition", lam.parts()},
                                            {"cycle_type", rho.parts()},
                                            {"value", value}}.dump()
                          << "\n";
            else
                std::cout << value << "\n";
        }
    } catch (const bw::OutOfTheoremRange& e) {
        std::cerr << "out of theorem range: " << e.what() << "\n";
        return kOutOfRange;
    } catch (const bw::CertificateInvalid& e) {
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return kInvalidCertificate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kOk;
}
