#include "bw/abacus.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace bw {

BetaSet::BetaSet(std::vector<long long> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("BetaSet: must be non-empty");
    std::sort(elements_.begin(), elements_.end(), std::greater<>());
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 0) throw std::invalid_argument("BetaSet: elements must be non-negative");
        if (i > 0 && elements_[i - 1] == elements_[i])
            throw std::invalid_argument("BetaSet: elements must be distinct");
    }
}

BetaSet BetaSet::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("BetaSet::parse: " + why + " in \"" + text + "\"");
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
    ++pos;
    std::vector<long long> elems;
    for (;;) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        elems.push_back(std::stoll(text.substr(start, pos - start)));
        skip_ws();
        if (pos >= text.size()) fail("unterminated set");
        if (text[pos] == '}') { ++pos; break; }
        if (text[pos] != ',') fail("expected ',' or '}'");
        ++pos;
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
    return BetaSet(std::move(elems));
}

bool BetaSet::contains(long long x) const {
    return std::binary_search(elements_.rbegin(), elements_.rend(), x);
}

std::string BetaSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (i) out << ',';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

Partition partition_of(const BetaSet& X) {
    const auto& e = X.elements();
    int t = X.size();
    std::vector<int> parts(t);
    for (int i = 0; i < t; ++i) parts[i] = static_cast<int>(e[i] - (t - 1 - i));
    return Partition(std::move(parts));
}

BetaSet beta_set_of(const Partition& lam, int t) {
    if (t < lam.length())
        throw std::invalid_argument("beta_set_of: t < length of partition");
    std::vector<long long> elems(t);
    for (int i = 1; i <= t; ++i) elems[i - 1] = lam.part(i) + (t - i);
    return BetaSet(std::move(elems));
}

BetaSet hook_removal_move(const BetaSet& X, long long x, long long y) {
    if (!X.contains(x) || X.contains(y) || y < 0 || y >= x)
        throw std::invalid_argument("hook_removal_move: need x in X, y not in X, 0 <= y < x");
    std::vector<long long> elems = X.elements();
    std::replace(elems.begin(), elems.end(), x, y);
    return BetaSet(std::move(elems));
}

BetaSet add_hook_move(const BetaSet& X, long long x, long long y) {
    if (!X.contains(x) || X.contains(y) || y <= x)
        throw std::invalid_argument("add_hook_move: need x in X, y not in X, y > x");
    std::vector<long long> elems = X.elements();
    std::replace(elems.begin(), elems.end(), x, y);
    return BetaSet(std::move(elems));
}

AbacusConfig abacus_config(const BetaSet& X, int e) {
    if (e < 1) throw std::invalid_argument("abacus_config: e must be >= 1");
    AbacusConfig cfg;
    cfg.e = e;
    cfg.runners.resize(e);
    for (long long b : X.elements()) cfg.runners[b % e].push_back(b / e);
    for (auto& runner : cfg.runners) std::sort(runner.begin(), runner.end());
    return cfg;
}

BetaSet core_via_abacus(const BetaSet& X, int e) {
    AbacusConfig cfg = abacus_config(X, e);
    std::vector<long long> elems;
    for (int x = 0; x < e; ++x)
        for (long long y = 0; y < static_cast<long long>(cfg.runners[x].size()); ++y)
            elems.push_back(x + e * y);
    return BetaSet(std::move(elems));
}

std::pair<std::vector<long long>, std::vector<long long>> parity_split(const BetaSet& X) {
    std::vector<long long> evens, odds;
    for (long long x : X.elements()) (x % 2 == 0 ? evens : odds).push_back(x);
    return {evens, odds};
}

long long two_core_index(const BetaSet& X) {
    auto [evens, odds] = parity_split(X);
    long long n0 = static_cast<long long>(evens.size());
    long long n1 = static_cast<long long>(odds.size());
    return n1 >= n0 ? n1 - n0 : n0 - n1 - 1;
}

std::string render_abacus(const AbacusConfig& cfg, long long rows) {
    if (rows < 0) {
        rows = 1;
        for (const auto& runner : cfg.runners)
            if (!runner.empty()) rows = std::max(rows, runner.back() + 1);
    }
    std::ostringstream out;
    for (int x = 0; x < cfg.e; ++x) out << (x ? " " : "") << x;
    out << '\n';
    for (long long y = 0; y < rows; ++y) {
        for (int x = 0; x < cfg.e; ++x) {
            bool bead = std::binary_search(cfg.runners[x].begin(), cfg.runners[x].end(), y);
            out << (x ? " " : "") << (bead ? "•" : "-");
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace bw
