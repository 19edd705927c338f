#include "bw/blocks.hpp"

#include "bw/character.hpp"

namespace bw {

bool BlockLabel::valid() const {
    long long core_size = c * (c + 1) / 2;
    if (n < 1 || c < 0) return false;
    if (core_size > n || (core_size - n) % 2 != 0) return false;
    long long w = (n - core_size) / 2;
    if (group == GroupTag::Sym) return sign == BlockSign::None;
    return (w == 0) == (sign != BlockSign::None);
}

std::string BlockLabel::to_string() const {
    std::string out = group == GroupTag::Sym ? "S_" : "A_";
    out += std::to_string(n);
    out += group == GroupTag::Sym ? ":B_" : ":b_";
    out += std::to_string(c);
    if (sign == BlockSign::Plus) out += "^+";
    if (sign == BlockSign::Minus) out += "^-";
    return out;
}

Partition gamma(long long c) {
    std::vector<int> parts;
    for (long long i = c; i >= 1; --i) parts.push_back(static_cast<int>(i));
    return Partition(std::move(parts));
}

BlockLabel block_of(const Partition& lam) {
    Partition core = e_core(lam, 2);
    return BlockLabel{GroupTag::Sym, lam.size(), core.length(), BlockSign::None};
}

std::vector<BlockLabel> blocks_of_sym(long long n) {
    std::vector<BlockLabel> out;
    for (long long c = 0; c * (c + 1) / 2 <= n; ++c) {
        BlockLabel label{GroupTag::Sym, n, c, BlockSign::None};
        if (label.valid()) out.push_back(label);
    }
    return out;
}

long long weight(const BlockLabel& label) {
    if (!label.valid()) throw std::invalid_argument("weight: invalid block label " + label.to_string());
    return (label.n - label.c * (label.c + 1) / 2) / 2;
}

PDecomposition p_decompose(long long n, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("p_decompose: p not prime");
    if (n < 1) throw std::invalid_argument("p_decompose: n must be >= 1");
    PDecomposition d;
    d.n = n;
    d.p = p;
    d.pk = 1;
    d.k = 0;
    while (d.pk <= n / p) { d.pk *= p; ++d.k; }
    d.a = n / d.pk;
    d.r = n % d.pk;
    return d;
}

bool macdonald_p_divisible(const Partition& lam, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("macdonald_p_divisible: p not prime");
    Partition cur = lam;
    // v_p(m!) = 0 for m < p, so such degrees are never p-divisible.
    while (cur.size() >= p) {
        PDecomposition d = p_decompose(cur.size(), p);
        Partition core = e_core(cur, static_cast<int>(d.pk));
        if (core.size() > d.r) return true;
        cur = core;  // strictly smaller: |core| <= r < p^k <= n
    }
    return false;
}

}  // namespace bw
