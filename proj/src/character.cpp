#include "bw/character.hpp"

#include <map>
#include <utility>

namespace bw {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt factorial(long long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

long long factorial_valuation(long long n, long long p) {
    long long v = 0;
    for (long long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;  // avoid overflow on q *= p
    }
    return v;
}

long long int_valuation(long long m, long long p) {
    long long v = 0;
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

BigInt degree(const Partition& lam) {
    BigInt hooks = 1;
    Partition conj = conjugate(lam);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            hooks *= (lam.part(i) - j) + (conj.part(j) - i) + 1;
    BigInt num = factorial(lam.size());
    if (!mpz_divisible_p(num.get_mpz_t(), hooks.get_mpz_t()))
        throw std::logic_error("degree: hook product does not divide n!");
    return num / hooks;
}

long long p_valuation_of_degree(const Partition& lam, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("p_valuation_of_degree: p not prime");
    long long v = factorial_valuation(lam.size(), p);
    Partition conj = conjugate(lam);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j)
            v -= int_valuation((lam.part(i) - j) + (conj.part(j) - i) + 1, p);
    return v;
}

namespace {

long long mn_recurse(const Partition& lam, const std::vector<int>& rho, size_t idx,
                     std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (idx == rho.size()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam.parts(), idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int h = rho[idx];
    long long total = 0;
    Partition conj = conjugate(lam);
    for (int i = 1; i <= lam.length(); ++i) {
        // at most one cell per row has the wanted hook length
        for (int j = 1; j <= lam.part(i); ++j) {
            int hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
            if (hook < h) break;
            if (hook == h) {
                int leg = conj.part(j) - i;
                long long sub = mn_recurse(remove_rim_hook(lam, {i, j}), rho, idx + 1, memo);
                total += (leg % 2 == 0) ? sub : -sub;
                break;
            }
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_value(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size())
        throw std::invalid_argument("mn_value: |lam| != |rho|");
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    return mn_recurse(lam, rho.parts(), 0, memo);
}

BigInt class_size(const Partition& rho) {
    // centralizer order: prod over cycle lengths i of i^{m_i} * m_i!
    BigInt centralizer = 1;
    const auto& parts = rho.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long long mult = static_cast<long long>(j - i);
        BigInt len = parts[i];
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), len.get_mpz_t(), static_cast<unsigned long>(mult));
        centralizer *= pw * factorial(mult);
        i = j;
    }
    return factorial(rho.size()) / centralizer;
}

bool is_perfect_square(const BigInt& m) {
    if (m < 0) return false;
    return mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

BigInt lemma42_product(int n, int r) {
    if (r != 1 && r != -1) throw std::invalid_argument("lemma42_product: r must be 1 or -1");
    if (n < 1) throw std::invalid_argument("lemma42_product: n must be >= 1");
    BigInt prod = 1;
    for (int i = 1; i <= n; ++i) prod *= 4 * i + r;
    return prod;
}

}  // namespace bw
