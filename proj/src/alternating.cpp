#include "bw/alternating.hpp"

#include <sstream>

#include "bw/witness.hpp"

namespace bw {

std::vector<AltCharacter> restrict_to_alt(const Partition& lam) {
    if (lam.size() < 1) throw std::invalid_argument("restrict_to_alt: need |lam| >= 1");
    BigInt deg = degree(lam);
    if (!is_self_conjugate(lam))
        return {AltCharacter{lam, false, BlockSign::None, deg}};
    if (!mpz_divisible_ui_p(deg.get_mpz_t(), 2))
        throw std::logic_error("restrict_to_alt: self-conjugate degree not even");
    BigInt half = deg / 2;
    return {AltCharacter{lam, true, BlockSign::Plus, half},
            AltCharacter{lam, true, BlockSign::Minus, half}};
}

std::vector<BlockLabel> blocks_of_alt(long long n) {
    std::vector<BlockLabel> out;
    for (const BlockLabel& b : blocks_of_sym(n)) {
        if (weight(b) > 0) {
            out.push_back({GroupTag::Alt, n, b.c, BlockSign::None});
        } else {
            out.push_back({GroupTag::Alt, n, b.c, BlockSign::Plus});
            out.push_back({GroupTag::Alt, n, b.c, BlockSign::Minus});
        }
    }
    return out;
}

BlockLabel covering_block(const BlockLabel& b) {
    if (b.group != GroupTag::Alt || !b.valid())
        throw std::invalid_argument("covering_block: invalid A_n block label " + b.to_string());
    return BlockLabel{GroupTag::Sym, b.n, b.c, BlockSign::None};
}

bool QuadraticValue::is_rational() const {
    return surd_coefficient == 0 || (radicand >= 0 && is_perfect_square(radicand));
}

std::string QuadraticValue::to_string() const {
    if (surd_coefficient == 0) {
        std::ostringstream out;
        out << rational_part;
        return out.str();
    }
    mpz_class den = lcm(rational_part.get_den(), surd_coefficient.get_den());
    mpq_class a = rational_part * den;
    mpq_class b = surd_coefficient * den;
    std::ostringstream out;
    out << '(' << a.get_num();
    out << (b.get_num() < 0 ? " - " : " + ");
    mpz_class babs = abs(b.get_num());
    if (babs != 1) out << babs << "*";
    out << "sqrt(" << radicand << "))";
    if (den != 1) out << '/' << den;
    return out.str();
}

SplitClassValues split_class_values(long long c) {
    if (c < 2) throw std::invalid_argument("split_class_values: need c >= 2 (degenerate core)");
    Partition core = gamma(c);
    Partition diag = diagonal_hooks(core);
    long long eps = mn_value(core, diag);
    if (eps != 1 && eps != -1)
        throw std::logic_error("split_class_values: character value on h(gamma_c) not +-1");
    SplitClassValues out;
    out.epsilon = eps;
    out.hook_product = 1;
    for (int h : diag.parts()) out.hook_product *= h;
    BigInt radicand = static_cast<long>(eps) * out.hook_product;
    mpq_class half(1, 2), eps_half(static_cast<long>(eps), 2);
    out.plus_on_sigma = {eps_half, half, radicand};
    out.minus_on_sigma = {eps_half, -half, radicand};
    out.plus_on_tau = {eps_half, -half, radicand};
    out.minus_on_tau = {eps_half, half, radicand};
    return out;
}

bool has_rational_p_divisible(const BlockLabel& b, long long p) {
    if (b.group != GroupTag::Alt || !b.valid())
        throw std::invalid_argument("has_rational_p_divisible: invalid A_n block " + b.to_string());
    if (!in_theorem_range(b.n, p, b.c))
        throw OutOfTheoremRange("has_rational_p_divisible: block " + b.to_string() +
                                " is outside the proven range for p=" + std::to_string(p));
    return weight(b) > 0;
}

}  // namespace bw
