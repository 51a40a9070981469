#include "bunklab/kernel.hpp"

#include <stdexcept>

namespace bunklab {

const char* partition_name(TerminalPartition p) {
    switch (p) {
        case TerminalPartition::ABC: return "abc";
        case TerminalPartition::AB_C: return "ab|c";
        case TerminalPartition::AC_B: return "ac|b";
        case TerminalPartition::A_BC: return "a|bc";
        default: return "a|b|c";
    }
}

void HyperedgeKernel::validate() const {
    for (const Rat& f : as_array())
        if (!is_probability(f)) throw std::invalid_argument("kernel field outside [0,1]");
    if (p_abc + p_ab_c + p_ac_b + p_a_bc + p_a_b_c != 1)
        throw std::invalid_argument("kernel fields must sum to 1");
}

std::string HyperedgeKernel::to_string() const {
    return "(" + rat_to_string(p_abc) + ", " + rat_to_string(p_ab_c) + ", " + rat_to_string(p_ac_b) +
           ", " + rat_to_string(p_a_bc) + ", " + rat_to_string(p_a_b_c) + ")";
}

Rat gadget_marginal_closed(int n, const Rat& p) {
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    if (n == 0) return Rat(0);
    return (1 - rat_pow(p, 2ul * n)) / (1 + p);
}

Rat gadget_three_closed(int n, const Rat& p) {
    if (n < 0) throw std::invalid_argument("n >= 0 required");
    if (n == 0) return Rat(0);
    Rat one_plus = 1 + p;
    return (1 - rat_pow(p, 2ul * n)) / (one_plus * one_plus) +
           Rat(n) * (1 - p) * rat_pow(p, 2ul * n - 1) / one_plus;
}

Rat gadget_bc_only_closed(int n, const Rat& p) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    return rat_pow(p, 2ul * n - 1);
}

HyperedgeKernel gadget_kernel_closed(int n, const Rat& p) {
    if (n < 2) throw std::invalid_argument("gadget_kernel_closed: n >= 2 required");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("gadget_kernel_closed: p in (0,1) required");
    HyperedgeKernel k;
    k.p_abc = gadget_three_closed(n, p);
    Rat marginal = gadget_marginal_closed(n, p);
    k.p_ab_c = marginal - k.p_abc;
    k.p_ac_b = k.p_ab_c;
    k.p_a_bc = gadget_bc_only_closed(n, p);
    k.p_a_b_c = 1 - k.p_abc - k.p_ab_c - k.p_ac_b - k.p_a_bc;
    k.validate();
    return k;
}

bool check_eq390(const HyperedgeKernel& k) {
    return 400 * k.p_a_bc <= k.p_abc * k.p_a_b_c - k.p_ab_c * k.p_ab_c;
}

bool check_hk(const HyperedgeKernel& k) {
    return k.p_ab_c * k.p_ac_b <= k.p_abc * k.p_a_b_c;
}

Rat kernel_gap_lower_bound(int n, const Rat& p) {
    if (n < 2) throw std::invalid_argument("kernel_gap_lower_bound: n >= 2 required");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("kernel_gap_lower_bound: p in (0,1) required");
    Rat bound = (Rat(n) * (1 - p) / (1 + p) - 1) * rat_pow(p, 2ul * n - 1);
    HyperedgeKernel k = gadget_kernel_closed(n, p);
    Rat actual = k.p_abc * k.p_a_b_c - k.p_ab_c * k.p_ab_c;
    if (actual < bound) throw std::logic_error("closed-form kernel violates its own lower bound");
    return bound;
}

}  // namespace bunklab
