#ifndef BUNKLAB_KERNEL_HPP
#define BUNKLAB_KERNEL_HPP

#include <array>
#include <string>

#include "bunklab/rational.hpp"

namespace bunklab {

// The five partitions of a terminal triple {a, b, c}, a = apex.
enum class TerminalPartition : int {
    ABC = 0,    // all three connected
    AB_C = 1,   // apex with b only
    AC_B = 2,   // apex with c only
    A_BC = 3,   // b with c, apex separate
    A_B_C = 4,  // all separate
};

inline constexpr int kPartitionCount = 5;

const char* partition_name(TerminalPartition p);

// Distribution over terminal partitions induced by a random gadget.
// Normalization (fields sum to 1) is a class invariant.
struct HyperedgeKernel {
    Rat p_abc;
    Rat p_ab_c;
    Rat p_ac_b;
    Rat p_a_bc;
    Rat p_a_b_c;

    const Rat& operator[](TerminalPartition p) const {
        switch (p) {
            case TerminalPartition::ABC: return p_abc;
            case TerminalPartition::AB_C: return p_ab_c;
            case TerminalPartition::AC_B: return p_ac_b;
            case TerminalPartition::A_BC: return p_a_bc;
            default: return p_a_b_c;
        }
    }

    std::array<Rat, kPartitionCount> as_array() const { return {p_abc, p_ab_c, p_ac_b, p_a_bc, p_a_b_c}; }

    bool operator==(const HyperedgeKernel&) const = default;

    // Each field in [0,1] and the five sum to exactly 1.
    void validate() const;

    std::string to_string() const;
};

// P_p(a <-> v_n) on the fan gadget: (1 - p^{2n}) / (1 + p). Defined for
// n >= 0 (n = 0 gives 0). Equals P_p(a <-> v_1) by reflection symmetry.
Rat gadget_marginal_closed(int n, const Rat& p);

// P_p(a <-> v_1 <-> v_n): (1 - p^{2n})/(1+p)^2 + n(1-p)p^{2n-1}/(1+p).
Rat gadget_three_closed(int n, const Rat& p);

// P_p(a </-> v_1 <-> v_n) = p^{2n-1}, n >= 1.
Rat gadget_bc_only_closed(int n, const Rat& p);

// Exact kernel of the fan gadget, n >= 2, assembled from the closed forms:
// p_ab|c = p_ac|b = marginal - p_abc, p_a|bc = p^{2n-1}, remainder to 1.
HyperedgeKernel gadget_kernel_closed(int n, const Rat& p);

// The 400-margin condition: 400 p_a|bc <= p_abc p_a|b|c - p_ab|c^2.
bool check_eq390(const HyperedgeKernel& k);

// Harris-Kleitman consequence: p_ab|c p_ac|b <= p_abc p_a|b|c.
bool check_hk(const HyperedgeKernel& k);

// (n(1-p)/(1+p) - 1) p^{2n-1}, n >= 2, p in (0,1). Also asserts that the
// closed-form kernel's actual p_abc p_a|b|c - p_ab|c^2 is at least this
// bound; a failure indicates a closed-form bug and throws std::logic_error.
Rat kernel_gap_lower_bound(int n, const Rat& p);

}  // namespace bunklab

#endif
