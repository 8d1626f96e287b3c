#ifndef WITTSIG_OPTIONS_HPP
#define WITTSIG_OPTIONS_HPP

namespace wittsig {

// Refinement budgets. The mathematics guarantees termination of every
// refinement loop; the caps below are safety valves that turn a would-be hang
// into a RefinementBudgetError.
struct Budget {
  long start_precision = 64;       // bits for the first numeric pass
  long max_precision = 1L << 18;   // precision doubles up to this cap
  int max_subdivision_depth = 56;  // root-cover bisection depth cap
  long unity_order_bound = 24;     // roots of unity up to this order are recognized exactly
  long sample_order_start = 8;     // arc samples zeta_N^j, N doubling from here
  long sample_order_max = 1L << 24;

  // Maps the CLI-facing single knob onto the individual caps.
  static Budget with_refine_limit(long start_bits, int max_refine) {
    Budget b;
    b.start_precision = start_bits;
    int doublings = max_refine > 24 ? 24 : max_refine;
    b.max_precision = start_bits << doublings;
    b.max_subdivision_depth = 8 + 4 * max_refine;
    return b;
  }
};

}  // namespace wittsig

#endif
