#ifndef PSIKIT_FUZZ_HPP
#define PSIKIT_FUZZ_HPP

#include <cstdint>
#include <string>

#include "psikit/ncmodel.hpp"

namespace psikit {

struct FuzzReport {
  int rounds = 0;
  int blowups = 0;
  bool ok = true;
  std::string detail;  // first failure, if any
};

// Applies seeded random admissible blow-up sequences to the model and checks
// that psi (for identity, constant 1, every occurring eps_m, and five random
// tables), the motivic fiber classes, and the naive lift (exact, two
// variables) are unchanged, and that every new component's multiplicity is
// the sum over its center's components.
FuzzReport check_blowup_invariance(const NCModel& base, std::uint64_t seed, int rounds,
                                   int max_steps_per_round = 4);

}  // namespace psikit

#endif
