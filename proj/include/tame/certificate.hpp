#pragma once

// Chains of moves phi ~ phi o (f_1 + ... + f_n), with each f_i fixing a
// finite set A_i pointwise, connecting two operad elements that agree on
// the A_i.

#include <string>
#include <vector>

#include "tame/inj.hpp"

namespace tame {

enum class StepDirection { Forward, Backward };

/// Forward: next = current o move. Backward: current = next o move. The
/// next element is the following step's current, or the target after the
/// last step.
struct CertStep {
  OperadElementQ current;
  std::vector<QuasiAffine> move;
  StepDirection direction = StepDirection::Forward;
};

struct Certificate {
  std::size_t n = 0;
  std::vector<NatSet> constraints;
  OperadElementQ source, target;
  std::vector<CertStep> chain;
};

struct Verification {
  bool ok = true;
  int failing_step = -1;  // 0 also covers endpoint and arity failures
  std::string reason;
};

Certificate agreeing_chain(const OperadElementQ& phi, const OperadElementQ& psi,
                           const std::vector<NatSet>& constraints);
Verification verify_certificate(const Certificate& c);

/// The element equal to phi on {i} x A_i and to e o free_part o c_i^-1
/// elsewhere, with c_i: omega -> omega \ A_i and e: omega -> omega \ P the
/// order-preserving bijections, P the union of the phi(i, A_i).
OperadElementQ extend_agreeing(const OperadElementQ& phi,
                               const std::vector<NatSet>& constraints,
                               const OperadElementQ& free_part);

/// The interleave s(1, i) = 2i - 1, s(2, i) = 2i.
OperadElementQ interleave();

}  // namespace tame
