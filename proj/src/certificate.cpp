#include "tame/certificate.hpp"

#include <algorithm>
#include <numeric>

#include "tame/error.hpp"

namespace tame {

namespace {

using Slots = std::vector<QuasiAffine>;

enum class Parity { Odd, Even, Mixed };

Parity parity_of(const QuasiAffine& f) {
  const auto img = f.image();
  bool odd = false, even = false;
  for (Nat v : img.points) (v % 2 ? odd : even) = true;
  for (auto [start, step] : img.progressions) {
    if (step % 2) odd = even = true;
    (start % 2 ? odd : even) = true;
  }
  if (odd && even) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

const QuasiAffine kId = QuasiAffine::identity();
const QuasiAffine kDPlus = QuasiAffine::affine(2, 0);
const QuasiAffine kDMinus = QuasiAffine::affine(2, -1);

Nat count_below(const NatSet& s, Nat v) {
  return static_cast<Nat>(std::distance(s.begin(), s.lower_bound(v)));
}
Nat max_of(const NatSet& s) { return s.empty() ? 0 : *s.rbegin(); }

// A chain from `start` to `end`; each step's next element is the following
// step's current, or `end`.
struct Chain {
  OperadElementQ start, end;
  std::vector<CertStep> steps;

  explicit Chain(const OperadElementQ& e) : start(e), end(e) {}
  void step(Slots move, StepDirection dir, const OperadElementQ& next) {
    steps.push_back(CertStep{end, std::move(move), dir});
    end = next;
  }
  void append(const Chain& other) {
    if (!(other.start == end))
      fail(ErrorKind::SearchExhausted, "chain pieces do not meet", "chain");
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    end = other.end;
  }
  Chain reversed() const {
    Chain r(end);
    for (std::size_t t = steps.size(); t-- > 0;) {
      const StepDirection flipped = steps[t].direction == StepDirection::Forward
                                        ? StepDirection::Backward
                                        : StepDirection::Forward;
      r.step(steps[t].move, flipped, steps[t].current);
    }
    return r;
  }
};

Slots identities(std::size_t n) { return Slots(n, kId); }

// ------------------------------------------------------------ arity 2

// Both slots have constant parity, odd then even: phi = s o (alpha + beta).
void case_odd_even(Chain& c) {
  const OperadElementQ& phi = c.end;
  const QuasiAffine& f1 = phi.slot(1);
  const QuasiAffine& f2 = phi.slot(2);
  const QuasiAffine alpha = QuasiAffine::tabulate(
      f1.threshold(), f1.period(), [&](Nat i) { return (f1(i) + 1) / 2; });
  const QuasiAffine beta = QuasiAffine::tabulate(
      f2.threshold(), f2.period(), [&](Nat i) { return f2(i) / 2; });
  c.step({alpha, beta}, StepDirection::Backward, interleave());
}

// Slot k is replaced by  2i |-> f(i),  2i-1 |-> odd(i).
QuasiAffine spread(const QuasiAffine& f, Nat other_threshold, Nat other_period,
                   const std::function<Nat(Nat)>& odd) {
  const Nat period = 2 * f.period() * other_period;
  const Nat threshold = 2 * f.threshold() + other_threshold + 2;
  return QuasiAffine::tabulate(threshold, period, [&](Nat i) {
    return i % 2 == 0 ? f(i / 2) : odd((i + 1) / 2);
  });
}

void case_odd_odd(Chain& c) {
  const OperadElementQ phi = c.end;
  const QuasiAffine psi2 =
      spread(phi.slot(2), 0, 1, [](Nat i) { return 2 * i; });
  c.step({kId, kDPlus}, StepDirection::Backward, OperadElementQ({phi.slot(1), psi2}));
  c.step({kId, kDMinus}, StepDirection::Forward,
         OperadElementQ({phi.slot(1), kDPlus}));
  case_odd_even(c);
}

void case_even_even(Chain& c) {
  const OperadElementQ phi = c.end;
  const QuasiAffine psi1 =
      spread(phi.slot(1), 0, 1, [](Nat i) { return 2 * i - 1; });
  c.step({kDPlus, kId}, StepDirection::Backward, OperadElementQ({psi1, phi.slot(2)}));
  c.step({kDMinus, kId}, StepDirection::Forward,
         OperadElementQ({kDMinus, phi.slot(2)}));
  case_odd_even(c);
}

void case_even_odd(Chain& c) {
  const OperadElementQ phi = c.end;
  const QuasiAffine& f1 = phi.slot(1);
  const OperadElementQ theta = precompose_slots(phi, Slots{kDPlus, kDPlus});
  c.step({kDPlus, kDPlus}, StepDirection::Forward, theta);
  const QuasiAffine kappa2 = spread(theta.slot(2), f1.threshold(), f1.period(),
                                    [&](Nat i) { return f1(2 * i - 1); });
  const OperadElementQ kappa({theta.slot(1), kappa2});
  c.step({kId, kDPlus}, StepDirection::Backward, kappa);
  c.step({kId, kDMinus}, StepDirection::Forward,
         precompose_slots(kappa, Slots{kId, kDMinus}));
  case_even_even(c);
}

Chain to_interleave(const OperadElementQ& phi) {
  Chain c(phi);
  if (phi == interleave()) return c;
  Parity p1 = parity_of(phi.slot(1)), p2 = parity_of(phi.slot(2));
  if (p1 == Parity::Mixed || p2 == Parity::Mixed) {
    // i |-> 2L i + c with c past the threshold stays in one residue class
    // of the final piece, where the values step by an even amount.
    Slots move;
    for (const QuasiAffine& f : phi.slots())
      move.push_back(parity_of(f) == Parity::Mixed
                         ? QuasiAffine::affine(2 * f.period(), f.threshold() + 1)
                         : kId);
    c.step(move, StepDirection::Forward, precompose_slots(phi, move));
    p1 = parity_of(c.end.slot(1));
    p2 = parity_of(c.end.slot(2));
    if (p1 == Parity::Mixed || p2 == Parity::Mixed)
      fail(ErrorKind::SearchExhausted, "parity normalization failed", "parity");
  }
  if (p1 == Parity::Odd && p2 == Parity::Even) case_odd_even(c);
  else if (p1 == Parity::Even && p2 == Parity::Odd) case_even_odd(c);
  else if (p1 == Parity::Odd) case_odd_odd(c);
  else case_even_even(c);
  return c;
}

// ------------------------------------------------------------ arity n

Chain chain_free(const OperadElementQ& phi, const OperadElementQ& psi);

// Slots n-1 and n merged: odd indices to slot n-1, even to slot n.
OperadElementQ merge_last(const OperadElementQ& phi) {
  const std::size_t n = phi.arity();
  Slots slots(phi.slots().begin(), phi.slots().end() - 2);
  const QuasiAffine& a = phi.slot(n - 1);
  const QuasiAffine& b = phi.slot(n);
  slots.push_back(spread(b, 2 * a.threshold(), a.period(),
                         [&](Nat i) { return a(i); }));
  return OperadElementQ(std::move(slots));
}

// chi o (id + ... + id + s).
OperadElementQ split_last(const OperadElementQ& chi) {
  std::vector<OperadElementQ> psis(chi.arity() - 1, OperadElementQ({kId}));
  psis.push_back(interleave());
  return operad_compose(chi, psis);
}

// From split_last(chi) to split_last(chi o f).
Chain lift_step(const OperadElementQ& chi, const Slots& f) {
  const std::size_t n = chi.arity();  // the lifted arity is n + 1
  Chain c(split_last(chi));
  Slots outer(f.begin(), f.end() - 1);
  Slots first = outer;
  first.push_back(kId);
  first.push_back(kId);
  c.step(first, StepDirection::Forward, precompose_slots(c.end, first));

  const OperadElementQ s = interleave();
  const QuasiAffine& g = f.back();
  const Chain inner = chain_free(
      s, OperadElementQ({compose(g, s.slot(1)), compose(g, s.slot(2))}));
  auto lift = [&](const OperadElementQ& zeta) {
    Slots slots;
    for (std::size_t j = 1; j < n; ++j) slots.push_back(compose(chi.slot(j), f[j - 1]));
    slots.push_back(compose(chi.slot(n), zeta.slot(1)));
    slots.push_back(compose(chi.slot(n), zeta.slot(2)));
    return OperadElementQ(std::move(slots));
  };
  Chain lifted(lift(inner.start));
  for (std::size_t t = 0; t < inner.steps.size(); ++t) {
    const OperadElementQ& next =
        t + 1 < inner.steps.size() ? inner.steps[t + 1].current : inner.end;
    Slots move = identities(n - 1);
    move.push_back(inner.steps[t].move[0]);
    move.push_back(inner.steps[t].move[1]);
    lifted.step(move, inner.steps[t].direction, lift(next));
  }
  c.append(lifted);
  return c;
}

Chain chain_free(const OperadElementQ& phi, const OperadElementQ& psi) {
  if (phi == psi) return Chain(phi);
  if (phi.arity() == 2) {
    Chain c = to_interleave(phi);
    c.append(to_interleave(psi).reversed());
    return c;
  }
  const Chain sub = chain_free(merge_last(phi), merge_last(psi));
  Chain c(split_last(sub.start));
  for (std::size_t t = 0; t < sub.steps.size(); ++t) {
    const CertStep& st = sub.steps[t];
    const OperadElementQ& next =
        t + 1 < sub.steps.size() ? sub.steps[t + 1].current : sub.end;
    if (st.direction == StepDirection::Forward)
      c.append(lift_step(st.current, st.move));
    else
      c.append(lift_step(next, st.move).reversed());
  }
  return c;
}

}  // namespace

OperadElementQ interleave() {
  return OperadElementQ({kDMinus, kDPlus});
}

OperadElementQ extend_agreeing(const OperadElementQ& phi,
                               const std::vector<NatSet>& constraints,
                               const OperadElementQ& free_part) {
  const std::size_t n = phi.arity();
  if (free_part.arity() != n || constraints.size() != n)
    fail(ErrorKind::ArityMismatch, "arity mismatch", "arity");
  NatSet p;
  for (std::size_t i = 0; i < n; ++i)
    for (Nat a : constraints[i]) p.insert(phi.slot(i + 1)(a));
  const QuasiAffine e = order_embed_avoiding(p);
  const Nat max_p = max_of(p);
  std::vector<QuasiAffine> slots;
  for (std::size_t i = 0; i < n; ++i) {
    const NatSet& a = constraints[i];
    const QuasiAffine& g = free_part.slot(i + 1);
    const Nat threshold = max_of(a) + static_cast<Nat>(a.size()) +
                          g.threshold() + g.period() * (max_p + 2);
    slots.push_back(QuasiAffine::tabulate(threshold, g.period(), [&](Nat v) {
      if (a.count(v)) return phi.slot(i + 1)(v);
      return e(g(v - count_below(a, v)));
    }));
  }
  return OperadElementQ(std::move(slots));
}

Certificate agreeing_chain(const OperadElementQ& phi, const OperadElementQ& psi,
                           const std::vector<NatSet>& constraints) {
  const std::size_t n = phi.arity();
  if (psi.arity() != n || constraints.size() != n)
    fail(ErrorKind::ArityMismatch,
         "arities " + std::to_string(n) + ", " + std::to_string(psi.arity()) +
             " and " + std::to_string(constraints.size()) + " constraint sets",
         "arity");
  if (n < 2)
    fail(ErrorKind::PreconditionViolated, "arity must be at least 2", "arity",
         std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (Nat a : constraints[i]) {
      if (a < 1)
        fail(ErrorKind::PreconditionViolated, "constraint values are positive",
             "positive", std::to_string(a));
      if (phi.slot(i + 1)(a) != psi.slot(i + 1)(a))
        fail(ErrorKind::PreconditionViolated,
             "the elements differ at (" + std::to_string(i + 1) + ", " +
                 std::to_string(a) + ")",
             "agree", std::to_string(i + 1) + "," + std::to_string(a));
    }

  Certificate cert;
  cert.n = n;
  cert.constraints = constraints;
  cert.source = phi;
  cert.target = psi;
  if (phi == psi) return cert;

  // Conjugate away the constraints: c_i : omega -> omega \ A_i and
  // e : omega -> omega \ P with P the union of the phi(i, A_i).
  NatSet p;
  for (std::size_t i = 0; i < n; ++i)
    for (Nat a : constraints[i]) p.insert(phi.slot(i + 1)(a));
  const Nat max_p = max_of(p);
  std::vector<QuasiAffine> c;
  for (const NatSet& a : constraints) c.push_back(order_embed_avoiding(a));

  auto reduce = [&](const OperadElementQ& chi) {
    Slots slots;
    for (std::size_t i = 0; i < n; ++i) {
      const QuasiAffine h = compose(chi.slot(i + 1), c[i]);
      slots.push_back(QuasiAffine::tabulate(
          h.threshold() + h.period() * (max_p + 1), h.period(), [&](Nat k) {
            const Nat v = h(k);
            return v - count_below(p, v);
          }));
    }
    return OperadElementQ(std::move(slots));
  };
  auto lift = [&](const OperadElementQ& chi) {
    return extend_agreeing(phi, constraints, chi);
  };
  auto patch = [&](const Slots& move) {
    Slots out;
    for (std::size_t i = 0; i < n; ++i) {
      const NatSet& a = constraints[i];
      const QuasiAffine& g = move[i];
      const Nat threshold = max_of(a) + static_cast<Nat>(a.size()) +
                            g.threshold() + g.period() * (max_of(a) + 2);
      out.push_back(QuasiAffine::tabulate(threshold, g.period(), [&](Nat v) {
        if (a.count(v)) return v;
        return c[i](g(v - count_below(a, v)));
      }));
    }
    return out;
  };

  const bool free = std::all_of(constraints.begin(), constraints.end(),
                                [](const NatSet& a) { return a.empty(); });
  if (free) {
    cert.chain = chain_free(phi, psi).steps;
  } else {
    const Chain sub = chain_free(reduce(phi), reduce(psi));
    for (const CertStep& st : sub.steps)
      cert.chain.push_back(CertStep{lift(st.current), patch(st.move), st.direction});
  }
  const Verification v = verify_certificate(cert);
  if (!v.ok)
    fail(ErrorKind::SearchExhausted,
         "constructed chain fails at step " + std::to_string(v.failing_step) +
             ": " + v.reason,
         "chain", std::to_string(v.failing_step));
  return cert;
}

Verification verify_certificate(const Certificate& c) {
  auto reject = [](int step, std::string reason) {
    return Verification{false, step, std::move(reason)};
  };
  const std::size_t n = c.n;
  if (c.constraints.size() != n || c.source.arity() != n || c.target.arity() != n)
    return reject(0, "arity mismatch");
  if (c.chain.empty())
    return c.source == c.target ? Verification{}
                                : reject(0, "empty chain between distinct endpoints");
  if (!(c.chain.front().current == c.source))
    return reject(0, "chain does not start at the source");
  for (std::size_t t = 0; t < c.chain.size(); ++t) {
    const CertStep& st = c.chain[t];
    const int at = static_cast<int>(t);
    if (st.current.arity() != n || st.move.size() != n)
      return reject(at, "arity mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (Nat a : c.constraints[i])
        if (st.move[i](a) != a)
          return reject(at, "move slot " + std::to_string(i + 1) +
                                " does not fix " + std::to_string(a));
    const OperadElementQ& next =
        t + 1 < c.chain.size() ? c.chain[t + 1].current : c.target;
    try {
      const bool holds = st.direction == StepDirection::Forward
                             ? precompose_slots(st.current, st.move) == next
                             : precompose_slots(next, st.move) == st.current;
      if (!holds) return reject(at, "slot identity fails");
    } catch (const Error& e) {
      return reject(at, e.what());
    }
  }
  return Verification{};
}

}  // namespace tame
