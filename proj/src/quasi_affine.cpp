#include <algorithm>
#include <numeric>
#include <sstream>

#include "tame/inj.hpp"

namespace tame {

namespace {

Nat floor_mod(Nat a, Nat m) {
  Nat r = a % m;
  return r < 0 ? r + m : r;
}

// Smallest i > threshold with i = r mod period.
Nat first_in_class(Nat threshold, Nat period, Nat r) {
  return threshold + 1 + floor_mod(r - (threshold + 1), period);
}

bool progressions_meet(std::pair<Nat, Nat> x, std::pair<Nat, Nat> y) {
  // Both progressions are infinite upwards, so a common residue modulo the
  // gcd of the steps yields infinitely many common values.
  Nat g = std::gcd(x.second, y.second);
  return floor_mod(x.first - y.first, g) == 0;
}

}  // namespace

QuasiAffine::QuasiAffine() : threshold_(0), period_(1), rules_{{1, 0}} {}

QuasiAffine::QuasiAffine(Nat threshold, Nat period, std::vector<Nat> prefix,
                         std::vector<Rule> rules)
    : threshold_(threshold),
      period_(period),
      prefix_(std::move(prefix)),
      rules_(std::move(rules)) {}

Nat QuasiAffine::tail_value(Nat i) const {
  const Rule& r = rules_[static_cast<std::size_t>(floor_mod(i, period_))];
  return (r.p * i + r.q) / period_;
}

Nat QuasiAffine::operator()(Nat i) const {
  if (i < 1)
    fail(ErrorKind::IndexOutOfRange,
         "injections are evaluated on positive naturals, got " +
             std::to_string(i));
  if (i <= threshold_) return prefix_[static_cast<std::size_t>(i - 1)];
  return tail_value(i);
}

void QuasiAffine::normalize() {
  for (Nat d = 1; d < period_; ++d) {
    if (period_ % d != 0) continue;
    bool ok = true;
    for (Nat r = 0; r < period_ && ok; ++r) {
      const Rule& x = rules_[static_cast<std::size_t>(r)];
      const Rule& y = rules_[static_cast<std::size_t>(r % d)];
      ok = x == y && (x.p * d) % period_ == 0 && (x.q * d) % period_ == 0;
    }
    if (!ok) continue;
    std::vector<Rule> coarse(static_cast<std::size_t>(d));
    for (Nat r = 0; r < d; ++r) {
      const Rule& x = rules_[static_cast<std::size_t>(r)];
      coarse[static_cast<std::size_t>(r)] = {x.p * d / period_,
                                             x.q * d / period_};
    }
    rules_ = std::move(coarse);
    period_ = d;
    break;
  }
  while (threshold_ > 0) {
    const Rule& r =
        rules_[static_cast<std::size_t>(floor_mod(threshold_, period_))];
    Nat num = r.p * threshold_ + r.q;
    if (num % period_ != 0 || num / period_ != prefix_.back()) break;
    prefix_.pop_back();
    --threshold_;
  }
}

QuasiAffine::Image QuasiAffine::image() const {
  Image im;
  im.points = prefix_;
  for (Nat r = 0; r < period_; ++r) {
    Nat i1 = first_in_class(threshold_, period_, r);
    im.progressions.emplace_back(tail_value(i1),
                                 rules_[static_cast<std::size_t>(r)].p);
  }
  return im;
}

bool QuasiAffine::Image::contains(Nat v) const {
  if (std::find(points.begin(), points.end(), v) != points.end()) return true;
  for (auto [start, step] : progressions)
    if (v >= start && (v - start) % step == 0) return true;
  return false;
}

void QuasiAffine::validate() const {
  NatSet seen;
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    Nat v = prefix_[k];
    if (v < 1)
      fail(ErrorKind::NotInjective, "value below 1", "positive",
           std::to_string(k + 1));
    if (!seen.insert(v).second)
      fail(ErrorKind::NotInjective, "repeated value " + std::to_string(v),
           "injective", std::to_string(k + 1));
  }
  Image im = image();
  for (Nat r = 0; r < period_; ++r) {
    auto [start, step] = im.progressions[static_cast<std::size_t>(r)];
    std::string where =
        std::to_string(first_in_class(threshold_, period_, r));
    if (step < 1)
      fail(ErrorKind::NotInjective, "non-increasing residue class",
           "injective", where);
    if (start < 1)
      fail(ErrorKind::NotInjective, "value below 1", "positive", where);
    for (Nat v : prefix_)
      if (v >= start && (v - start) % step == 0)
        fail(ErrorKind::NotInjective,
             "value " + std::to_string(v) + " taken twice", "injective",
             where);
    for (Nat s = 0; s < r; ++s)
      if (progressions_meet(im.progressions[static_cast<std::size_t>(s)],
                            im.progressions[static_cast<std::size_t>(r)]))
        fail(ErrorKind::NotInjective, "residue classes overlap", "injective",
             where);
  }
}

QuasiAffine QuasiAffine::tabulate(Nat threshold, Nat period,
                                  const std::function<Nat(Nat)>& fn) {
  if (threshold < 0 || period < 1)
    fail(ErrorKind::PreconditionViolated, "bad threshold or period");
  std::vector<Nat> prefix;
  prefix.reserve(static_cast<std::size_t>(threshold));
  for (Nat i = 1; i <= threshold; ++i) prefix.push_back(fn(i));
  std::vector<Rule> rules(static_cast<std::size_t>(period));
  for (Nat r = 0; r < period; ++r) {
    Nat i1 = first_in_class(threshold, period, r);
    Nat v1 = fn(i1);
    Nat d = fn(i1 + period) - v1;
    Rule rule{d, v1 * period - d * i1};
    for (Nat k = 2; k <= 3; ++k) {
      Nat i = i1 + k * period;
      if ((rule.p * i + rule.q) != fn(i) * period)
        fail(ErrorKind::PreconditionViolated,
             "function is not affine on its residue class", "affine",
             std::to_string(i));
    }
    rules[static_cast<std::size_t>(r)] = rule;
  }
  QuasiAffine f(threshold, period, std::move(prefix), std::move(rules));
  f.normalize();
  f.validate();
  return f;
}

QuasiAffine QuasiAffine::affine(Nat a, Nat b) {
  return tabulate(0, 1, [=](Nat i) { return a * i + b; });
}

QuasiAffine QuasiAffine::from_pieces(const std::vector<QaPiece>& pieces) {
  if (pieces.empty())
    fail(ErrorKind::NotCovering, "no pieces", "covering", "1");
  Nat high = 0;
  Nat period = 1;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const QaPiece& p = pieces[k];
    std::string where = "piece " + std::to_string(k);
    if (p.mod < 1 || p.res < 0 || p.res >= p.mod || p.div < 1 || p.lo < 1 ||
        (p.hi && *p.hi < p.lo))
      fail(ErrorKind::NotCovering, "malformed piece", "piece", where);
    if (p.a < 1)
      fail(ErrorKind::NotInjective, "piece slope below 1", "slope", where);
    high = std::max(high, p.hi ? *p.hi : p.lo);
    period = std::lcm(period, std::lcm(p.mod, p.div));
  }
  auto matching = [&](Nat i) -> const QaPiece& {
    const QaPiece* hit = nullptr;
    for (const QaPiece& p : pieces) {
      if (i < p.lo || (p.hi && i > *p.hi) || floor_mod(i, p.mod) != p.res)
        continue;
      if (hit)
        fail(ErrorKind::NotCovering, "pieces overlap at " + std::to_string(i),
             "covering", std::to_string(i));
      hit = &p;
    }
    if (!hit)
      fail(ErrorKind::NotCovering, "no piece covers " + std::to_string(i),
           "covering", std::to_string(i));
    return *hit;
  };
  // Beyond `high` only unbounded pieces remain and the pattern repeats with
  // the period, so two periods past it decide covering and integrality.
  for (Nat i = 1; i <= high + 2 * period; ++i) {
    const QaPiece& p = matching(i);
    Nat num = p.a * i + p.b;
    if (num % p.div != 0)
      fail(ErrorKind::NotCovering, "non-integral value", "integral",
           std::to_string(i));
    if (num / p.div < 1)
      fail(ErrorKind::NotInjective, "value below 1", "positive",
           std::to_string(i));
  }
  return tabulate(high, period, [&](Nat i) {
    const QaPiece& p = matching(i);
    return (p.a * i + p.b) / p.div;
  });
}

std::vector<QaPiece> QuasiAffine::pieces() const {
  std::vector<QaPiece> out;
  Nat i = 1;
  while (i <= threshold_) {
    Nat start = i;
    Nat v = prefix_[static_cast<std::size_t>(i - 1)];
    Nat d = 1;
    if (i < threshold_) {
      Nat step = prefix_[static_cast<std::size_t>(i)] - v;
      if (step >= 1) {
        d = step;
        while (i < threshold_ &&
               prefix_[static_cast<std::size_t>(i)] -
                       prefix_[static_cast<std::size_t>(i - 1)] ==
                   d)
          ++i;
      }
    }
    out.push_back({start, i, 1, 0, d, v - d * start, 1});
    ++i;
  }
  // Residue classes sharing one rule merge into a coarser class when they
  // fill it completely.
  std::vector<bool> done(static_cast<std::size_t>(period_), false);
  for (Nat r = 0; r < period_; ++r) {
    if (done[static_cast<std::size_t>(r)]) continue;
    const Rule& rule = rules_[static_cast<std::size_t>(r)];
    Nat mod = period_;
    for (Nat d = 1; d < period_; ++d) {
      if (period_ % d != 0) continue;
      bool same = true;
      for (Nat s = r % d; s < period_ && same; s += d)
        same = !done[static_cast<std::size_t>(s)] &&
               rules_[static_cast<std::size_t>(s)] == rule;
      if (same) {
        mod = d;
        break;
      }
    }
    for (Nat s = r % mod; s < period_; s += mod)
      done[static_cast<std::size_t>(s)] = true;
    Nat g = std::gcd(rule.p, std::gcd(rule.q, period_));
    out.push_back({threshold_ + 1, std::nullopt, mod, r % mod, rule.p / g,
                   rule.q / g, period_ / g});
  }
  return out;
}

PartialInjection QuasiAffine::restrict_to(const NatSet& s) const {
  std::map<Nat, Nat> m;
  for (Nat a : s) m.emplace(a, (*this)(a));
  return PartialInjection(std::move(m));
}

QuasiAffine compose(const QuasiAffine& outer, const QuasiAffine& inner) {
  // Past this threshold inner is on its tail and lands past outer's
  // threshold, and inner maps classes mod the product period into single
  // classes mod outer's period.
  Nat period = outer.period() * inner.period();
  Nat threshold =
      inner.threshold() + inner.period() * (outer.threshold() + 1);
  return QuasiAffine::tabulate(threshold, period,
                               [&](Nat i) { return outer(inner(i)); });
}

QuasiAffine order_embed_avoiding(const NatSet& avoid) {
  if (avoid.empty()) return QuasiAffine::identity();
  Nat top = *avoid.rbegin();
  Nat count = static_cast<Nat>(avoid.size());
  std::vector<Nat> low;  // elements of omega \ avoid below top
  for (Nat v = 1; v < top; ++v)
    if (!avoid.count(v)) low.push_back(v);
  Nat nlow = static_cast<Nat>(low.size());
  return QuasiAffine::tabulate(top, 1, [&](Nat i) {
    return i <= nlow ? low[static_cast<std::size_t>(i - 1)] : i + count;
  });
}

QuasiAffine complete(const PartialInjection& f) {
  if (f.empty()) return QuasiAffine::identity();
  NatSet keys = f.keys();
  QuasiAffine rest = order_embed_avoiding(f.image());
  Nat top = std::max(*keys.rbegin(), *f.image().rbegin());
  Nat threshold = top + static_cast<Nat>(keys.size());
  return QuasiAffine::tabulate(threshold, 1, [&](Nat i) {
    if (f.defined_at(i)) return f(i);
    Nat below = static_cast<Nat>(
        std::distance(keys.begin(), keys.lower_bound(i)));
    return rest(i - below);
  });
}

bool images_disjoint(const QuasiAffine& f, const QuasiAffine& g) {
  QuasiAffine::Image a = f.image();
  QuasiAffine::Image b = g.image();
  for (Nat v : a.points)
    if (b.contains(v)) return false;
  for (Nat v : b.points)
    if (a.contains(v)) return false;
  for (auto& x : a.progressions)
    for (auto& y : b.progressions)
      if (progressions_meet(x, y)) return false;
  return true;
}

std::string to_string(const QuasiAffine& f) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const QaPiece& p : f.pieces()) {
    if (!first) os << "; ";
    first = false;
    os << p.lo << "..";
    if (p.hi)
      os << *p.hi;
    else
      os << "inf";
    if (p.mod > 1) os << " (=" << p.res << " mod " << p.mod << ')';
    os << ": (" << p.a << "i";
    if (p.b >= 0)
      os << '+' << p.b;
    else
      os << p.b;
    os << ')';
    if (p.div > 1) os << '/' << p.div;
  }
  os << ']';
  return os.str();
}

}  // namespace tame
