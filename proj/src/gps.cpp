#include "gpsa/gps.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace gpsa {

GpsAutomaton::GpsAutomaton(Dfao machine) {
  require(machine.alphabet.radix, Err::AlphabetMismatch,
          "generalized series need a radix alphabet");
  require(machine.semantics == Semantics::MsdRadix, Err::SemanticsMismatch,
          "generalized series need msd-radix semantics");
  require(machine.alphabet.base == machine.field->p(), Err::AlphabetMismatch,
          "digit base must equal the field characteristic");
  machine_ = minimize(zero_normalize(machine, ZeroMode::CanonicalZero));
  machine_.validate();
}

GpsAutomaton GpsAutomaton::zero(const FieldPtr& field) {
  Dfao a;
  a.field = field;
  a.alphabet = Alphabet{field->p(), true};
  a.semantics = Semantics::MsdRadix;
  a.initial = 0;
  a.outputs = {0};
  a.transitions.assign(a.alphabet.size(), 0);
  return GpsAutomaton(std::move(a));
}

uint32_t GpsAutomaton::coeff_raw(const PAdicRational& r) const {
  CanonicalString s = canon_string(r, p());
  std::vector<uint32_t> syms;
  syms.reserve(s.intpart.size() + 1 + s.fracpart.size());
  for (uint32_t d : s.intpart) syms.push_back(d);
  syms.push_back(machine_.alphabet.dot());
  for (uint32_t d : s.fracpart) syms.push_back(d);
  return machine_.run_raw(syms);
}

FieldElem GpsAutomaton::coeff(const PAdicRational& r) const {
  return FieldElem(field(), coeff_raw(r));
}

SupportEnum support_enum(const GpsAutomaton& x, const Rational& bound, size_t max_count,
                         size_t step_budget) {
  require(max_count > 0 && step_budget > 0, Err::Domain, "positive limits required");
  const Dfao& m = x.machine();
  uint32_t p = x.p();
  std::vector<bool> live = live_states(m);
  SupportEnum out;
  size_t steps = 0;

  // fractional node: value n + fracnum / p^depth
  struct Node {
    BigInt fracnum;
    uint32_t depth;
    uint32_t state;
  };
  struct Cmp {
    uint32_t p;
    bool operator()(const Node& a, const Node& b) const {
      // min-heap: smaller value first, then shorter string
      BigInt lhs = a.fracnum, rhs = b.fracnum;
      uint32_t d = std::max(a.depth, b.depth);
      for (uint32_t i = a.depth; i < d; ++i) lhs *= p;
      for (uint32_t i = b.depth; i < d; ++i) rhs *= p;
      if (lhs != rhs) return lhs > rhs;
      return a.depth > b.depth;
    }
  };

  BigInt intmax = bound.num / bound.den;  // floor
  for (BigInt n = 0; n <= intmax; ++n) {
    if (out.exponents.size() >= max_count) return out;
    // state after the canonical integer digits and the radix point
    uint32_t s = m.initial;
    {
      CanonicalString cs = canon_string(PAdicRational::from_integer(n), p);
      for (uint32_t d : cs.intpart) s = m.step(s, d);
      s = m.step(s, m.alphabet.dot());
    }
    if (!live[s]) continue;
    std::priority_queue<Node, std::vector<Node>, Cmp> heap(Cmp{p});
    heap.push(Node{0, 0, s});
    while (!heap.empty()) {
      if (out.exponents.size() >= max_count) return out;
      if (++steps > step_budget) {
        out.steps_used = steps;
        return out;  // incomplete
      }
      Node node = heap.top();
      heap.pop();
      PAdicRational value = padic_add(PAdicRational::from_integer(n),
                                      PAdicRational::make(node.fracnum, node.depth, p), p);
      // all descendants dominate this value; prune the subtree at the bound
      if (!(Rational::from_padic(value, p) < bound)) continue;
      bool canonical = node.depth == 0 || node.fracnum % p != 0;
      if (canonical && m.outputs[node.state] != 0) out.exponents.push_back(value);
      for (uint32_t d = 0; d < p; ++d) {
        uint32_t t = m.step(node.state, d);
        if (!live[t]) continue;
        heap.push(Node{node.fracnum * p + d, node.depth + 1, t});
      }
    }
  }
  out.complete = true;
  out.steps_used = steps;
  return out;
}

GpsAutomaton gps_add(const GpsAutomaton& a, const GpsAutomaton& b) {
  return GpsAutomaton(product(a.machine(), b.machine(), Combine::Add));
}

GpsAutomaton frobenius_power(const GpsAutomaton& x, uint32_t i) {
  Dfao m = x.machine();
  const Field& f = *m.field;
  for (uint32_t& o : m.outputs) o = f.frobenius_iter(o, static_cast<uint64_t>(i) * f.e());
  return GpsAutomaton(std::move(m));
}

namespace {

// new initial state that ignores leading integer zeros
Dfao leading_zero_tolerant(const Dfao& a) {
  Dfao b = a;
  uint32_t fresh = a.state_count();
  uint32_t nsym = a.alphabet.size();
  b.outputs.push_back(a.outputs[a.initial]);
  for (uint32_t sym = 0; sym < nsym; ++sym)
    b.transitions.push_back(sym == 0 ? fresh : a.step(a.initial, sym));
  b.initial = fresh;
  return b;
}

}  // namespace

GpsAutomaton exponent_scale_pk(const GpsAutomaton& x, int32_t k) {
  if (k == 0) return x;
  const FieldPtr& field = x.field();
  uint32_t p = x.p();
  uint32_t dot = x.machine().alphabet.dot();

  if (k > 0) {
    // feed the inner machine the input with its radix point moved k left
    Dfao inner = radix_pad_invariant(x.machine());
    uint32_t kk = static_cast<uint32_t>(k);
    struct Key {
      uint32_t state;
      std::vector<uint32_t> buf;
      bool frac;
      bool operator<(const Key& o) const {
        return std::tie(state, frac, buf) < std::tie(o.state, o.frac, o.buf);
      }
    };
    std::map<Key, uint32_t> index;
    std::vector<Key> states;
    auto intern = [&](Key key) {
      auto [it, inserted] = index.try_emplace(key, static_cast<uint32_t>(states.size()));
      if (inserted) states.push_back(std::move(key));
      return it->second;
    };
    Dfao out;
    out.field = field;
    out.alphabet = x.machine().alphabet;
    out.semantics = Semantics::MsdRadix;
    out.initial = intern(Key{inner.initial, {}, false});
    for (uint32_t i = 0; i < states.size(); ++i) {
      Key cur = states[i];
      out.outputs.push_back(cur.frac ? inner.outputs[cur.state] : 0);
      for (uint32_t sym = 0; sym < out.alphabet.size(); ++sym) {
        Key next{};
        if (cur.frac) {
          next = Key{inner.step(cur.state, sym), {}, true};
        } else if (sym == dot) {
          uint32_t s = inner.step(cur.state, dot);
          for (size_t z = cur.buf.size(); z < kk; ++z) s = inner.step(s, 0);
          for (uint32_t d : cur.buf) s = inner.step(s, d);
          next = Key{s, {}, true};
        } else if (cur.buf.size() < kk) {
          std::vector<uint32_t> buf = cur.buf;
          buf.push_back(sym);
          next = Key{cur.state, std::move(buf), false};
        } else {
          std::vector<uint32_t> buf(cur.buf.begin() + 1, cur.buf.end());
          buf.push_back(sym);
          next = Key{inner.step(cur.state, cur.buf[0]), std::move(buf), false};
        }
        out.transitions.push_back(intern(std::move(next)));
      }
    }
    return GpsAutomaton(std::move(out));
  }

  // k < 0: move the radix point right by |k|, borrowing fractional digits
  uint32_t kk = static_cast<uint32_t>(-k);
  Dfao inner = radix_pad_invariant(leading_zero_tolerant(x.machine()));
  // phases: 0 = int passthrough, 1 = delay (count in aux), 2 = frac passthrough
  struct Key {
    uint32_t state;
    uint32_t phase;
    uint32_t count;
    bool operator<(const Key& o) const {
      return std::tie(state, phase, count) < std::tie(o.state, o.phase, o.count);
    }
  };
  std::map<Key, uint32_t> index;
  std::vector<Key> states;
  auto intern = [&](Key key) {
    auto [it, inserted] = index.try_emplace(key, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back(key);
    return it->second;
  };
  Dfao out;
  out.field = field;
  out.alphabet = x.machine().alphabet;
  out.semantics = Semantics::MsdRadix;
  out.initial = intern(Key{inner.initial, 0, 0});
  // a dedicated dead state for malformed inputs
  auto dead_key = Key{UINT32_MAX, 3, 0};
  for (uint32_t i = 0; i < states.size(); ++i) {
    Key cur = states[i];
    uint32_t output = 0;
    if (cur.phase == 1) {
      uint32_t s = cur.state;
      for (uint32_t z = cur.count; z < kk; ++z) s = inner.step(s, 0);
      s = inner.step(s, dot);
      output = inner.outputs[s];
    } else if (cur.phase == 2) {
      output = inner.outputs[cur.state];
    }
    out.outputs.push_back(output);
    for (uint32_t sym = 0; sym < out.alphabet.size(); ++sym) {
      Key next{};
      if (cur.phase == 3) {
        next = dead_key;
      } else if (cur.phase == 0) {
        next = sym == dot ? Key{cur.state, 1, 0} : Key{inner.step(cur.state, sym), 0, 0};
      } else if (cur.phase == 1) {
        if (sym == dot) {
          next = dead_key;
        } else {
          uint32_t s = inner.step(cur.state, sym);
          next = cur.count + 1 == kk ? Key{inner.step(s, dot), 2, 0} : Key{s, 1, cur.count + 1};
        }
      } else {
        next = sym == dot ? dead_key : Key{inner.step(cur.state, sym), 2, 0};
      }
      out.transitions.push_back(intern(next));
    }
  }
  return GpsAutomaton(std::move(out));
}

FracSupportCheck check_support_fractional(const GpsAutomaton& z) {
  const Dfao& m = z.machine();
  uint32_t p = z.p();
  uint32_t dot = m.alphabet.dot();
  std::vector<bool> live = live_states(m);
  // states reachable by at least one integer digit, tracked with a shortest
  // canonical digit path
  std::map<uint32_t, std::vector<uint32_t>> path;
  std::deque<uint32_t> queue;
  for (uint32_t d = 1; d < p; ++d) {
    uint32_t s = m.step(m.initial, d);
    if (!path.count(s)) {
      path[s] = {d};
      queue.push_back(s);
    }
  }
  FracSupportCheck out;
  while (!queue.empty()) {
    uint32_t s = queue.front();
    queue.pop_front();
    uint32_t after_dot = m.step(s, dot);
    if (live[after_dot]) {
      // nonzero coefficient at an exponent >= 1: assemble a witness
      std::vector<uint32_t> frac;
      uint32_t cur = after_dot;
      while (m.outputs[cur] == 0) {
        for (uint32_t d = 0; d < p; ++d) {
          uint32_t t = m.step(cur, d);
          if (live[t]) {
            frac.push_back(d);
            cur = t;
            break;
          }
        }
      }
      CanonicalString cs;
      cs.intpart = path[s];
      cs.fracpart = frac;
      while (!cs.fracpart.empty() && cs.fracpart.back() == 0) cs.fracpart.pop_back();
      out.ok = false;
      out.witness = from_canonical(cs, p);
      return out;
    }
    for (uint32_t d = 0; d < p; ++d) {
      uint32_t t = m.step(s, d);
      if (!path.count(t)) {
        std::vector<uint32_t> pt = path[s];
        pt.push_back(d);
        path[t] = std::move(pt);
        queue.push_back(t);
      }
    }
  }
  out.ok = true;
  return out;
}

GpsAutomaton mul_int_frac(const Dfao& c, const GpsAutomaton& z) {
  require(c.semantics == Semantics::MsdInteger, Err::SemanticsMismatch,
          "integer factor must be an MSD-integer machine");
  require(!c.alphabet.radix, Err::AlphabetMismatch, "integer factor reads plain digits");
  require(c.field->same(*z.field()), Err::ConfigMismatch, "factors over different fields");
  require(c.alphabet.base == z.p(), Err::AlphabetMismatch, "digit bases differ");
  FracSupportCheck chk = check_support_fractional(z);
  if (!chk.ok) {
    fail(Err::Precondition,
         "fractional factor has support at exponent " +
             exponent_str(*chk.witness, z.p()) + " >= 1");
  }
  const Dfao& zm = z.machine();
  const Field& f = *c.field;
  uint32_t p = z.p();
  uint32_t dot = zm.alphabet.dot();
  // int phase: c-state; frac phase: (z-state, multiplier)
  struct Key {
    uint32_t state;
    uint32_t mult;
    bool frac;
    bool operator<(const Key& o) const {
      return std::tie(frac, state, mult) < std::tie(o.frac, o.state, o.mult);
    }
  };
  std::map<Key, uint32_t> index;
  std::vector<Key> states;
  auto intern = [&](Key key) {
    auto [it, inserted] = index.try_emplace(key, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back(key);
    return it->second;
  };
  Dfao out;
  out.field = c.field;
  out.alphabet = zm.alphabet;
  out.semantics = Semantics::MsdRadix;
  out.initial = intern(Key{c.initial, 0, false});
  for (uint32_t i = 0; i < states.size(); ++i) {
    Key cur = states[i];
    out.outputs.push_back(cur.frac ? f.mul(cur.mult, zm.outputs[cur.state]) : 0);
    for (uint32_t sym = 0; sym <= p; ++sym) {
      Key next{};
      if (!cur.frac) {
        if (sym == dot)
          next = Key{zm.step(zm.initial, dot), c.outputs[cur.state], true};
        else
          next = Key{c.step(cur.state, sym), 0, false};
      } else {
        next = Key{zm.step(cur.state, sym), cur.mult, true};
      }
      out.transitions.push_back(intern(next));
    }
  }
  return GpsAutomaton(std::move(out));
}

OreSampleReport verify_ore_pointwise(const GpsAutomaton& x, const OreForm& form,
                                     const std::vector<PAdicRational>& samples) {
  const Field& f = *x.field();
  uint32_t p = x.p();
  uint32_t q = f.q();
  OreSampleReport report;
  for (const PAdicRational& e : samples) {
    uint32_t acc = 0;
    for (const auto& [i, ai] : form.terms) {
      if (ai.is_zero()) continue;
      for (size_t kexp = 0; kexp < ai.coeffs().size(); ++kexp) {
        uint32_t ak = ai.coeffs()[kexp];
        if (ak == 0) continue;
        PAdicRational kval = PAdicRational::from_integer(BigInt(kexp));
        if (padic_compare(e, kval, p) < 0) continue;
        PAdicRational idx = padic_div_qi(padic_sub(e, kval, p), q, i, p);
        uint32_t coeff = x.coeff_raw(idx);
        acc = f.add(acc, f.mul(ak, f.q_power(coeff, i)));
      }
    }
    if (e.is_integer() && e.num <= 4096) {
      size_t k = static_cast<size_t>(e.num);
      acc = f.add(acc, k < form.g.coeffs().size() ? form.g.coeffs()[k] : 0);
    }
    report.rows.push_back(OreSampleRow{e, acc});
    if (acc != 0) report.all_zero = false;
  }
  return report;
}

std::vector<DecomposedPair> decompose(const GpsAutomaton& x) {
  const Dfao& m = x.machine();
  const FieldPtr& field = x.field();
  uint32_t p = x.p();
  uint32_t dot = m.alphabet.dot();

  // states reachable by integer digits only (including none)
  std::vector<bool> intreach(m.state_count(), false);
  std::deque<uint32_t> queue{m.initial};
  intreach[m.initial] = true;
  while (!queue.empty()) {
    uint32_t s = queue.front();
    queue.pop_front();
    for (uint32_t d = 0; d < p; ++d) {
      uint32_t t = m.step(s, d);
      if (!intreach[t]) {
        intreach[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<uint32_t> dot_states;
  for (uint32_t s = 0; s < m.state_count(); ++s) {
    if (!intreach[s]) continue;
    uint32_t ds = m.step(s, dot);
    if (std::find(dot_states.begin(), dot_states.end(), ds) == dot_states.end())
      dot_states.push_back(ds);
  }

  std::vector<bool> live = live_states(m);
  std::vector<DecomposedPair> pairs;
  for (uint32_t ds : dot_states) {
    if (!live[ds]) continue;  // contributes the zero series
    // fractional series rooted at ds
    Dfao zd;
    zd.field = field;
    zd.alphabet = m.alphabet;
    zd.semantics = Semantics::MsdRadix;
    uint32_t fresh = m.state_count(), dead = m.state_count() + 1;
    zd.initial = fresh;
    zd.outputs = m.outputs;
    zd.outputs.push_back(0);  // fresh
    zd.outputs.push_back(0);  // dead
    zd.transitions = m.transitions;
    zd.transitions.resize(static_cast<size_t>(m.state_count() + 2) * m.alphabet.size());
    for (uint32_t sym = 0; sym < m.alphabet.size(); ++sym) {
      zd.transitions[fresh * m.alphabet.size() + sym] = sym == dot ? ds : dead;
      zd.transitions[dead * m.alphabet.size() + sym] = dead;
    }
    // indicator of { n : state after canonical digits of n, then '.', is ds }
    Dfao ind;
    ind.field = field;
    ind.alphabet = Alphabet{p, false};
    ind.semantics = Semantics::MsdInteger;
    ind.initial = m.initial;
    ind.outputs.resize(m.state_count());
    for (uint32_t s = 0; s < m.state_count(); ++s)
      ind.outputs[s] = m.step(s, dot) == ds ? 1 : 0;
    ind.transitions.resize(static_cast<size_t>(m.state_count()) * p);
    for (uint32_t s = 0; s < m.state_count(); ++s)
      for (uint32_t d = 0; d < p; ++d) ind.transitions[s * p + d] = m.step(s, d);
    pairs.push_back(DecomposedPair{minimize(ind), GpsAutomaton(std::move(zd))});
  }
  if (pairs.empty()) {
    // the zero series decomposes as one pair with a zero indicator
    Dfao ind;
    ind.field = field;
    ind.alphabet = Alphabet{p, false};
    ind.semantics = Semantics::MsdInteger;
    ind.initial = 0;
    ind.outputs = {0};
    ind.transitions.assign(p, 0);
    pairs.push_back(DecomposedPair{ind, GpsAutomaton::zero(field)});
  }
  return pairs;
}

GpsAutomaton recombine(const std::vector<DecomposedPair>& pairs) {
  require(!pairs.empty(), Err::Domain, "recombine needs at least one pair (fields come from it)");
  GpsAutomaton acc = GpsAutomaton::zero(pairs[0].frac.field());
  for (const DecomposedPair& pr : pairs) acc = gps_add(acc, mul_int_frac(pr.indicator, pr.frac));
  return acc;
}

}  // namespace gpsa
