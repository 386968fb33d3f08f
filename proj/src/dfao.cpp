#include "gpsa/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace gpsa {

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::LsdInteger: return "lsd-integer";
    case Semantics::MsdInteger: return "msd-integer";
    case Semantics::MsdFractional: return "msd-fractional";
    case Semantics::MsdRadix: return "msd-radix";
  }
  return "?";
}

Semantics semantics_from_name(const std::string& name) {
  if (name == "lsd-integer") return Semantics::LsdInteger;
  if (name == "msd-integer") return Semantics::MsdInteger;
  if (name == "msd-fractional") return Semantics::MsdFractional;
  if (name == "msd-radix") return Semantics::MsdRadix;
  fail(Err::Format, "unknown semantics: " + name);
}

DigitString::DigitString(const Alphabet& alphabet, std::vector<uint32_t> syms)
    : syms_(std::move(syms)) {
  size_t dots = 0;
  for (uint32_t s : syms_) {
    require(s < alphabet.size(), Err::AlphabetMismatch, "symbol out of range");
    if (alphabet.radix && s == alphabet.dot()) ++dots;
  }
  require(dots <= 1, Err::Format, "more than one radix point");
}

DigitString DigitString::parse(const Alphabet& alphabet, const std::string& text) {
  std::vector<uint32_t> syms;
  for (char ch : text) {
    if (ch == '.') {
      require(alphabet.radix, Err::AlphabetMismatch, "radix point in a plain digit string");
      syms.push_back(alphabet.dot());
      continue;
    }
    require(ch >= '0' && ch <= '9', Err::Format, std::string("bad digit: ") + ch);
    syms.push_back(static_cast<uint32_t>(ch - '0'));
  }
  return DigitString(alphabet, std::move(syms));
}

DigitString DigitString::integer_lsd(uint64_t n, uint32_t base) {
  std::vector<uint32_t> syms;
  while (n > 0) {
    syms.push_back(static_cast<uint32_t>(n % base));
    n /= base;
  }
  return DigitString(Alphabet{base, false}, std::move(syms));
}

DigitString DigitString::integer_msd(uint64_t n, uint32_t base) {
  DigitString s = integer_lsd(n, base);
  std::vector<uint32_t> syms = s.syms();
  std::reverse(syms.begin(), syms.end());
  return DigitString(Alphabet{base, false}, std::move(syms));
}

std::string DigitString::str(const Alphabet& alphabet) const {
  std::string out;
  for (uint32_t s : syms_) out += (alphabet.radix && s == alphabet.dot()) ? '.' : char('0' + s);
  return out;
}

uint32_t Dfao::run_raw(const std::vector<uint32_t>& syms) const {
  uint32_t s = initial;
  for (uint32_t sym : syms) s = step(s, sym);
  return outputs[s];
}

void Dfao::validate() const {
  require(field != nullptr, Err::Internal, "automaton without field");
  uint32_t n = state_count();
  require(n > 0, Err::Format, "automaton needs at least one state");
  require(initial < n, Err::Format, "initial state out of range");
  require(transitions.size() == static_cast<size_t>(n) * alphabet.size(), Err::Format,
          "transition table is not total");
  for (uint32_t t : transitions) require(t < n, Err::Format, "transition target out of range");
  for (uint32_t o : outputs) require(o < field->q(), Err::Format, "output out of range");
  if (alphabet.radix) {
    // after a radix point, a second one must lead to an all-zero sink
    std::vector<bool> live = live_states(*this);
    std::vector<bool> after_dot(n, false);
    std::deque<uint32_t> queue;
    std::vector<bool> seen_pre(n, false), seen_post(n, false);
    seen_pre[initial] = true;
    queue.push_back(initial);
    while (!queue.empty()) {
      uint32_t s = queue.front();
      queue.pop_front();
      for (uint32_t sym = 0; sym < alphabet.size(); ++sym) {
        uint32_t t = step(s, sym);
        if (sym == alphabet.dot()) {
          if (!seen_post[t]) {
            seen_post[t] = true;
            after_dot[t] = true;
          }
        } else if (!seen_pre[t]) {
          seen_pre[t] = true;
          queue.push_back(t);
        }
      }
    }
    // close the post-dot set under all symbols
    std::deque<uint32_t> q2;
    for (uint32_t s = 0; s < n; ++s)
      if (after_dot[s]) q2.push_back(s);
    while (!q2.empty()) {
      uint32_t s = q2.front();
      q2.pop_front();
      for (uint32_t sym = 0; sym < alphabet.size(); ++sym) {
        if (sym == alphabet.dot()) {
          uint32_t t = step(s, sym);
          require(!live[t], Err::Format,
                  "second radix point must lead to an all-zero sink");
          continue;
        }
        uint32_t t = step(s, sym);
        if (!after_dot[t]) {
          after_dot[t] = true;
          q2.push_back(t);
        }
      }
    }
  }
}

FieldElem run(const Dfao& a, const DigitString& s) {
  for (uint32_t sym : s.syms())
    require(sym < a.alphabet.size(), Err::AlphabetMismatch, "symbol outside automaton alphabet");
  return FieldElem(a.field, a.run_raw(s.syms()));
}

bool same_shape(const Dfao& a, const Dfao& b) {
  return a.field->same(*b.field) && a.alphabet == b.alphabet && a.semantics == b.semantics;
}

bool same_function(const Dfao& a, const Dfao& b) {
  if (!a.field->same(*b.field) || a.alphabet != b.alphabet) return false;
  std::map<std::pair<uint32_t, uint32_t>, bool> seen;
  std::deque<std::pair<uint32_t, uint32_t>> queue{{a.initial, b.initial}};
  seen[{a.initial, b.initial}] = true;
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    if (a.outputs[sa] != b.outputs[sb]) return false;
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      auto key = std::make_pair(a.step(sa, sym), b.step(sb, sym));
      if (!seen[key]) {
        seen[key] = true;
        queue.push_back(key);
      }
    }
  }
  return true;
}

bool pad_invariant(const Dfao& a) {
  switch (a.semantics) {
    case Semantics::LsdInteger:
    case Semantics::MsdFractional: {
      std::vector<bool> reach = reachable_states(a);
      for (uint32_t s = 0; s < a.state_count(); ++s)
        if (reach[s] && a.outputs[a.step(s, 0)] != a.outputs[s]) return false;
      return true;
    }
    case Semantics::MsdInteger: {
      Dfao shifted = a;
      shifted.initial = a.step(a.initial, 0);
      return same_function(a, shifted);
    }
    case Semantics::MsdRadix:
      fail(Err::SemanticsMismatch, "pad-invariance needs a single padding direction");
  }
  return false;
}

std::vector<bool> reachable_states(const Dfao& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::deque<uint32_t> queue{a.initial};
  seen[a.initial] = true;
  while (!queue.empty()) {
    uint32_t s = queue.front();
    queue.pop_front();
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.step(s, sym);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> live_states(const Dfao& a) {
  uint32_t n = a.state_count();
  std::vector<std::vector<uint32_t>> preds(n);
  for (uint32_t s = 0; s < n; ++s)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      preds[a.step(s, sym)].push_back(s);
  std::vector<bool> live(n, false);
  std::deque<uint32_t> queue;
  for (uint32_t s = 0; s < n; ++s) {
    if (a.outputs[s] != 0) {
      live[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    uint32_t s = queue.front();
    queue.pop_front();
    for (uint32_t pr : preds[s]) {
      if (!live[pr]) {
        live[pr] = true;
        queue.push_back(pr);
      }
    }
  }
  return live;
}

Dfao prune_unreachable(const Dfao& a) {
  std::vector<bool> seen = reachable_states(a);
  uint32_t n = a.state_count();
  std::vector<uint32_t> remap(n, UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t s = 0; s < n; ++s)
    if (seen[s]) remap[s] = next++;
  if (next == n) return a;
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = remap[a.initial];
  b.outputs.resize(next);
  b.transitions.resize(static_cast<size_t>(next) * a.alphabet.size());
  for (uint32_t s = 0; s < n; ++s) {
    if (remap[s] == UINT32_MAX) continue;
    b.outputs[remap[s]] = a.outputs[s];
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      b.transitions[remap[s] * a.alphabet.size() + sym] = remap[a.step(s, sym)];
  }
  return b;
}

Dfao bfs_canonical(const Dfao& a) {
  uint32_t n = a.state_count();
  std::vector<uint32_t> order(n, UINT32_MAX);
  uint32_t next = 0;
  std::deque<uint32_t> queue{a.initial};
  order[a.initial] = next++;
  while (!queue.empty()) {
    uint32_t s = queue.front();
    queue.pop_front();
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.step(s, sym);
      if (order[t] == UINT32_MAX) {
        order[t] = next++;
        queue.push_back(t);
      }
    }
  }
  // unreachable states keep relative order after the reachable block
  for (uint32_t s = 0; s < n; ++s)
    if (order[s] == UINT32_MAX) order[s] = next++;
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = order[a.initial];
  b.outputs.resize(n);
  b.transitions.resize(a.transitions.size());
  for (uint32_t s = 0; s < n; ++s) {
    b.outputs[order[s]] = a.outputs[s];
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      b.transitions[order[s] * a.alphabet.size() + sym] = order[a.step(s, sym)];
  }
  return b;
}

Dfao product(const Dfao& a, const Dfao& b, Combine combine) {
  require(a.field->same(*b.field), Err::ConfigMismatch, "product over different fields");
  require(a.alphabet == b.alphabet, Err::AlphabetMismatch, "product over different alphabets");
  require(a.semantics == b.semantics, Err::SemanticsMismatch,
          "product over different semantics");
  const Field& f = *a.field;
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> index;
  std::vector<std::pair<uint32_t, uint32_t>> states;
  auto intern = [&](uint32_t sa, uint32_t sb) {
    auto [it, inserted] = index.try_emplace({sa, sb}, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back({sa, sb});
    return it->second;
  };
  uint32_t nsym = a.alphabet.size();
  Dfao out;
  out.field = a.field;
  out.alphabet = a.alphabet;
  out.semantics = a.semantics;
  out.initial = intern(a.initial, b.initial);
  for (uint32_t i = 0; i < states.size(); ++i) {
    auto [sa, sb] = states[i];
    uint32_t oa = a.outputs[sa], ob = b.outputs[sb];
    out.outputs.push_back(combine == Combine::Add ? f.add(oa, ob) : f.mul(oa, ob));
    for (uint32_t sym = 0; sym < nsym; ++sym)
      out.transitions.push_back(intern(a.step(sa, sym), b.step(sb, sym)));
  }
  return out;
}

Dfao minimize(const Dfao& a0) {
  Dfao a = prune_unreachable(a0);
  uint32_t n = a.state_count();
  uint32_t nsym = a.alphabet.size();
  // Moore refinement: split by output, then by successor classes until the
  // class count stops growing (signatures include the own class, so classes
  // only ever split)
  std::vector<uint32_t> cls(n);
  uint32_t ncls = 0;
  {
    std::map<uint32_t, uint32_t> by_output;
    for (uint32_t s = 0; s < n; ++s) {
      auto [it, inserted] =
          by_output.try_emplace(a.outputs[s], static_cast<uint32_t>(by_output.size()));
      cls[s] = it->second;
    }
    ncls = static_cast<uint32_t>(by_output.size());
  }
  for (;;) {
    std::map<std::vector<uint32_t>, uint32_t> sig_index;
    std::vector<uint32_t> next_cls(n);
    for (uint32_t s = 0; s < n; ++s) {
      std::vector<uint32_t> sig;
      sig.reserve(nsym + 1);
      sig.push_back(cls[s]);
      for (uint32_t sym = 0; sym < nsym; ++sym) sig.push_back(cls[a.step(s, sym)]);
      auto [it, inserted] = sig_index.try_emplace(sig, static_cast<uint32_t>(sig_index.size()));
      next_cls[s] = it->second;
    }
    uint32_t next_count = static_cast<uint32_t>(sig_index.size());
    if (next_count == ncls) break;
    cls = std::move(next_cls);
    ncls = next_count;
  }
  uint32_t m = ncls;
  Dfao q;
  q.field = a.field;
  q.alphabet = a.alphabet;
  q.semantics = a.semantics;
  q.initial = cls[a.initial];
  q.outputs.assign(m, 0);
  q.transitions.assign(static_cast<size_t>(m) * nsym, 0);
  for (uint32_t s = 0; s < n; ++s) {
    q.outputs[cls[s]] = a.outputs[s];
    for (uint32_t sym = 0; sym < nsym; ++sym)
      q.transitions[cls[s] * nsym + sym] = cls[a.step(s, sym)];
  }
  return bfs_canonical(q);
}

Dfao reverse(const Dfao& a, size_t budget) {
  require(!a.alphabet.radix, Err::AlphabetMismatch, "reverse requires a plain digit alphabet");
  require(a.semantics == Semantics::LsdInteger || a.semantics == Semantics::MsdInteger,
          Err::SemanticsMismatch, "reverse is defined for integer semantics");
  uint32_t nsym = a.alphabet.size();
  uint32_t n = a.state_count();
  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<std::vector<uint32_t>> tables;
  auto intern = [&](std::vector<uint32_t> h) {
    auto [it, inserted] = index.try_emplace(h, static_cast<uint32_t>(tables.size()));
    if (inserted) tables.push_back(it->first);
    return it->second;
  };
  intern(a.outputs);
  Dfao out;
  out.field = a.field;
  out.alphabet = a.alphabet;
  out.semantics =
      a.semantics == Semantics::LsdInteger ? Semantics::MsdInteger : Semantics::LsdInteger;
  out.initial = 0;
  for (uint32_t i = 0; i < tables.size(); ++i) {
    std::vector<uint32_t> h = tables[i];
    out.outputs.push_back(h[a.initial]);
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      std::vector<uint32_t> h2(n);
      for (uint32_t s = 0; s < n; ++s) h2[s] = h[a.step(s, sym)];
      out.transitions.push_back(intern(std::move(h2)));
      require(tables.size() <= budget, Err::Budget,
              "reverse exceeded state budget (explored " + std::to_string(tables.size()) +
                  " states)");
    }
  }
  return minimize(out);
}

namespace {

Dfao pad_invariant_leading(const Dfao& a) {
  // new initial state that absorbs leading zeros
  Dfao b = a;
  uint32_t nsym = a.alphabet.size();
  uint32_t fresh = a.state_count();
  b.outputs.push_back(a.outputs[a.initial]);
  for (uint32_t sym = 0; sym < nsym; ++sym) {
    uint32_t t = sym == 0 ? fresh : a.step(a.initial, sym);
    b.transitions.push_back(t);
  }
  b.initial = fresh;
  return minimize(b);
}

Dfao pad_invariant_trailing(const Dfao& a) {
  // state = (original state, output of the input with trailing zeros stripped)
  uint32_t nsym = a.alphabet.size();
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> index;
  std::vector<std::pair<uint32_t, uint32_t>> states;
  auto intern = [&](uint32_t s, uint32_t o) {
    auto [it, inserted] = index.try_emplace({s, o}, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back({s, o});
    return it->second;
  };
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = intern(a.initial, a.outputs[a.initial]);
  for (uint32_t i = 0; i < states.size(); ++i) {
    auto [s, o] = states[i];
    b.outputs.push_back(o);
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t t = a.step(s, sym);
      uint32_t o2 = sym == 0 ? o : a.outputs[t];
      b.transitions.push_back(intern(t, o2));
    }
  }
  return minimize(b);
}

Dfao canonical_zero_trailing(const Dfao& a) {
  // doubled state space: reading 0 moves to the zero copy
  uint32_t n = a.state_count();
  uint32_t nsym = a.alphabet.size();
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = a.initial;  // clean copy first
  b.outputs.resize(2 * n);
  b.transitions.resize(static_cast<size_t>(2 * n) * nsym);
  for (uint32_t s = 0; s < n; ++s) {
    b.outputs[s] = a.outputs[s];
    b.outputs[n + s] = 0;
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t t = a.step(s, sym);
      uint32_t target = sym == 0 ? n + t : t;
      b.transitions[s * nsym + sym] = target;
      b.transitions[(n + s) * nsym + sym] = target;
    }
  }
  return minimize(b);
}

Dfao canonical_zero_leading(const Dfao& a) {
  // fresh start; a first zero digit condemns the string
  uint32_t n = a.state_count();
  uint32_t nsym = a.alphabet.size();
  uint32_t fresh = n, sink = n + 1;
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = fresh;
  b.outputs = a.outputs;
  b.outputs.push_back(a.outputs[a.initial]);  // fresh: empty string unchanged
  b.outputs.push_back(0);                     // sink
  b.transitions.resize(static_cast<size_t>(n + 2) * nsym);
  for (uint32_t s = 0; s < n; ++s)
    for (uint32_t sym = 0; sym < nsym; ++sym)
      b.transitions[s * nsym + sym] = a.step(s, sym);
  for (uint32_t sym = 0; sym < nsym; ++sym) {
    b.transitions[fresh * nsym + sym] = sym == 0 ? sink : a.step(a.initial, sym);
    b.transitions[sink * nsym + sym] = sink;
  }
  return minimize(b);
}

// Full canonical-string normalization for radix machines: strings without a
// radix point, with a leading integer zero, with a trailing fractional zero,
// or with two radix points all output zero; canonical strings are unchanged.
Dfao canonical_zero_radix(const Dfao& a) {
  uint32_t nsym = a.alphabet.size();
  uint32_t dot = a.alphabet.dot();
  // encoded states: phase 0 = int start, 1 = int running, 2 = frac clean,
  // 3 = frac dirty (last digit zero), 4 = dead
  struct Key {
    uint32_t s;
    uint32_t phase;
    bool operator<(const Key& o) const { return std::tie(s, phase) < std::tie(o.s, o.phase); }
  };
  std::map<Key, uint32_t> index;
  std::vector<Key> states;
  auto intern = [&](uint32_t s, uint32_t phase) {
    Key k{phase == 4 ? 0u : s, phase};
    auto [it, inserted] = index.try_emplace(k, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back(k);
    return it->second;
  };
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = intern(a.initial, 0);
  for (uint32_t i = 0; i < states.size(); ++i) {
    Key k = states[i];
    uint32_t out = (k.phase == 2) ? a.outputs[k.s] : 0;
    b.outputs.push_back(out);
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t target;
      if (k.phase == 4) {
        target = intern(0, 4);
      } else if (sym == dot) {
        target = (k.phase == 0 || k.phase == 1) ? intern(a.step(k.s, dot), 2) : intern(0, 4);
      } else if (k.phase == 0) {
        target = sym == 0 ? intern(0, 4) : intern(a.step(k.s, sym), 1);
      } else if (k.phase == 1) {
        target = intern(a.step(k.s, sym), 1);
      } else {
        target = intern(a.step(k.s, sym), sym == 0 ? 3 : 2);
      }
      b.transitions.push_back(target);
    }
  }
  return minimize(b);
}

}  // namespace

Dfao zero_normalize(const Dfao& a, ZeroMode mode) {
  if (mode == ZeroMode::PadInvariant) {
    switch (a.semantics) {
      case Semantics::MsdInteger: return pad_invariant_leading(a);
      case Semantics::LsdInteger:
      case Semantics::MsdFractional: return pad_invariant_trailing(a);
      case Semantics::MsdRadix:
        fail(Err::SemanticsMismatch,
             "pad-invariant normalization needs a single padding direction");
    }
  }
  switch (a.semantics) {
    case Semantics::MsdInteger: return canonical_zero_leading(a);
    case Semantics::LsdInteger:
    case Semantics::MsdFractional: return canonical_zero_trailing(a);
    case Semantics::MsdRadix: return canonical_zero_radix(a);
  }
  fail(Err::Internal, "unhandled semantics");
}

Dfao radix_pad_invariant(const Dfao& a) {
  require(a.alphabet.radix, Err::AlphabetMismatch, "needs a radix alphabet");
  uint32_t nsym = a.alphabet.size();
  uint32_t dot = a.alphabet.dot();
  // int phase: plain state; frac phase: (state, stripped output)
  struct Key {
    uint32_t s;
    uint32_t o;
    bool frac;
    bool operator<(const Key& k) const { return std::tie(s, o, frac) < std::tie(k.s, k.o, k.frac); }
  };
  std::map<Key, uint32_t> index;
  std::vector<Key> states;
  auto intern = [&](Key k) {
    auto [it, inserted] = index.try_emplace(k, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back(k);
    return it->second;
  };
  Dfao b;
  b.field = a.field;
  b.alphabet = a.alphabet;
  b.semantics = a.semantics;
  b.initial = intern({a.initial, 0, false});
  for (uint32_t i = 0; i < states.size(); ++i) {
    Key k = states[i];
    b.outputs.push_back(k.frac ? k.o : a.outputs[k.s]);
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t t = a.step(k.s, sym);
      Key nk{};
      if (!k.frac) {
        nk = sym == dot ? Key{t, a.outputs[t], true} : Key{t, 0, false};
      } else {
        uint32_t o2 = sym == 0 ? k.o : a.outputs[t];
        nk = Key{t, o2, true};
      }
      b.transitions.push_back(intern(nk));
    }
  }
  return minimize(b);
}

Dfao block_recode(const Dfao& a) {
  require(a.semantics == Semantics::LsdInteger, Err::SemanticsMismatch,
          "block recoding works on LSD integer machines");
  require(!a.alphabet.radix, Err::AlphabetMismatch, "block recoding needs a plain alphabet");
  const Field& f = *a.field;
  require(a.alphabet.base == f.q(), Err::AlphabetMismatch,
          "alphabet base must equal q = p^e");
  uint32_t p = f.p(), e = f.e();
  if (e == 1) return a;
  // state = (original state, partial digit acc < p^k, k < e)
  struct Key {
    uint32_t s, acc, k;
    bool operator<(const Key& o) const {
      return std::tie(s, acc, k) < std::tie(o.s, o.acc, o.k);
    }
  };
  std::map<Key, uint32_t> index;
  std::vector<Key> states;
  auto intern = [&](Key key) {
    auto [it, inserted] = index.try_emplace(key, static_cast<uint32_t>(states.size()));
    if (inserted) states.push_back(key);
    return it->second;
  };
  Dfao b;
  b.field = a.field;
  b.alphabet = Alphabet{p, false};
  b.semantics = Semantics::LsdInteger;
  b.initial = intern({a.initial, 0, 0});
  std::vector<uint32_t> ppow(e + 1, 1);
  for (uint32_t i = 1; i <= e; ++i) ppow[i] = ppow[i - 1] * p;
  for (uint32_t i = 0; i < states.size(); ++i) {
    Key k = states[i];
    b.outputs.push_back(k.k == 0 ? a.outputs[k.s] : a.outputs[a.step(k.s, k.acc)]);
    for (uint32_t d = 0; d < p; ++d) {
      uint32_t acc2 = k.acc + d * ppow[k.k];
      Key nk = (k.k + 1 == e) ? Key{a.step(k.s, acc2), 0, 0} : Key{k.s, acc2, k.k + 1};
      b.transitions.push_back(intern(nk));
    }
  }
  return prune_unreachable(b);
}

std::string dot_export(const Dfao& a) {
  std::ostringstream os;
  os << "digraph dfao {\n";
  os << "  rankdir=LR;\n";
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    bool zero = a.outputs[s] == 0;
    os << "  s" << s << " [label=\"s" << s << '/' << a.field->format(a.outputs[s]) << '"'
       << (zero ? ", shape=circle, style=dashed" : ", shape=doublecircle") << "];\n";
  }
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      std::string lab =
          (a.alphabet.radix && sym == a.alphabet.dot()) ? "." : std::to_string(sym);
      os << "  s" << s << " -> s" << a.step(s, sym) << " [label=\"" << lab << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace gpsa
