#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpsa/field.hpp"

namespace gpsa {

// Reading order and radix-point interpretation of input strings.
enum class Semantics { LsdInteger, MsdInteger, MsdFractional, MsdRadix };

const char* semantics_name(Semantics s);
Semantics semantics_from_name(const std::string& name);

// Digits 0..base-1, plus a radix-point symbol (index base) when radix is set.
struct Alphabet {
  uint32_t base = 2;
  bool radix = false;

  uint32_t size() const { return base + (radix ? 1 : 0); }
  uint32_t dot() const { return base; }
  bool operator==(const Alphabet& o) const { return base == o.base && radix == o.radix; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }
};

// A validated input string over an alphabet (at most one radix point).
class DigitString {
public:
  DigitString() = default;
  DigitString(const Alphabet& alphabet, std::vector<uint32_t> syms);
  static DigitString parse(const Alphabet& alphabet, const std::string& text);
  // base-p digits of n, least/most significant first (canonical: no padding)
  static DigitString integer_lsd(uint64_t n, uint32_t base);
  static DigitString integer_msd(uint64_t n, uint32_t base);

  const std::vector<uint32_t>& syms() const { return syms_; }
  std::string str(const Alphabet& alphabet) const;

private:
  std::vector<uint32_t> syms_;
};

// Finite automaton with output in F_q: state space 0..n-1, total transition
// table, output map, and a semantics tag that operations check.
struct Dfao {
  FieldPtr field;
  Alphabet alphabet;
  Semantics semantics = Semantics::LsdInteger;
  uint32_t initial = 0;
  std::vector<uint32_t> outputs;      // per state, raw field reps
  std::vector<uint32_t> transitions;  // row-major: state * alphabet.size() + symbol

  uint32_t state_count() const { return static_cast<uint32_t>(outputs.size()); }
  uint32_t step(uint32_t s, uint32_t sym) const { return transitions[s * alphabet.size() + sym]; }
  uint32_t run_raw(const std::vector<uint32_t>& syms) const;
  void validate() const;
};

FieldElem run(const Dfao& a, const DigitString& s);

enum class Combine { Add, Mul };
Dfao product(const Dfao& a, const Dfao& b, Combine combine);

Dfao minimize(const Dfao& a);

// run(result, s) = run(a, reverse(s)); integer semantics only (the tag set has
// no reversed-fractional reading). Function-table subset construction, capped.
Dfao reverse(const Dfao& a, size_t budget);

enum class ZeroMode { PadInvariant, CanonicalZero };
Dfao zero_normalize(const Dfao& a, ZeroMode mode);

// Pad-invariance for trailing zeros after the radix point only (internal use
// by constructions that re-feed digit streams).
Dfao radix_pad_invariant(const Dfao& a);

// LSD machine over digits base q = p^e -> equivalent LSD machine over base p.
Dfao block_recode(const Dfao& a);

std::string dot_export(const Dfao& a);

// states reachable from the initial state
std::vector<bool> reachable_states(const Dfao& a);
// states from which some nonzero output is reachable
std::vector<bool> live_states(const Dfao& a);
Dfao prune_unreachable(const Dfao& a);
// deterministic BFS renumbering from the initial state by symbol order
Dfao bfs_canonical(const Dfao& a);

bool same_shape(const Dfao& a, const Dfao& b);  // field, alphabet, semantics
// exact equality of the string -> output functions (pair bisimulation)
bool same_function(const Dfao& a, const Dfao& b);
// stripping padding zeros (per the semantics' direction) never changes outputs
bool pad_invariant(const Dfao& a);

// Line-oriented "dfao v1" format, bit-exact.
std::string write_dfao(const Dfao& a);
Dfao parse_dfao(const std::string& text);
Dfao load_dfao(const std::string& path);
void save_dfao(const Dfao& a, const std::string& path);

}  // namespace gpsa
