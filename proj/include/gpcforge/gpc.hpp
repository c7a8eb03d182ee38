#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpcforge/rational.hpp"

namespace gpcforge {

/// Thrown when a counter's output columns cannot encode an input total.
/// Indicates an unsound counter that escaped validation; never raised for
/// members of the default catalog.
struct encoding_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Column profile of a generalized parallel counter, written in the usual
/// notation (p_{m-1},...,p_0 : q_{n-1},...,q_0]. Stored least significant
/// column first: inputs[i] is the number of input bits of weight 2^i.
///
/// Leading zero input columns are meaningful: a whole-slice counter built
/// on a (0,6) high atom occupies four columns even though its top column
/// takes no bits, and the placement sweep respects that footprint.
struct GpcSignature {
  std::vector<int> inputs;
  std::vector<int> outputs;

  int input_width() const { return static_cast<int>(inputs.size()); }    // m
  int output_width() const { return static_cast<int>(outputs.size()); }  // n

  int total_inputs() const {  // p
    int s = 0;
    for (int v : inputs) s += v;
    return s;
  }
  int total_outputs() const {  // q
    int s = 0;
    for (int v : outputs) s += v;
    return s;
  }

  std::int64_t max_input_total() const {  // sum 2^i * p_i
    std::int64_t s = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      s += static_cast<std::int64_t>(inputs[i]) << i;
    return s;
  }
  std::int64_t max_output_total() const {  // sum 2^i * q_i
    std::int64_t s = 0;
    for (std::size_t i = 0; i < outputs.size(); ++i)
      s += static_cast<std::int64_t>(outputs[i]) << i;
    return s;
  }

  friend bool operator==(const GpcSignature&, const GpcSignature&) = default;

  /// Renders the signature in notation form, e.g. "(2,5:1,2,1]".
  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = input_width() - 1; i >= 0; --i)
      os << inputs[i] << (i ? "," : "");
    os << ':';
    for (int i = output_width() - 1; i >= 0; --i)
      os << outputs[i] << (i ? "," : "");
    os << ']';
    return os.str();
  }

  /// Parses "(2,5:1,2,1]" (columns most significant first).
  static GpcSignature parse(std::string_view text) {
    auto fail = [&] {
      throw std::invalid_argument("bad counter signature: " + std::string(text));
    };
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 5 || s.front() != '(' || s.back() != ']') fail();
    const auto colon = s.find(':');
    if (colon == std::string::npos) fail();
    auto parse_cols = [&](std::string_view part) {
      std::vector<int> cols;
      std::size_t i = 0;
      while (i < part.size()) {
        std::size_t j = i;
        while (j < part.size() && std::isdigit(static_cast<unsigned char>(part[j]))) ++j;
        if (j == i) fail();
        cols.push_back(std::stoi(std::string(part.substr(i, j - i))));
        i = j;
        if (i < part.size()) {
          if (part[i] != ',') fail();
          ++i;
          if (i == part.size()) fail();
        }
      }
      if (cols.empty()) fail();
      std::reverse(cols.begin(), cols.end());  // text is MSB first
      return cols;
    };
    GpcSignature sig;
    sig.inputs = parse_cols(std::string_view(s).substr(1, colon - 1));
    sig.outputs = parse_cols(std::string_view(s).substr(colon + 1, s.size() - colon - 2));
    return sig;
  }
};

enum class CounterKind { floating, slice, cp_element };

inline const char* to_string(CounterKind k) {
  switch (k) {
    case CounterKind::floating: return "floating";
    case CounterKind::slice: return "slice";
    case CounterKind::cp_element: return "cp-element";
  }
  return "?";
}

/// A counter available to the scheduler: signature plus LUT footprint.
struct CounterSpec {
  GpcSignature sig;
  int luts = 1;  // k, occupied LUTs
  CounterKind kind = CounterKind::floating;
  std::string name;

  friend bool operator==(const CounterSpec&, const CounterSpec&) = default;
};

/// Counter quality figures. All exact.
///   efficiency E = (p - q) / k   bits eliminated per LUT
///   strength   S = p / q         asymptotic height reduction per stage
///   slack      A = 1 - (1 + max_in) / (1 + max_out)
///                                unusable share of the output code space
struct Metrics {
  Rat efficiency;
  Rat strength;
  Rat slack;
};

inline Metrics metrics(const CounterSpec& c) {
  const auto& s = c.sig;
  Metrics m;
  m.efficiency = Rat{s.total_inputs() - s.total_outputs(), c.luts};
  m.strength = Rat{s.total_inputs(), s.total_outputs()};
  m.slack = Rat{1} - Rat{1 + s.max_input_total(), 1 + s.max_output_total()};
  return m;
}

// ---------------------------------------------------------------------------
// Behavioral evaluation

/// Canonical output encoding of a total v over output columns q: scan from
/// the most significant column down, putting min(q_i, floor(rem / 2^i)) ones
/// into column i. Returns the per-column one-counts; throws encoding_error
/// if a nonzero remainder survives.
inline std::vector<int> encode_canonical(const std::vector<int>& outputs,
                                         std::int64_t v) {
  std::vector<int> ones(outputs.size(), 0);
  std::int64_t rem = v;
  for (int i = static_cast<int>(outputs.size()) - 1; i >= 0; --i) {
    const std::int64_t w = std::int64_t{1} << i;
    const std::int64_t take = std::min<std::int64_t>(outputs[i], rem / w);
    ones[i] = static_cast<int>(take);
    rem -= take * w;
  }
  if (rem != 0)
    throw encoding_error("total " + std::to_string(v) +
                         " not encodable by output columns");
  return ones;
}

/// Applies the counter to one input assignment. input_bits[i] must hold
/// exactly p_i values in {0,1}; the result holds q_i values per column with
/// the same weighted total, ones filled in index order.
inline std::vector<std::vector<std::uint8_t>> evaluate(
    const CounterSpec& c, const std::vector<std::vector<std::uint8_t>>& input_bits) {
  const auto& sig = c.sig;
  if (static_cast<int>(input_bits.size()) != sig.input_width())
    throw std::invalid_argument("evaluate: wrong number of input columns");
  std::int64_t v = 0;
  for (int i = 0; i < sig.input_width(); ++i) {
    if (static_cast<int>(input_bits[i].size()) != sig.inputs[i])
      throw std::invalid_argument("evaluate: wrong bit count in input column");
    for (auto b : input_bits[i]) {
      if (b > 1) throw std::invalid_argument("evaluate: non-binary input");
      v += static_cast<std::int64_t>(b) << i;
    }
  }
  const std::vector<int> ones = encode_canonical(sig.outputs, v);
  std::vector<std::vector<std::uint8_t>> out(sig.output_width());
  for (int i = 0; i < sig.output_width(); ++i) {
    out[i].resize(sig.outputs[i]);
    for (int j = 0; j < sig.outputs[i]; ++j)
      out[i][j] = j < ones[i] ? 1 : 0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

enum class Violation {
  malformed_signature,  // empty columns, negative counts, zero totals
  negative_slack,       // some input total exceeds the output range
  lut_bound,            // k outside the bound of the counter kind
  not_encodable,        // canonical encoding fails for an achievable total
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::malformed_signature: return "malformed-signature";
    case Violation::negative_slack: return "negative-slack";
    case Violation::lut_bound: return "lut-bound";
    case Violation::not_encodable: return "not-encodable";
  }
  return "?";
}

/// Checks a (possibly user-supplied) counter. Returns every violated rule;
/// an empty result means the counter is sound. Encodability is checked by
/// exhausting the achievable input totals, so it stays an independent check
/// of the arithmetic reachability rather than a slack re-computation.
inline std::vector<Violation> validate(const CounterSpec& c) {
  std::vector<Violation> out;
  const auto& sig = c.sig;

  bool well_formed = !sig.inputs.empty() && !sig.outputs.empty();
  for (int v : sig.inputs) well_formed &= v >= 0;
  for (int v : sig.outputs) well_formed &= v >= 0;
  if (well_formed) {
    well_formed &= sig.total_inputs() >= 1 && sig.total_outputs() >= 1;
    // Output columns are a binary code: a zero top column is dead weight.
    well_formed &= sig.outputs.size() == 1 || sig.outputs.back() > 0;
  }
  if (!well_formed) {
    out.push_back(Violation::malformed_signature);
    return out;  // the remaining checks assume a sane shape
  }

  const int max_k = c.kind == CounterKind::slice      ? 4
                    : c.kind == CounterKind::floating ? 3
                                                      : 1;
  if (c.luts < 1 || c.luts > max_k) out.push_back(Violation::lut_bound);

  if (sig.max_input_total() > sig.max_output_total())
    out.push_back(Violation::negative_slack);

  // Enumerate achievable totals (not every integer in range is reachable
  // when an input column is empty) and try the canonical encoding on each.
  std::set<std::int64_t> reachable{0};
  for (int i = 0; i < sig.input_width(); ++i)
    for (int j = 0; j < sig.inputs[i]; ++j) {
      std::set<std::int64_t> next = reachable;
      for (std::int64_t v : reachable) next.insert(v + (std::int64_t{1} << i));
      reachable = std::move(next);
    }
  for (std::int64_t v : reachable) {
    if (v > sig.max_output_total()) break;  // already flagged as slack
    try {
      encode_canonical(sig.outputs, v);
    } catch (const encoding_error&) {
      out.push_back(Violation::not_encodable);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole-slice composition

/// Two-column fragment of a slice counter: tag (a,b) contributes a bits in
/// its higher and b bits in its lower column. Exactly three atoms exist.
enum class SliceAtom { a22, a14, a06 };

inline std::pair<int, int> atom_profile(SliceAtom a) {
  switch (a) {
    case SliceAtom::a22: return {2, 2};
    case SliceAtom::a14: return {1, 4};
    case SliceAtom::a06: return {0, 6};
  }
  return {0, 0};
}

/// Combines two atoms into a whole-slice counter (4 input columns, 5-bit
/// binary output, k = 4). The low atom's carry-chain input doubles as one
/// extra weight-1 bit, except for (0,6) where the bypass already claims it.
inline CounterSpec compose_slice(SliceAtom low, SliceAtom high) {
  const auto [lo_hi, lo_lo] = atom_profile(low);
  const auto [hi_hi, hi_lo] = atom_profile(high);
  CounterSpec c;
  c.sig.inputs = {lo_lo + (low == SliceAtom::a06 ? 0 : 1), lo_hi, hi_lo, hi_hi};
  c.sig.outputs = {1, 1, 1, 1, 1};
  c.luts = 4;
  c.kind = CounterKind::slice;
  std::ostringstream name;
  name << '(' << hi_hi << ',' << hi_lo << ',' << lo_hi << ','
       << c.sig.inputs[0] << ')';
  c.name = name.str();
  return c;
}

// ---------------------------------------------------------------------------
// Catalog

enum class OrderingScheme { efficiency, strength, product };

inline const char* to_string(OrderingScheme s) {
  switch (s) {
    case OrderingScheme::efficiency: return "efficiency";
    case OrderingScheme::strength: return "strength";
    case OrderingScheme::product: return "product";
  }
  return "?";
}

inline OrderingScheme parse_ordering(std::string_view s) {
  if (s == "efficiency") return OrderingScheme::efficiency;
  if (s == "strength") return OrderingScheme::strength;
  if (s == "product") return OrderingScheme::product;
  throw std::invalid_argument("unknown ordering scheme: " + std::string(s));
}

namespace detail {

/// Preference order: primary metric, then the efficiency-strength product,
/// then slack as the last metric criterion, then a determinism tail (total
/// inputs, signature text order). Sorting the primary metric alone leaves
/// ties like E((3:1,1]) = E((6:1,1,1]) = 1 to chance; the product breaks
/// them toward the counter that also reduces more per bit.
inline bool catalog_less(const CounterSpec& a, const CounterSpec& b,
                         OrderingScheme scheme) {
  const Metrics ma = metrics(a), mb = metrics(b);
  auto primary = [&](const Metrics& m) {
    switch (scheme) {
      case OrderingScheme::efficiency: return m.efficiency;
      case OrderingScheme::strength: return m.strength;
      case OrderingScheme::product: return m.efficiency * m.strength;
    }
    return m.efficiency;
  };
  const Rat pa = primary(ma), pb = primary(mb);
  if (pa != pb) return pa > pb;
  const Rat xa = ma.efficiency * ma.strength, xb = mb.efficiency * mb.strength;
  if (xa != xb) return xa > xb;
  if (ma.slack != mb.slack) return ma.slack < mb.slack;
  if (a.sig.total_inputs() != b.sig.total_inputs())
    return a.sig.total_inputs() > b.sig.total_inputs();
  // Signature order as printed: most significant columns first.
  auto key = [](const GpcSignature& s) {
    std::vector<int> k(s.inputs.rbegin(), s.inputs.rend());
    k.insert(k.end(), s.outputs.rbegin(), s.outputs.rend());
    return k;
  };
  return key(a.sig) < key(b.sig);
}

}  // namespace detail

inline CounterSpec make_counter(std::string_view sig, int luts, CounterKind kind,
                                std::string name) {
  CounterSpec c;
  c.sig = GpcSignature::parse(sig);
  c.luts = luts;
  c.kind = kind;
  c.name = std::move(name);
  return c;
}

/// The thirteen counters the scheduler picks from: the nine composable
/// whole-slice counters, the irregular (1,3,2,5:1,1,1,1,1] slice, and the
/// three floating counters. Half adders are left out (they only reshape),
/// as is anything that needs carry-like signals on general routing.
inline std::vector<CounterSpec> default_catalog(OrderingScheme scheme) {
  std::vector<CounterSpec> cat;
  const SliceAtom atoms[] = {SliceAtom::a22, SliceAtom::a14, SliceAtom::a06};
  for (SliceAtom high : atoms)
    for (SliceAtom low : atoms) cat.push_back(compose_slice(low, high));
  cat.push_back(make_counter("(1,3,2,5:1,1,1,1,1]", 4, CounterKind::slice, "(1,3,2,5)"));
  cat.push_back(make_counter("(3:1,1]", 1, CounterKind::floating, "FA"));
  cat.push_back(make_counter("(6:1,1,1]", 3, CounterKind::floating, "(6)"));
  cat.push_back(make_counter("(2,5:1,2,1]", 2, CounterKind::floating, "(2,5)"));
  std::stable_sort(cat.begin(), cat.end(), [&](const auto& a, const auto& b) {
    return detail::catalog_less(a, b, scheme);
  });
  return cat;
}

/// CSV export: name, signature, k, kind, E, S, A. Signatures carry commas,
/// so they are quoted.
inline std::string catalog_csv(const std::vector<CounterSpec>& catalog) {
  std::ostringstream os;
  os << "name,signature,k,kind,E,S,A\n";
  for (const auto& c : catalog) {
    const Metrics m = metrics(c);
    os << '"' << c.name << "\",\"" << c.sig.str() << "\"," << c.luts << ','
       << to_string(c.kind) << ',' << m.efficiency.str() << ','
       << m.strength.str() << ',' << m.slack.str() << '\n';
  }
  return os.str();
}

}  // namespace gpcforge
