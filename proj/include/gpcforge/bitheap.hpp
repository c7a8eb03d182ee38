#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpcforge {

enum class SignalOrigin : std::uint8_t {
  primary_input,
  counter_output,
  cp_output,
  register_output,
};

/// One dot of the matrix. Ids are unique within a matrix/netlist and are
/// handed out in creation order; weight is the column exponent.
struct SignalRef {
  std::uint32_t id = 0;
  int weight = 0;
  SignalOrigin origin = SignalOrigin::primary_input;

  friend bool operator==(const SignalRef&, const SignalRef&) = default;
};

/// The compression workload: per-weight columns of bit signals. Column i
/// holds the bits of weight 2^i; absent weights are empty columns.
struct BitMatrix {
  std::vector<std::vector<SignalRef>> columns;
  std::uint32_t num_signals = 0;  // ids 0..num_signals-1 are primary inputs

  int width() const { return static_cast<int>(columns.size()); }

  int height(int col) const {
    return col < width() ? static_cast<int>(columns[col].size()) : 0;
  }

  int total_bits() const {
    int n = 0;
    for (const auto& c : columns) n += static_cast<int>(c.size());
    return n;
  }

  /// Largest representable total, sum 2^i * height[i].
  unsigned long long max_total() const {
    unsigned __int128 s = 0;
    for (int i = 0; i < width(); ++i)
      s += (unsigned __int128)columns[i].size() << i;
    if (s > ~0ull) throw std::invalid_argument("matrix total exceeds 64 bits");
    return static_cast<unsigned long long>(s);
  }
};

/// Bits needed for the sum: ceil(log2(max_total + 1)).
inline int result_width(const BitMatrix& m) {
  unsigned long long v = m.max_total();
  int w = 0;
  while (v) {
    ++w;
    v >>= 1;
  }
  return w > 0 ? w : 1;
}

/// Builds a matrix of fresh primary inputs with the given column heights
/// (least significant first). Ids are assigned column by column, bottom up.
inline BitMatrix shape_columns(const std::vector<int>& heights) {
  bool any = false;
  for (int h : heights) {
    if (h < 0) throw std::invalid_argument("negative column height");
    any |= h > 0;
  }
  if (!any) throw std::invalid_argument("matrix must contain at least one bit");
  BitMatrix m;
  m.columns.resize(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i)
    for (int j = 0; j < heights[i]; ++j)
      m.columns[i].push_back(
          {m.num_signals++, static_cast<int>(i), SignalOrigin::primary_input});
  return m;
}

/// Partial-product trapezoid of an n x m unsigned multiplication: column i
/// holds one bit per factor-bit pair (j, k) with j + k = i. Bits within a
/// column are ordered by ascending j, matching mul_partial_products.
inline BitMatrix shape_multiplier(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("multiplier sides must be >= 1");
  std::vector<int> heights(n + m - 1, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < m; ++k) ++heights[j + k];
  return shape_columns(heights);
}

/// Binary values for every primary input of a matrix.
struct InputAssignment {
  std::vector<std::int8_t> bits;  // by signal id; -1 = unassigned

  void set(std::uint32_t id, int value) {
    if (bits.size() <= id) bits.resize(id + 1, -1);
    bits[id] = static_cast<std::int8_t>(value ? 1 : 0);
  }
  bool covers(std::uint32_t id) const {
    return id < bits.size() && bits[id] >= 0;
  }
  int get(std::uint32_t id) const {
    if (!covers(id)) throw std::invalid_argument("assignment misses a primary input");
    return bits[id];
  }
};

/// Assignment feeding a shape_multiplier(n, m) matrix with the partial
/// products of a * b: bit (j, k) of column j + k becomes a_j AND b_k.
inline InputAssignment mul_partial_products(unsigned long long a,
                                            unsigned long long b, int n, int m,
                                            const BitMatrix& matrix) {
  if (n < 1 || m < 1) throw std::invalid_argument("multiplier sides must be >= 1");
  if (n < 64 && a >= (1ull << n)) throw std::invalid_argument("operand a out of range");
  if (m < 64 && b >= (1ull << m)) throw std::invalid_argument("operand b out of range");
  if (matrix.width() != n + m - 1)
    throw std::invalid_argument("matrix does not match multiplier shape");
  InputAssignment asg;
  for (int i = 0; i < matrix.width(); ++i) {
    std::size_t idx = 0;
    for (int j = std::max(0, i - m + 1); j <= std::min(n - 1, i); ++j) {
      const int k = i - j;
      if (idx >= matrix.columns[i].size())
        throw std::invalid_argument("matrix does not match multiplier shape");
      asg.set(matrix.columns[i][idx].id,
              static_cast<int>((a >> j) & 1ull & (b >> k)));
      ++idx;
    }
    if (idx != matrix.columns[i].size())
      throw std::invalid_argument("matrix does not match multiplier shape");
  }
  return asg;
}

/// Uniformly random assignment over all primary inputs, for verification.
inline InputAssignment random_assignment(const BitMatrix& m, std::mt19937_64& rng) {
  InputAssignment asg;
  for (const auto& col : m.columns)
    for (const auto& ref : col) asg.set(ref.id, static_cast<int>(rng() & 1ull));
  return asg;
}

/// Monospaced dot diagram, most significant column on the left, dots
/// growing downward from the first row.
inline std::string render_dots(const BitMatrix& m) {
  int max_h = 0;
  for (int i = 0; i < m.width(); ++i) max_h = std::max(max_h, m.height(i));
  std::ostringstream os;
  for (int row = 0; row < max_h; ++row) {
    std::string line;
    for (int col = m.width() - 1; col >= 0; --col) {
      line.push_back(m.height(col) > row ? '.' : ' ');
      if (col) line.push_back(' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace gpcforge
