#pragma once

// Multi-indices m = (m_0, ..., m_{d-1}) over the jet lattice {m : |m| <= p}.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetvir/rational.hpp"

namespace jetvir {

/// Largest supported dimension. Jet operators carry x and q variables side
/// by side, so this has to cover 2 * (max CLI dimension).
inline constexpr int kMaxDim = 12;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MultiIndex {
 public:
  MultiIndex() = default;
  /// Zero index of dimension d.
  explicit MultiIndex(int d);
  MultiIndex(std::initializer_list<int> components);
  explicit MultiIndex(std::span<const int> components);

  /// Unit index in direction mu.
  static MultiIndex unit(int d, int mu);

  int dim() const { return dim_; }
  int operator[](int i) const { return c_[i]; }
  void set(int i, int value);
  int degree() const;

  /// Componentwise comparison n <= m.
  bool divides(const MultiIndex& m) const;

  std::string str() const;

  /// Graded-lexicographic: lower total degree first; within a degree,
  /// larger leading components first, so (1,0) precedes (0,1).
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<std::uint16_t, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
/// m - n; throws std::domain_error unless n <= m componentwise.
MultiIndex subtract(const MultiIndex& m, const MultiIndex& n);

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) { return add(a, b); }
inline MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) { return subtract(a, b); }

/// Scalar binomial, zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);

/// m! = m_0! m_1! ... m_{d-1}!
Integer factorial(const MultiIndex& m);
/// Product of componentwise binomials; zero when any n_i > m_i.
Integer binomial(const MultiIndex& m, const MultiIndex& n);

/// All m with |m| <= p in graded-lexicographic order; size binom(d+p, d).
std::vector<MultiIndex> enumerate(int d, int p);

}  // namespace jetvir
