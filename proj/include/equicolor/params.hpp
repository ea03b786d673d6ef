#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equicolor {

using Int = std::int64_t;

/// Thrown when an argument lies outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact floor/ceil of a/b for b > 0. No floating point anywhere in the formulas.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

constexpr Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

/// Instance parameters: m parts (first factor K_m), n vertices per part
/// (second factor K_n), and the allowed class-size gap r.
struct Params {
  Int m = 1;
  Int n = 1;
  Int r = 1;

  Params() = default;
  Params(Int m_, Int n_, Int r_) : m(m_), n(n_), r(r_) {
    if (m < 1) throw DomainError("m must be >= 1 (got " + std::to_string(m) + ")");
    if (n < 1) throw DomainError("n must be >= 1 (got " + std::to_string(n) + ")");
    if (r < 1) throw DomainError("r must be >= 1 (got " + std::to_string(r) + ")");
  }

  Int vertices() const { return m * n; }

  /// K_m x K_n is isomorphic to K_n x K_m; the canonical orientation has m <= n.
  Params canonical() const { return m <= n ? *this : Params(n, m, r); }
  bool is_canonical() const { return m <= n; }

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace equicolor
