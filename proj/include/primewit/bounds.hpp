#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace primewit {

// Non-negative integer that is exact while it has at most kExactBits bits and
// otherwise an approximation exp2(exp2(...exp2(top))) with `height` levels.
// Approximate magnitudes are kept in the canonical form with the smallest
// height whose top still fits in a long double, so ordering is well defined.
class Magnitude {
 public:
  static constexpr unsigned long kExactBits = 1UL << 22;

  Magnitude() = default;
  Magnitude(unsigned long v) : exact_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Magnitude(mpz_class v);

  // (height, top) view: the value is exp2 applied `height` times to `top`.
  struct Level {
    int height;
    long double top;
  };
  static Magnitude approx(Level l) { return from_level(l); }

  bool is_exact() const { return exact_flag_; }
  const mpz_class& exact() const { return exact_; }

  std::optional<std::uint64_t> to_u64() const;
  // Saturates at SIZE_MAX for anything larger (including approximations).
  std::size_t saturated_size() const;

  // Exact decimal digits, or "~2^(2^(x))"-style text for approximations.
  std::string to_string() const;

  friend std::partial_ordering operator<=>(const Magnitude& a, const Magnitude& b);
  friend bool operator==(const Magnitude& a, const Magnitude& b) {
    return (a <=> b) == 0;
  }

  friend Magnitude operator+(const Magnitude& a, const Magnitude& b);
  friend Magnitude operator*(const Magnitude& a, unsigned long c);

  // 2^a.
  static Magnitude pow2(const Magnitude& a);
  // log2 of this value, as a level-0 long double or an approximation.
  Magnitude log2() const;

  // Canonical level of any magnitude, exact values included.
  Level level() const;

 private:
  static Magnitude from_level(Level l);

  mpz_class exact_ = 0;
  bool exact_flag_ = true;
  Level approx_{0, 0};
};

// Multicolour Ramsey upper bound
//   R(k_1, ..., k_r) <= (sum (k_i - 1))! / prod (k_i - 1)! + 1.
// Every k_i must be >= 1.
Magnitude ramsey_upper_bound(std::span<const Magnitude> sizes);

// Half-split extraction threshold 4^(n-2) (n+1) + 2 (n-2) + 1, n >= 2.
Magnitude half_split_bound(int n);

// Induced-matching threshold h(n, n', t): h(n, n', 2) = n and
//   h(n, n', i) = (n-1) R(n,n,n,n,n,n,n,n',n',h(n,n',i-1)) + 1.
Magnitude matching_bound(int n, const Magnitude& n_prime, int t);

struct StableSetBound {
  Magnitude ramsey;  // R(n1 + n, 2n - 1, n + n2, n + n2 - 1)
  Magnitude size;    // 2^(ramsey + 1): independent-set size that suffices
};
StableSetBound stable_set_bound(int n, const Magnitude& n1, const Magnitude& n2);

struct BoundSpec {
  int n = 0;
  Magnitude half_split;              // g(n)
  std::vector<Magnitude> matching;   // h(n, g(n), t) for t = 2..n
  Magnitude stable_ramsey;           // Ramsey number inside f(n, h(n,g(n),n), g(n))
  Magnitude stable_size;             // f(n, h(n,g(n),n), g(n))
  Magnitude order;                   // R(f, f) upper bound: graphs this large suffice
};

// Requires n >= 3.
BoundSpec bounds(int n);

}  // namespace primewit
