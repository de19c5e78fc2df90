#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

#include "daglim/error.hpp"

namespace daglim {

/// Default equality tolerance for the complex-double backend. Exact
/// backends ignore it.
inline constexpr double kDefaultEpsilon = 1e-9;

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Complex-double scalar
// ---------------------------------------------------------------------------

struct Cnum {
  std::complex<double> v{};

  constexpr Cnum() = default;
  constexpr Cnum(double re) : v(re) {}
  constexpr Cnum(double re, double im) : v(re, im) {}
  Cnum(std::complex<double> z) : v(z) {}

  static constexpr bool is_exact = false;
  static constexpr bool has_negation = true;
  static constexpr bool has_sqrt = true;
  static constexpr const char* backend_name() { return "complex-f64"; }

  static Cnum zero() { return Cnum{}; }
  static Cnum one() { return Cnum{1.0}; }
  static Cnum from_ratio(std::int64_t p, std::int64_t q) {
    if (q == 0) throw Error(Errc::ZeroDenominator, "from_ratio: q = 0");
    return Cnum{static_cast<double>(p) / static_cast<double>(q)};
  }

  friend Cnum operator+(Cnum a, Cnum b) { return Cnum{a.v + b.v}; }
  friend Cnum operator*(Cnum a, Cnum b) { return Cnum{a.v * b.v}; }
  friend Cnum operator-(Cnum a) { return Cnum{-a.v}; }
  friend Cnum operator-(Cnum a, Cnum b) { return Cnum{a.v - b.v}; }
};

inline Cnum conj(Cnum a) { return Cnum{std::conj(a.v)}; }
inline double abs_val(Cnum a) { return std::abs(a.v); }
inline bool approx_eq(Cnum a, Cnum b, double eps) { return std::abs(a.v - b.v) <= eps; }
inline bool is_zero(Cnum a, double eps) { return std::abs(a.v) <= eps; }

// ---------------------------------------------------------------------------
// Exact rational scalar (trivial involution)
// ---------------------------------------------------------------------------

struct Rat {
  BigRational v{};

  Rat() = default;
  Rat(int n) : v(n) {}
  Rat(std::int64_t p, std::int64_t q) {
    if (q == 0) throw Error(Errc::ZeroDenominator, "rational with q = 0");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    v = BigRational(BigInt(p), BigInt(q));
  }
  explicit Rat(BigRational r) : v(std::move(r)) {}

  static constexpr bool is_exact = true;
  static constexpr bool has_negation = true;
  static constexpr bool has_sqrt = false;
  static constexpr const char* backend_name() { return "rational"; }

  static Rat zero() { return Rat{}; }
  static Rat one() { return Rat{1}; }
  static Rat from_ratio(std::int64_t p, std::int64_t q) { return Rat{p, q}; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat{a.v + b.v}; }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat{a.v * b.v}; }
  friend Rat operator-(const Rat& a) { return Rat{-a.v}; }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat{a.v - b.v}; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
};

inline Rat conj(const Rat& a) { return a; }
inline double abs_val(const Rat& a) { return std::abs(a.v.convert_to<double>()); }
inline bool approx_eq(const Rat& a, const Rat& b, double) { return a.v == b.v; }
inline bool is_zero(const Rat& a, double) { return a.v == 0; }

// ---------------------------------------------------------------------------
// Boolean semiring scalar: or / and, no subtraction, † is the identity
// ---------------------------------------------------------------------------

struct Bit {
  bool v = false;

  constexpr Bit() = default;
  constexpr Bit(bool b) : v(b) {}
  constexpr Bit(int n) : v(n != 0) {}

  static constexpr bool is_exact = true;
  static constexpr bool has_negation = false;
  static constexpr bool has_sqrt = false;
  static constexpr const char* backend_name() { return "boolean"; }

  static Bit zero() { return Bit{false}; }
  static Bit one() { return Bit{true}; }
  static Bit from_ratio(std::int64_t p, std::int64_t q) {
    if (q == 0) throw Error(Errc::ZeroDenominator, "from_ratio: q = 0");
    return Bit{p != 0};
  }

  friend Bit operator+(Bit a, Bit b) { return Bit{a.v || b.v}; }
  friend Bit operator*(Bit a, Bit b) { return Bit{a.v && b.v}; }
  friend bool operator==(Bit a, Bit b) { return a.v == b.v; }
};

inline Bit conj(Bit a) { return a; }
inline double abs_val(Bit a) { return a.v ? 1.0 : 0.0; }
inline bool approx_eq(Bit a, Bit b, double) { return a.v == b.v; }
inline bool is_zero(Bit a, double) { return !a.v; }

// ---------------------------------------------------------------------------

template <class S>
concept ScalarType = requires(const S a, const S b, double eps) {
  { S::zero() } -> std::convertible_to<S>;
  { S::one() } -> std::convertible_to<S>;
  { S::from_ratio(std::int64_t{1}, std::int64_t{2}) } -> std::convertible_to<S>;
  { a + b } -> std::convertible_to<S>;
  { a* b } -> std::convertible_to<S>;
  { conj(a) } -> std::convertible_to<S>;
  { approx_eq(a, b, eps) } -> std::convertible_to<bool>;
  { is_zero(a, eps) } -> std::convertible_to<bool>;
  { abs_val(a) } -> std::convertible_to<double>;
  { S::is_exact } -> std::convertible_to<bool>;
};

static_assert(ScalarType<Cnum> && ScalarType<Rat> && ScalarType<Bit>);

/// Square root of a self-adjoint nonnegative complex scalar. Rejects inputs
/// with an imaginary part or a real part below -eps.
inline Cnum sqrt_nonneg(Cnum a, double eps = kDefaultEpsilon) {
  if (std::abs(a.v.imag()) > eps)
    throw Error(Errc::NegativeInput, "sqrt_nonneg: input is not self-adjoint");
  if (a.v.real() < -eps)
    throw Error(Errc::NegativeInput, "sqrt_nonneg: input is negative");
  return Cnum{std::sqrt(std::max(a.v.real(), 0.0))};
}

}  // namespace daglim
