#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "daglim/json_io.hpp"
#include "daglim/scalars.hpp"

namespace daglim {

/// An involutive commutative semiring presented as an instance handle:
/// operations, equality, and seeded sampling over an element type.
template <class R>
concept InvolutiveSemiring = requires(const R r, const typename R::Element a,
                                      const typename R::Element b, std::uint64_t s) {
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.conj(a) } -> std::convertible_to<typename R::Element>;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.equals(a, b) } -> std::convertible_to<bool>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.sample(s) } -> std::convertible_to<typename R::Element>;
  { r.sample_nonzero(s) } -> std::convertible_to<typename R::Element>;
  { r.name() } -> std::convertible_to<std::string>;
  { r.element_json(a) } -> std::convertible_to<json>;
};

// --------------------------------------------------------------------------
// Library models
// --------------------------------------------------------------------------

/// Arbitrary-precision naturals with the trivial involution.
struct NatSemiring {
  using Element = BigInt;
  BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt conj(const BigInt& a) const { return a; }
  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  bool equals(const BigInt& a, const BigInt& b) const { return a == b; }
  bool is_zero(const BigInt& a) const { return a == 0; }
  BigInt sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return BigInt(std::uniform_int_distribution<int>(0, 40)(rng));
  }
  BigInt sample_nonzero(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return BigInt(std::uniform_int_distribution<int>(1, 40)(rng));
  }
  std::string name() const { return "nat"; }
  json element_json(const BigInt& a) const { return a.str(); }
};

/// Nonnegative exact rationals with the trivial involution.
struct NonnegRationalSemiring {
  using Element = BigRational;
  BigRational add(const BigRational& a, const BigRational& b) const { return a + b; }
  BigRational mul(const BigRational& a, const BigRational& b) const { return a * b; }
  BigRational conj(const BigRational& a) const { return a; }
  BigRational zero() const { return 0; }
  BigRational one() const { return 1; }
  bool equals(const BigRational& a, const BigRational& b) const { return a == b; }
  bool is_zero(const BigRational& a) const { return a == 0; }
  BigRational sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> p(0, 24), q(1, 9);
    return BigRational(p(rng), q(rng));
  }
  BigRational sample_nonzero(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> p(1, 24), q(1, 9);
    return BigRational(p(rng), q(rng));
  }
  std::string name() const { return "rational>=0"; }
  json element_json(const BigRational& a) const {
    return boost::multiprecision::numerator(a).str() + "/" +
           boost::multiprecision::denominator(a).str();
  }
};

/// Gaussian integers a + bi; the involution negates the imaginary part.
struct GaussianIntSemiring {
  struct Element {
    BigInt re, im;
  };
  Element add(const Element& a, const Element& b) const { return {a.re + b.re, a.im + b.im}; }
  Element mul(const Element& a, const Element& b) const {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Element conj(const Element& a) const { return {a.re, -a.im}; }
  Element zero() const { return {0, 0}; }
  Element one() const { return {1, 0}; }
  bool equals(const Element& a, const Element& b) const { return a.re == b.re && a.im == b.im; }
  bool is_zero(const Element& a) const { return a.re == 0 && a.im == 0; }
  Element sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> g(-9, 9);
    return {BigInt(g(rng)), BigInt(g(rng))};
  }
  Element sample_nonzero(std::uint64_t seed) const {
    for (std::uint64_t k = 0;; ++k) {
      Element e = sample(seed + 0x51ed2701 * (k + 1));
      if (!is_zero(e)) return e;
    }
  }
  std::string name() const { return "gauss"; }
  json element_json(const Element& a) const {
    return json{{"re", a.re.str()}, {"im", a.im.str()}};
  }
};

/// The scalar semiring of a matrix backend, with the backend's tolerance for
/// equality and a sampling floor so "nonzero" stays numerically meaningful.
template <ScalarType S>
struct BackendScalarSemiring {
  using Element = S;
  double eps = kDefaultEpsilon;
  double nonzero_floor = 1e-3;

  S add(const S& a, const S& b) const { return a + b; }
  S mul(const S& a, const S& b) const { return a * b; }
  S conj(const S& a) const { return daglim::conj(a); }
  S zero() const { return S::zero(); }
  S one() const { return S::one(); }
  bool equals(const S& a, const S& b) const { return approx_eq(a, b, eps); }
  bool is_zero(const S& a) const { return daglim::is_zero(a, eps); }
  S sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    if constexpr (std::is_same_v<S, Cnum>) {
      std::uniform_int_distribution<int> grid(-16, 16);
      return Cnum{grid(rng) / 8.0, grid(rng) / 8.0};
    } else if constexpr (std::is_same_v<S, Rat>) {
      std::uniform_int_distribution<int> p(-12, 12), q(1, 8);
      return Rat{p(rng), q(rng)};
    } else {
      return Bit{std::uniform_int_distribution<int>(0, 1)(rng) == 1};
    }
  }
  S sample_nonzero(std::uint64_t seed) const {
    for (std::uint64_t k = 0;; ++k) {
      S e = sample(seed + 0x9e3779b9 * (k + 1));
      if (abs_val(e) > nonzero_floor) return e;
    }
  }
  std::string name() const { return std::string("scalars(") + S::backend_name() + ")"; }
  json element_json(const S& a) const { return scalar_to_json(a); }
};

// --------------------------------------------------------------------------
// Difference ring D(S): formal pairs a - b, never canonicalized; equality is
// the cross relation a + d = c + b, which needs cancellable addition in S to
// be transitive.
// --------------------------------------------------------------------------

template <InvolutiveSemiring R>
struct DifferenceRing {
  struct Element {
    typename R::Element pos, neg;
  };
  R base;

  Element embed(const typename R::Element& a) const { return {a, base.zero()}; }
  Element add(const Element& x, const Element& y) const {
    return {base.add(x.pos, y.pos), base.add(x.neg, y.neg)};
  }
  Element mul(const Element& x, const Element& y) const {
    return {base.add(base.mul(x.pos, y.pos), base.mul(x.neg, y.neg)),
            base.add(base.mul(x.pos, y.neg), base.mul(x.neg, y.pos))};
  }
  Element negate(const Element& x) const { return {x.neg, x.pos}; }
  Element conj(const Element& x) const { return {base.conj(x.pos), base.conj(x.neg)}; }
  Element zero() const { return {base.zero(), base.zero()}; }
  Element one() const { return {base.one(), base.zero()}; }
  bool equals(const Element& x, const Element& y) const {
    return base.equals(base.add(x.pos, y.neg), base.add(y.pos, x.neg));
  }
  bool is_zero(const Element& x) const { return base.equals(x.pos, x.neg); }
  Element sample(std::uint64_t seed) const {
    return {base.sample(2 * seed + 1), base.sample(2 * seed + 2)};
  }
  Element sample_nonzero(std::uint64_t seed) const {
    for (std::uint64_t k = 0;; ++k) {
      Element e = sample(seed + 0x7f4a7c15 * (k + 1));
      if (!is_zero(e)) return e;
    }
  }
  std::string name() const { return "D(" + base.name() + ")"; }
  json element_json(const Element& x) const {
    return json{{"pos", base.element_json(x.pos)}, {"neg", base.element_json(x.neg)}};
  }
};

// --------------------------------------------------------------------------
// Quotient field Q(R): formal fractions s/t with t != 0; equality is the
// cross relation s v = u t, which needs cancellable multiplication in R.
// --------------------------------------------------------------------------

template <InvolutiveSemiring R>
struct FractionField {
  struct Element {
    typename R::Element num, den;
  };
  R base;

  Element make(const typename R::Element& num, const typename R::Element& den) const {
    if (base.is_zero(den)) throw Error(Errc::ZeroDenominator, "fraction with zero denominator");
    return {num, den};
  }
  Element embed(const typename R::Element& r) const { return {r, base.one()}; }
  Element add(const Element& x, const Element& y) const {
    return {base.add(base.mul(x.num, y.den), base.mul(y.num, x.den)), base.mul(x.den, y.den)};
  }
  Element mul(const Element& x, const Element& y) const {
    return {base.mul(x.num, y.num), base.mul(x.den, y.den)};
  }
  Element inverse(const Element& x) const {
    if (base.is_zero(x.num)) throw Error(Errc::ZeroInverse, "inverse of zero fraction");
    return {x.den, x.num};
  }
  Element conj(const Element& x) const { return {base.conj(x.num), base.conj(x.den)}; }
  Element zero() const { return {base.zero(), base.one()}; }
  Element one() const { return {base.one(), base.one()}; }
  bool equals(const Element& x, const Element& y) const {
    return base.equals(base.mul(x.num, y.den), base.mul(y.num, x.den));
  }
  bool is_zero(const Element& x) const { return base.is_zero(x.num); }
  Element sample(std::uint64_t seed) const {
    return {base.sample(2 * seed + 1), base.sample_nonzero(2 * seed + 2)};
  }
  Element sample_nonzero(std::uint64_t seed) const {
    for (std::uint64_t k = 0;; ++k) {
      Element e = sample(seed + 0x2545f491 * (k + 1));
      if (!is_zero(e)) return e;
    }
  }
  std::string name() const { return "Q(" + base.name() + ")"; }
  json element_json(const Element& x) const {
    return json{{"num", base.element_json(x.num)}, {"den", base.element_json(x.den)}};
  }
};

// --------------------------------------------------------------------------
// Probes
// --------------------------------------------------------------------------

struct ProbeReport {
  bool ok = true;
  int violation_at = 0;  // first n with n.1 = 0, when the probe failed
  json witness;          // order probe: the offending nonzero list
  std::string note;
};

/// Checks n.1 != 0 for 1 <= n <= n_max.
template <InvolutiveSemiring R>
ProbeReport characteristic_probe(const R& r, int n_max) {
  if (n_max < 1) throw Error(Errc::BadInput, "characteristic_probe: n_max must be >= 1");
  ProbeReport rep;
  auto acc = r.one();
  for (int n = 1; n <= n_max; ++n) {
    if (r.is_zero(acc)) {
      rep.ok = false;
      rep.violation_at = n;
      rep.note = "n.1 = 0 at n = " + std::to_string(n);
      return rep;
    }
    acc = r.add(acc, r.one());
  }
  rep.note = "characteristic clean up to n_max = " + std::to_string(n_max);
  return rep;
}

/// Samples finite lists of nonzero elements and checks that the sum of
/// squared norms sum a_i . conj(a_i) never vanishes. A zero sum is returned
/// as a witness: evidence against orderability of the fixed field.
template <InvolutiveSemiring R>
ProbeReport order_probe(const R& r, std::uint64_t seed, int trials) {
  if (trials < 1) throw Error(Errc::BadInput, "order_probe: trials must be >= 1");
  ProbeReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 4);
  for (int t = 0; t < trials; ++t) {
    int k = len(rng);
    std::vector<typename R::Element> items;
    auto sum = r.zero();
    for (int i = 0; i < k; ++i) {
      auto a = r.sample_nonzero(rng());
      sum = r.add(sum, r.mul(a, r.conj(a)));
      items.push_back(std::move(a));
    }
    if (r.is_zero(sum)) {
      rep.ok = false;
      rep.witness = json::array();
      for (const auto& a : items) rep.witness.push_back(r.element_json(a));
      rep.note = "sum of squared norms of nonzero elements vanished";
      return rep;
    }
  }
  rep.note = "no vanishing sum of squared norms in " + std::to_string(trials) + " trials";
  return rep;
}

// --------------------------------------------------------------------------
// Backend classification
// --------------------------------------------------------------------------

enum class BackendClass { NonnegativeReals, Reals, ComplexWithConjugation, Other };

inline const char* backend_class_name(BackendClass c) {
  switch (c) {
    case BackendClass::NonnegativeReals: return "NonnegativeReals";
    case BackendClass::Reals: return "Reals";
    case BackendClass::ComplexWithConjugation: return "ComplexWithConjugation";
    case BackendClass::Other: return "Other";
  }
  return "Unknown";
}

struct Classification {
  BackendClass cls = BackendClass::Other;
  std::string reason;
};

/// Reports which of the completeness-theorem hypotheses a backend's scalar
/// semiring satisfies: nontrivial involution, closure under negation, and an
/// element j with j.j = -1 and conj(j) = -j.
template <ScalarType S>
Classification classify_backend(double eps = kDefaultEpsilon) {
  if constexpr (std::is_same_v<S, Cnum>) {
    Cnum j{0.0, 1.0};
    bool involution_nontrivial = !approx_eq(conj(j), j, eps);
    bool j_squares_to_minus_one = approx_eq(j * j, Cnum{-1.0}, eps);
    bool j_antiselfadjoint = approx_eq(conj(j), -j, eps);
    if (involution_nontrivial && j_squares_to_minus_one && j_antiselfadjoint)
      return {BackendClass::ComplexWithConjugation,
              "nontrivial involution; j = i satisfies j*j = -1 and conj(j) = -j"};
    return {BackendClass::Other, "complex backend failed its own j-element checks"};
  } else if constexpr (std::is_same_v<S, Rat>) {
    // Exhibit the absence of a square root of 2 up to a denominator bound.
    bool sqrt2_found = false;
    for (std::int64_t q = 1; q <= 64 && !sqrt2_found; ++q) {
      BigInt p = BigInt(static_cast<std::int64_t>(std::llround(q * 1.41421356237309515)));
      if (p * p == BigInt(2) * BigInt(q) * BigInt(q)) sqrt2_found = true;
    }
    if (sqrt2_found) return {BackendClass::Other, "unexpected rational square root of 2"};
    return {BackendClass::Other,
            "orderable characteristic-0 field, not Dedekind-complete (no p/q with (p/q)^2 = 2 "
            "up to denominator 64)"};
  } else {
    Bit one = Bit::one();
    bool cancellable = !(approx_eq(one + one, one, eps));  // 1 + 1 = 1 breaks cancellation
    return {BackendClass::Other,
            cancellable ? "boolean semiring failed its own idempotence check"
                        : "addition is idempotent (1 + 1 = 1), not cancellable; cannot embed "
                          "in a field"};
  }
}

}  // namespace daglim
