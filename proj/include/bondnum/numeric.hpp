#pragma once

// Exact and certified arithmetic: integer roots, exact rationals, and
// outward-rounded MPFR intervals used to take floors and ceilings of the
// irrational expressions appearing in the bound formulas.

#include <mpfr.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bondnum {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Integer helpers

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Largest r with r*r <= x.
inline std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && (r > x / r)) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// Largest r >= 0 with r^k <= x, for x >= 0.
inline BigInt iroot(const BigInt& x, unsigned k) {
  if (x < 0) throw std::domain_error("iroot of a negative number");
  if (k == 0) throw std::domain_error("iroot with k = 0");
  if (x < 2 || k == 1) return x;
  BigInt lo = 0;
  BigInt hi = 1;
  while (ipow(hi, k) <= x) hi <<= 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, k) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

/// Exact test of x >= base^(p/q) for x, base >= 0: compares x^q with base^p.
inline bool at_least_power(std::int64_t x, std::int64_t base, unsigned p, unsigned q) {
  if (x < 0 || base < 0) throw std::domain_error("at_least_power expects nonnegative arguments");
  return ipow(BigInt(x), q) >= ipow(BigInt(base), p);
}

/// floor((c0 + sqrt(c1)) / c2) for c1 >= 0, c2 > 0.
inline std::int64_t floor_sqrt_expr(std::int64_t c0, std::int64_t c1, std::int64_t c2) {
  if (c1 < 0 || c2 <= 0) throw std::domain_error("floor_sqrt_expr: need c1 >= 0 and c2 > 0");
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(c1)));
  return floor_div(c0 + s, c2);
}

/// ceil((c0 + sqrt(c1)) / c2) for c1 >= 0, c2 > 0. When c1 is not a perfect
/// square the quotient is irrational, so its ceiling is floor + 1.
inline std::int64_t ceil_sqrt_expr(std::int64_t c0, std::int64_t c1, std::int64_t c2) {
  if (c1 < 0 || c2 <= 0) throw std::domain_error("ceil_sqrt_expr: need c1 >= 0 and c2 > 0");
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(c1)));
  if (s * s == c1) return ceil_div(c0 + s, c2);
  return floor_div(c0 + s, c2) + 1;
}

// ---------------------------------------------------------------------------
// ExactRational

class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_ == 0) throw std::domain_error("ExactRational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  ExactRational operator-() const { return {-num_, den_}; }
  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
  ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const BigInt l = a.num_ * b.den_;
    const BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }
  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("ExactRational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
};

// ---------------------------------------------------------------------------
// IntervalReal

inline constexpr mpfr_prec_t kDefaultIntervalPrecision = 128;
inline constexpr mpfr_prec_t kMaxIntervalPrecision = 1024;

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpfr(Mpfr&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Mpfr& operator=(Mpfr o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

inline void set_bigint(mpfr_ptr dst, const BigInt& x, mpfr_rnd_t rnd) {
  mpfr_set_str(dst, x.str().c_str(), 10, rnd);
}

}  // namespace detail

/// Closed interval [lower, upper] with outward-rounded endpoints; every
/// operation returns an interval containing the exact result.
class IntervalReal {
 public:
  explicit IntervalReal(mpfr_prec_t prec = kDefaultIntervalPrecision) : lo_(prec), hi_(prec) {}

  static IntervalReal integer(const BigInt& x, mpfr_prec_t prec = kDefaultIntervalPrecision) {
    IntervalReal r(prec);
    detail::set_bigint(r.lo_.get(), x, MPFR_RNDD);
    detail::set_bigint(r.hi_.get(), x, MPFR_RNDU);
    return r;
  }

  static IntervalReal rational(const ExactRational& q, mpfr_prec_t prec = kDefaultIntervalPrecision) {
    return integer(q.numerator(), prec) / integer(q.denominator(), prec);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_.get()); }
  double lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }

  /// True when the interval certainly lies below / above the rational q.
  bool certainly_below(const ExactRational& q) const { return compare_endpoint(hi_, q) < 0; }
  bool certainly_above(const ExactRational& q) const { return compare_endpoint(lo_, q) > 0; }

  friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    IntervalReal r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    const mpfr_prec_t p = std::max(a.precision(), b.precision());
    IntervalReal r(p);
    detail::Mpfr t(p);
    bool first = true;
    for (const detail::Mpfr* x : {&a.lo_, &a.hi_}) {
      for (const detail::Mpfr* y : {&b.lo_, &b.hi_}) {
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
        first = false;
      }
    }
    return r;
  }

  friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
    if (b.contains_zero()) throw std::domain_error("IntervalReal division by an interval containing zero");
    IntervalReal inv(b.precision());
    mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * inv;
  }

  IntervalReal operator-() const {
    IntervalReal r(precision());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
  }

  IntervalReal sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("IntervalReal sqrt of a possibly negative value");
    IntervalReal r(precision());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }

  IntervalReal log() const {
    if (!positive()) throw std::domain_error("IntervalReal log of a possibly nonpositive value");
    IntervalReal r(precision());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }

  /// x^(p/q) for x >= 0, evaluated as the q-th root of x^p.
  IntervalReal pow_ratio(unsigned long p, unsigned long q) const {
    if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("IntervalReal pow_ratio of a possibly negative value");
    if (q == 0) throw std::domain_error("IntervalReal pow_ratio with zero denominator");
    IntervalReal r(precision());
    detail::Mpfr t(precision());
    mpfr_pow_ui(t.get(), lo_.get(), p, MPFR_RNDD);
    mpfr_rootn_ui(r.lo_.get(), t.get(), q, MPFR_RNDD);
    mpfr_pow_ui(t.get(), hi_.get(), p, MPFR_RNDU);
    mpfr_rootn_ui(r.hi_.get(), t.get(), q, MPFR_RNDU);
    return r;
  }

  /// floor of every point of the interval, if they all agree.
  std::optional<std::int64_t> floor_if_determined() const { return rounded_if_determined(MPFR_RNDD); }
  /// ceiling of every point of the interval, if they all agree.
  std::optional<std::int64_t> ceil_if_determined() const { return rounded_if_determined(MPFR_RNDU); }

 private:
  std::optional<std::int64_t> rounded_if_determined(mpfr_rnd_t dir) const {
    detail::Mpfr a(precision());
    detail::Mpfr b(precision());
    mpfr_rint(a.get(), lo_.get(), dir);
    mpfr_rint(b.get(), hi_.get(), dir);
    if (!mpfr_equal_p(a.get(), b.get())) return std::nullopt;
    if (!mpfr_fits_slong_p(a.get(), MPFR_RNDN)) throw std::overflow_error("IntervalReal result out of range");
    return static_cast<std::int64_t>(mpfr_get_si(a.get(), MPFR_RNDN));
  }

  static int compare_endpoint(const detail::Mpfr& e, const ExactRational& q) {
    // Compare e against num/den exactly: e * den vs num, done in extended precision.
    const mpfr_prec_t p = mpfr_get_prec(e.get()) + static_cast<mpfr_prec_t>(msb_bits(q.denominator())) + 2;
    detail::Mpfr lhs(p);
    detail::Mpfr den(p);
    detail::Mpfr num(std::max<mpfr_prec_t>(p, static_cast<mpfr_prec_t>(msb_bits(q.numerator())) + 2));
    detail::set_bigint(den.get(), q.denominator(), MPFR_RNDN);
    detail::set_bigint(num.get(), q.numerator(), MPFR_RNDN);
    mpfr_mul(lhs.get(), e.get(), den.get(), MPFR_RNDN);
    return mpfr_cmp(lhs.get(), num.get());
  }

  static unsigned msb_bits(const BigInt& x) {
    return x == 0 ? 1U : static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1U;
  }

  detail::Mpfr lo_;
  detail::Mpfr hi_;
};

// ---------------------------------------------------------------------------
// Certified ceilings and floors

/// ceil(base^(num/den)) for 0 < num/den < 1. Exact when base^num is a perfect
/// den-th power, otherwise the value is irrational and interval refinement
/// terminates.
inline std::int64_t ceil_power(std::int64_t base, unsigned num, unsigned den) {
  if (base < 0) throw std::domain_error("ceil_power expects a nonnegative base");
  if (den == 0 || num == 0 || num >= den) throw std::domain_error("ceil_power expects 0 < num/den < 1");
  if (base == 0) return 0;
  const BigInt powered = ipow(BigInt(base), num);
  const BigInt r = iroot(powered, den);
  if (ipow(r, den) == powered) return r.convert_to<std::int64_t>();
  for (mpfr_prec_t prec = kDefaultIntervalPrecision; prec <= kMaxIntervalPrecision; prec *= 2) {
    if (auto c = IntervalReal::integer(base, prec).pow_ratio(num, den).ceil_if_determined()) return *c;
  }
  throw std::runtime_error("ceil_power: interval failed to separate");
}

/// ceil(ln(x)^power) for x >= 1, power in {1, 2}.
inline std::int64_t ceil_log_power(std::int64_t x, int power) {
  if (x < 1) throw std::domain_error("ceil_log_power expects x >= 1");
  if (power != 1 && power != 2) throw std::domain_error("ceil_log_power supports powers 1 and 2");
  if (x == 1) return 0;
  for (mpfr_prec_t prec = kDefaultIntervalPrecision; prec <= kMaxIntervalPrecision; prec *= 2) {
    IntervalReal l = IntervalReal::integer(x, prec).log();
    if (power == 2) l = l * l;
    if (auto c = l.ceil_if_determined()) return *c;
  }
  throw std::runtime_error("ceil_log_power: interval failed to separate");
}

/// The closed-form real bounds whose floors are taken.
enum class BoundShape {
  EulerOrientable,           // 11 + 24(h-1)(3 - sqrt(16h+1)) / (1 - 8h)
  EulerNonorientable,        // 11 + 12(k-2)(3 - sqrt(8k+1)) / (1 - 4k)
  TriangleFreeOrientable,    // 7 + 8(h-1) / (1 + sqrt(2h))
  TriangleFreeNonorientable  // 7 + 4(k-2) / (1 + sqrt(k))
};

namespace detail {

struct ShapeTerms {
  std::int64_t base;       // additive constant
  std::int64_t scale;      // multiplies the numerator
  std::int64_t radicand;
  bool radical_in_numerator;  // scale*(3 - r)/den  vs  scale/(1 + r)
  std::int64_t den;        // used when the radical is in the numerator
};

inline ShapeTerms shape_terms(BoundShape shape, std::int64_t g) {
  switch (shape) {
    case BoundShape::EulerOrientable: return {11, 24 * (g - 1), 16 * g + 1, true, 1 - 8 * g};
    case BoundShape::EulerNonorientable: return {11, 12 * (g - 2), 8 * g + 1, true, 1 - 4 * g};
    case BoundShape::TriangleFreeOrientable: return {7, 8 * (g - 1), 2 * g, false, 0};
    case BoundShape::TriangleFreeNonorientable: return {7, 4 * (g - 2), g, false, 0};
  }
  throw std::logic_error("unknown BoundShape");
}

}  // namespace detail

/// Floor of a closed-form bound, certified by interval refinement. If the
/// radicand is a perfect square the value is rational and evaluated exactly.
inline std::int64_t floor_real_bound(BoundShape shape, std::int64_t genus) {
  if (genus < 1) throw std::domain_error("floor_real_bound expects genus >= 1");
  const detail::ShapeTerms t = detail::shape_terms(shape, genus);
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(t.radicand)));
  if (s * s == t.radicand) {
    ExactRational v = t.radical_in_numerator ? ExactRational(BigInt(t.scale * (3 - s)), BigInt(t.den))
                                             : ExactRational(BigInt(t.scale), BigInt(1 + s));
    return (v + ExactRational(t.base)).floor().convert_to<std::int64_t>();
  }
  for (mpfr_prec_t prec = kDefaultIntervalPrecision; prec <= kMaxIntervalPrecision; prec *= 2) {
    const IntervalReal root = IntervalReal::integer(t.radicand, prec).sqrt();
    IntervalReal frac = t.radical_in_numerator
                            ? IntervalReal::integer(t.scale, prec) * (IntervalReal::integer(3, prec) - root) /
                                  IntervalReal::integer(t.den, prec)
                            : IntervalReal::integer(t.scale, prec) / (IntervalReal::integer(1, prec) + root);
    if (auto f = (IntervalReal::integer(t.base, prec) + frac).floor_if_determined()) return *f;
  }
  throw std::runtime_error("floor_real_bound: interval failed to separate");
}

}  // namespace bondnum
