#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <type_traits>

namespace curveatlas {

// Checked signed 128-bit integer. Every arithmetic operation verifies the
// result fits; on overflow we print the offending operation and abort.
// Documented valid input range for the library is |x| <= 10^6, which leaves
// enormous headroom (products of six such values still fit).
class Int {
 public:
  constexpr Int() : v_(0) {}
  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  constexpr Int(T v) : v_(static_cast<__int128>(v)) {}

  static constexpr Int raw(__int128 v) {
    Int r;
    r.v_ = v;
    return r;
  }

  friend Int operator+(Int a, Int b) {
    if (b.v_ > 0 ? a.v_ > max128() - b.v_ : a.v_ < min128() - b.v_) fail("add");
    return raw(a.v_ + b.v_);
  }
  friend Int operator-(Int a, Int b) {
    if (b.v_ < 0 ? a.v_ > max128() + b.v_ : a.v_ < min128() + b.v_) fail("sub");
    return raw(a.v_ - b.v_);
  }
  Int operator-() const {
    if (v_ == min128()) fail("neg");
    return raw(-v_);
  }
  friend Int operator*(Int a, Int b) {
    if (a.v_ == 0 || b.v_ == 0) return raw(0);
    unsigned __int128 ua = mag(a.v_), ub = mag(b.v_);
    bool neg = (a.v_ < 0) != (b.v_ < 0);
    unsigned __int128 lim =
        neg ? (unsigned __int128)1 << 127 : ((unsigned __int128)1 << 127) - 1;
    if (ua > lim / ub) fail("mul");
    unsigned __int128 ur = ua * ub;
    return raw(neg ? -(__int128)(ur - 1) - 1 : (__int128)ur);
  }
  // Truncating division, divisor must be nonzero.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) fail("div0");
    if (a.v_ == min128() && b.v_ == -1) fail("div");
    return raw(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) fail("mod0");
    return raw(a.v_ % b.v_);
  }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend bool operator!=(Int a, Int b) { return a.v_ != b.v_; }
  friend bool operator<(Int a, Int b) { return a.v_ < b.v_; }
  friend bool operator<=(Int a, Int b) { return a.v_ <= b.v_; }
  friend bool operator>(Int a, Int b) { return a.v_ > b.v_; }
  friend bool operator>=(Int a, Int b) { return a.v_ >= b.v_; }

  Int abs() const { return v_ < 0 ? -*this : *this; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  bool fits_i64() const {
    return v_ >= static_cast<__int128>(INT64_MIN) &&
           v_ <= static_cast<__int128>(INT64_MAX);
  }
  long long as_i64() const {
    if (!fits_i64()) fail("narrow");
    return static_cast<long long>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u = mag(v_);
    char buf[48];
    int i = 48;
    while (u > 0) {
      buf[--i] = static_cast<char>('0' + (int)(u % 10));
      u /= 10;
    }
    std::string s(buf + i, 48 - i);
    return v_ < 0 ? "-" + s : s;
  }

  __int128 raw_value() const { return v_; }

 private:
  __int128 v_;

  static constexpr __int128 max128() {
    return (__int128)(((unsigned __int128)1 << 127) - 1);
  }
  static constexpr __int128 min128() { return -max128() - 1; }
  static unsigned __int128 mag(__int128 v) {
    return v < 0 ? ~(unsigned __int128)v + 1 : (unsigned __int128)v;
  }
  [[noreturn]] static void fail(const char* op) {
    std::fprintf(stderr, "curveatlas: 128-bit integer overflow in '%s'\n", op);
    std::abort();
  }
};

// binomial(n, k) for small k; 0 whenever n < k (including negative n).
inline Int binom(Int n, int k) {
  if (k < 0) return 0;
  if (n < Int(k)) return 0;
  Int num = 1;
  for (int i = 0; i < k; ++i) num *= (n - Int(i));
  Int den = 1;
  for (int i = 2; i <= k; ++i) den *= Int(i);
  return num / den;
}

// Floor division for a possibly negative numerator, positive denominator.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != Int(0) && (a < Int(0)) != (b < Int(0))) q -= 1;
  return q;
}

// Integer square root of a non-negative value.
inline Int isqrt(Int n) {
  if (n < Int(0)) {
    std::fprintf(stderr, "curveatlas: isqrt of negative value\n");
    std::abort();
  }
  if (n == Int(0)) return 0;
  __int128 x = n.raw_value();
  // double seed, then Newton steps until stable
  __int128 r = static_cast<__int128>(__builtin_sqrtl(static_cast<long double>(x)));
  if (r < 1) r = 1;
  for (int i = 0; i < 64; ++i) {
    __int128 nr = (r + x / r) / 2;
    if (nr >= r) break;
    r = nr;
  }
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return Int::raw(r);
}

inline bool is_perfect_square(Int n, Int* root = nullptr) {
  if (n < Int(0)) return false;
  Int r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

}  // namespace curveatlas
