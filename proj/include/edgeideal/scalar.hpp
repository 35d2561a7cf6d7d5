#ifndef EDGEIDEAL_SCALAR_HPP
#define EDGEIDEAL_SCALAR_HPP

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

// Coefficient scalars for exact elimination. Both model an integral domain with
// exact division, which is all fraction-free elimination needs.

namespace edgeideal {

/// 128-bit integer that throws std::overflow_error instead of wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  friend CheckedInt operator+(CheckedInt x, CheckedInt y) {
    CheckedInt r;
    if (__builtin_add_overflow(x.v_, y.v_, &r.v_)) overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt x, CheckedInt y) {
    CheckedInt r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r.v_)) overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt x, CheckedInt y) {
    CheckedInt r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r.v_)) overflow();
    return r;
  }
  /// Exact division; a nonzero remainder is a logic error and throws.
  friend CheckedInt operator/(CheckedInt x, CheckedInt y) {
    if (y.v_ == 0) throw std::domain_error("CheckedInt: division by zero");
    if (y.v_ == -1) return -x;
    if (x.v_ % y.v_ != 0) throw std::domain_error("CheckedInt: inexact division");
    CheckedInt r;
    r.v_ = x.v_ / y.v_;
    return r;
  }
  CheckedInt operator-() const { return CheckedInt() - *this; }
  CheckedInt& operator+=(CheckedInt y) { return *this = *this + y; }
  CheckedInt& operator-=(CheckedInt y) { return *this = *this - y; }
  CheckedInt& operator*=(CheckedInt y) { return *this = *this * y; }

  friend bool operator==(CheckedInt x, CheckedInt y) { return x.v_ == y.v_; }
  friend bool operator<(CheckedInt x, CheckedInt y) { return x.v_ < y.v_; }

  bool is_zero() const { return v_ == 0; }
  CheckedInt magnitude() const { return v_ < 0 ? -*this : *this; }

 private:
  [[noreturn]] static void overflow() {
    throw std::overflow_error("CheckedInt: exact elimination left the 128-bit range");
  }
  __extension__ __int128 v_ = 0;
};

/// Residues modulo a prime P < 2^31.
template <std::uint32_t P>
class ModP {
  static_assert(P >= 2 && P < (1u << 31));

 public:
  constexpr ModP() = default;
  constexpr ModP(long long v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  friend ModP operator+(ModP x, ModP y) { return raw((x.v_ + y.v_) % P); }
  friend ModP operator-(ModP x, ModP y) { return raw((x.v_ + P - y.v_) % P); }
  friend ModP operator*(ModP x, ModP y) {
    return raw(static_cast<std::uint32_t>((std::uint64_t{x.v_} * y.v_) % P));
  }
  friend ModP operator/(ModP x, ModP y) {
    if (y.v_ == 0) throw std::domain_error("ModP: division by zero");
    return x * y.inverse();
  }
  ModP operator-() const { return ModP() - *this; }
  ModP& operator+=(ModP y) { return *this = *this + y; }
  ModP& operator-=(ModP y) { return *this = *this - y; }
  ModP& operator*=(ModP y) { return *this = *this * y; }

  friend bool operator==(ModP x, ModP y) { return x.v_ == y.v_; }
  // Only used for pivot preference; any nonzero residue is as good as another.
  friend bool operator<(ModP x, ModP y) { return x.v_ < y.v_; }

  bool is_zero() const { return v_ == 0; }
  ModP magnitude() const { return *this; }
  std::uint32_t value() const { return v_; }

 private:
  static ModP raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  ModP inverse() const {
    // Fermat: a^(P-2).
    ModP result(1), base = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1u) result *= base;
      base *= base;
    }
    return result;
  }
  std::uint32_t v_ = 0;
};

}  // namespace edgeideal

namespace Eigen {

template <>
struct NumTraits<edgeideal::CheckedInt> : GenericNumTraits<edgeideal::CheckedInt> {
  using Real = edgeideal::CheckedInt;
  using NonInteger = edgeideal::CheckedInt;
  using Literal = edgeideal::CheckedInt;
  using Nested = edgeideal::CheckedInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 4
  };
};

template <std::uint32_t P>
struct NumTraits<edgeideal::ModP<P>> : GenericNumTraits<edgeideal::ModP<P>> {
  using Real = edgeideal::ModP<P>;
  using NonInteger = edgeideal::ModP<P>;
  using Literal = edgeideal::ModP<P>;
  using Nested = edgeideal::ModP<P>;
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen

#endif  // EDGEIDEAL_SCALAR_HPP
