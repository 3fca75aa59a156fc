#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdrr {

// Non-negative arbitrary-precision integer. Number-problem values are built
// from base-100 digit vectors (least significant first); the catalog gadget
// rows keep every column sum below 100, so column arithmetic and integer
// arithmetic coincide.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static constexpr std::uint32_t kDigitBase = 100;

  static BigNat from_digits_base100(const std::vector<std::uint32_t>& digits);
  std::vector<std::uint32_t> to_digits_base100() const;

  BigNat& operator+=(const BigNat& o);
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  // Requires *this >= o.
  BigNat& operator-=(const BigNat& o);
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

  bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigNat& o) const { return !(*this == o); }
  bool operator<(const BigNat& o) const;
  bool operator>(const BigNat& o) const { return o < *this; }
  bool operator<=(const BigNat& o) const { return !(o < *this); }
  bool operator>=(const BigNat& o) const { return !(*this < o); }

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const;
  BigNat half() const;  // floor(v / 2)

  std::string str() const;
  static BigNat parse(const std::string& s);

 private:
  static constexpr std::uint32_t kLimbBase = 1000000000;  // 10^9
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
  void trim();
};

}  // namespace hdrr
