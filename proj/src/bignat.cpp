#include "hdrr/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdrr {

BigNat::BigNat(std::uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
    v /= kLimbBase;
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_digits_base100(const std::vector<std::uint32_t>& digits) {
  BigNat r;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    // r = r * 100 + *it
    std::uint64_t carry = *it;
    for (auto& limb : r.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * kDigitBase + carry;
      limb = static_cast<std::uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
    }
    while (carry) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
      carry /= kLimbBase;
    }
  }
  r.trim();
  return r;
}

std::vector<std::uint32_t> BigNat::to_digits_base100() const {
  std::vector<std::uint32_t> digits;
  std::vector<std::uint32_t> cur = limbs_;
  while (!cur.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      std::uint64_t v = rem * kLimbBase + cur[i];
      cur[i] = static_cast<std::uint32_t>(v / kDigitBase);
      rem = v % kDigitBase;
    }
    digits.push_back(static_cast<std::uint32_t>(rem));
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  return digits;
}

BigNat& BigNat::operator+=(const BigNat& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(v % kLimbBase);
    carry = v / kLimbBase;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (*this < o) throw std::underflow_error("BigNat subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (v < 0) {
      v += kLimbBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(v);
  }
  trim();
  return *this;
}

bool BigNat::operator<(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  return false;
}

bool BigNat::is_even() const { return limbs_.empty() || limbs_[0] % 2 == 0; }

BigNat BigNat::half() const {
  BigNat r;
  r.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t v = rem * kLimbBase + limbs_[i];
    r.limbs_[i] = static_cast<std::uint32_t>(v / 2);
    rem = v % 2;
  }
  r.trim();
  return r;
}

std::string BigNat::str() const {
  if (limbs_.empty()) return "0";
  std::string s = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

BigNat BigNat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty BigNat literal");
  BigNat r;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad BigNat literal: " + s);
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t v = static_cast<std::uint64_t>(limb) * 10 + carry;
      limb = static_cast<std::uint32_t>(v % kLimbBase);
      carry = v / kLimbBase;
    }
    while (carry) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
      carry /= kLimbBase;
    }
  }
  r.trim();
  return r;
}

}  // namespace hdrr
