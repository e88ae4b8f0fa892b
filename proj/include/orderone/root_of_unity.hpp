#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace orderone {

// exp(2*pi*i*num/den), kept reduced with 0 <= num < den.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  // Any integer numerator; den >= 1.
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return RootOfUnity(1, 2); }
  // zeta_n^k.
  static RootOfUnity power_of_primitive(std::int64_t k, std::int64_t n) {
    return RootOfUnity(k, n);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }
  bool is_one() const { return den_ == 1; }

  RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }
  RootOfUnity pow(std::int64_t k) const;
  // Exponent of zeta_level, for a level divisible by the order.
  std::int64_t exponent_at(std::int64_t level) const;

  // "k/n".
  std::string to_string() const;
  static RootOfUnity parse(const std::string& text);

  // Ordered by (den, num).
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b);
inline RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  return root_mul(a, b);
}
inline RootOfUnity operator-(const RootOfUnity& a) {
  return root_mul(a, RootOfUnity::minus_one());
}

}  // namespace orderone
