#include "orderone/root_of_unity.hpp"

#include <numeric>

#include "orderone/arith.hpp"
#include "orderone/errors.hpp"

namespace orderone {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("root of unity: denominator must be positive");
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const __int128 e = static_cast<__int128>(num_) * mod(k, den_);
  return RootOfUnity(static_cast<std::int64_t>(e % den_), den_);
}

std::int64_t RootOfUnity::exponent_at(std::int64_t level) const {
  if (level <= 0 || level % den_ != 0) {
    throw InvalidInput("root of unity " + to_string() + " does not lie in level " +
                       std::to_string(level));
  }
  return num_ * (level / den_);
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InvalidInput("root of unity must look like k/n: " + text);
  std::size_t used_num = 0;
  std::size_t used_den = 0;
  std::int64_t num = 0;
  std::int64_t den = 0;
  try {
    num = std::stoll(text.substr(0, slash), &used_num);
    den = std::stoll(text.substr(slash + 1), &used_den);
  } catch (const std::exception&) {
    throw InvalidInput("root of unity must look like k/n: " + text);
  }
  if (used_num != slash || used_den != text.size() - slash - 1) {
    throw InvalidInput("root of unity must look like k/n: " + text);
  }
  return RootOfUnity(num, den);
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t l = static_cast<std::int64_t>(
      checked_lcm(static_cast<std::uint64_t>(a.den()), static_cast<std::uint64_t>(b.den())));
  return RootOfUnity(a.exponent_at(l) + b.exponent_at(l), l);
}

}  // namespace orderone
