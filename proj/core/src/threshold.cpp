#include "pathmaj/threshold.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pathmaj {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t parse_u64(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed threshold '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Threshold::Threshold(std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0 || num >= den) {
    throw std::invalid_argument("threshold must satisfy 0 < tau < 1, got " +
                                std::to_string(num) + "/" + std::to_string(den));
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Threshold Threshold::parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed threshold '" + std::string(text) + "'");
  }
  if (frac_part.size() > 18) {
    throw std::invalid_argument("threshold '" + std::string(text) + "' has too many decimals");
  }
  const std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part, text);
  const std::uint64_t frac = frac_part.empty() ? 0 : parse_u64(frac_part, text);
  if (whole != 0) {
    throw std::invalid_argument("threshold must satisfy 0 < tau < 1, got '" + std::string(text) + "'");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  return Threshold(frac, den);
}

Threshold Threshold::parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("expected p/q, got '" + std::string(text) + "'");
  }
  return Threshold(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
}

bool Threshold::exceeded_by(std::uint64_t count, std::uint64_t length) const {
  return static_cast<u128>(count) * den_ > static_cast<u128>(num_) * length;
}

bool Threshold::admits_minority(std::uint64_t count, std::uint64_t length) const {
  return count >= 1 && !exceeded_by(count, length);
}

Threshold Threshold::halved() const {
  if (num_ % 2 == 0) return Threshold(num_ / 2, den_);
  return Threshold(num_, den_ * 2);
}

std::uint64_t Threshold::ceil_inverse() const { return (den_ + num_ - 1) / num_; }

std::uint64_t Threshold::floor_scaled_inverse(std::uint64_t k) const {
  return static_cast<std::uint64_t>(static_cast<u128>(k) * den_ / num_);
}

std::string Threshold::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

}  // namespace pathmaj
