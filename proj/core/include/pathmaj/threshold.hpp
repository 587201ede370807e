#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathmaj {

/// Exact rational threshold tau = num/den with 0 < tau < 1.
///
/// Every frequency test in the library goes through this type so that the
/// strict inequality `count > tau * length` is evaluated in integers and never
/// depends on floating-point rounding.
class Threshold {
 public:
  /// Throws std::invalid_argument unless 0 < num < den. The fraction is reduced.
  Threshold(std::uint64_t num, std::uint64_t den);

  /// Parses a plain decimal such as "0.35" or ".05" exactly.
  static Threshold parse_decimal(std::string_view text);
  /// Parses "p/q".
  static Threshold parse_rational(std::string_view text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// count > tau * length
  bool exceeded_by(std::uint64_t count, std::uint64_t length) const;
  /// 1 <= count <= tau * length
  bool admits_minority(std::uint64_t count, std::uint64_t length) const;

  Threshold halved() const;
  /// ceil(1/tau)
  std::uint64_t ceil_inverse() const;
  /// floor(k/tau)
  std::uint64_t floor_scaled_inverse(std::uint64_t k) const;

  std::string to_string() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

}  // namespace pathmaj
