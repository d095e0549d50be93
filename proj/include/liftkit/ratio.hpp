#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace liftkit {

// Exact signed rational with a positive denominator, always
// stored in lowest terms. Counts, gains, lift, and AUC are carried as Ratio so
// that equality tests between metrics are exact.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1);

  // Reduces a wide intermediate; throws Error(out_of_range) if the reduced
  // value does not fit in 64 bits.
  static Ratio from_wide(__int128 num, __int128 den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Decimal rendering with round-half-up (away from zero for negatives),
  // computed from the exact value rather than from value().
  std::string fixed(int decimals) const;
  // "num/den", or just "num" for integers.
  std::string exact() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Parses a plain decimal such as "0.117", "12", or "-3.5" exactly.
// Exponents are not accepted. Throws Error(parse).
Ratio parse_decimal(std::string_view text);

}  // namespace liftkit
