#include "liftkit/ratio.hpp"

#include <limits>

#include "liftkit/error.hpp"

namespace liftkit {
namespace {

using wide = __int128;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string wide_to_string(wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Ratio Ratio::from_wide(wide num, wide den) {
  if (den == 0) throw Error(ErrorCode::undefined_ratio, "ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw Error(ErrorCode::out_of_range, "ratio overflows 64-bit storage");
  Ratio r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Ratio::fixed(int decimals) const {
  if (decimals < 0 || decimals > 18)
    throw Error(ErrorCode::invalid_argument, "precision must be in 0..18");
  wide scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  bool neg = num_ < 0;
  wide mag = neg ? -static_cast<wide>(num_) : static_cast<wide>(num_);
  // round half up on the magnitude: floor((2*mag*scale + den) / (2*den))
  wide scaled = (2 * mag * scale + den_) / (2 * static_cast<wide>(den_));
  wide whole = scaled / scale;
  wide frac = scaled % scale;
  std::string out = (neg && scaled != 0) ? "-" : "";
  out += wide_to_string(whole);
  if (decimals > 0) {
    std::string digits = wide_to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string Ratio::exact() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio::from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                          static_cast<wide>(a.den_) * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  return Ratio::from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                          static_cast<wide>(a.den_) * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return Ratio::from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) throw Error(ErrorCode::undefined_ratio, "division by zero ratio");
  return Ratio::from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ratio parse_decimal(std::string_view text) {
  const std::string original(text);
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  wide num = 0;
  wide den = 1;
  bool digits = false;
  bool point = false;
  for (char c : text) {
    if (c == '.' && !point) {
      point = true;
      continue;
    }
    if (c < '0' || c > '9') throw Error(ErrorCode::parse, "'" + original + "' is not a decimal number");
    if (num > (static_cast<wide>(1) << 100)) throw Error(ErrorCode::parse, "'" + original + "' has too many digits");
    num = num * 10 + (c - '0');
    if (point) den *= 10;
    digits = true;
  }
  if (!digits) throw Error(ErrorCode::parse, "'" + original + "' is not a decimal number");
  return Ratio::from_wide(neg ? -num : num, den);
}

}  // namespace liftkit
