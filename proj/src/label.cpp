#include "vrsp/label.hpp"

#include "vrsp/error.hpp"

#include <charconv>
#include <numeric>

namespace vrsp {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view token) {
  if (digits.empty())
    throw Error(ErrorCode::invalid_label, "weight token '" + std::string(token) + "' is not an integer or fraction");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw Error(ErrorCode::invalid_label, "weight token '" + std::string(token) + "' is not an integer or fraction");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::invalid_label, "weight token '" + std::string(token) + "' is out of range");
  return value;
}

} // namespace

Weight::Weight(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw Error(ErrorCode::invalid_label, "weight denominator is zero");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN)
      throw Error(ErrorCode::invalid_label, "weight is out of range");
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0)
    g = 1;
  num_ = num / g;
  den_ = den / g;
}

Weight Weight::parse(std::string_view token) {
  bool negative = false;
  std::string_view body = token;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::int64_t num = parse_digits(body.substr(0, slash), token);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(body.substr(slash + 1), token);
    if (den == 0)
      throw Error(ErrorCode::invalid_label, "weight token '" + std::string(token) + "' has a zero denominator");
  }
  return Weight{negative ? -num : num, den};
}

std::string Weight::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LabelPair::LabelPair(std::string action_name, Weight w)
    : action(std::move(action_name)), weight(w) {}

std::string LabelPair::to_string() const {
  return action + "," + weight.to_string();
}

std::strong_ordering operator<=>(const LabelPair& a, const LabelPair& b) {
  if (auto c = a.action <=> b.action; c != 0)
    return c;
  return a.weight <=> b.weight;
}

} // namespace vrsp
