#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace vrsp {

/// Exact arc weight: an integer or a reduced fraction, never floating point.
///
/// Parsed from tokens such as "1", "-4" or "3/2". The stored form is always
/// reduced with a positive denominator, so "2/4" and "1/2" compare equal and
/// both print as "1/2".
class Weight {
public:
  Weight() = default;
  explicit Weight(std::int64_t integer) : num_(integer) {}
  Weight(std::int64_t num, std::int64_t den);

  /// Throws Error(invalid_label) on anything but [-]digits[/digits].
  static Weight parse(std::string_view token);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// The arc label (action, weight). Synchronisation and isomorphism compare
/// the whole pair.
struct LabelPair {
  std::string action;
  Weight weight{1};

  LabelPair() = default;
  LabelPair(std::string action_name, Weight w);
  LabelPair(std::string action_name, std::int64_t w)
      : LabelPair(std::move(action_name), Weight{w}) {}

  std::string to_string() const;

  friend bool operator==(const LabelPair&, const LabelPair&) = default;
  friend std::strong_ordering operator<=>(const LabelPair& a, const LabelPair& b);
};

} // namespace vrsp

template <>
struct std::hash<vrsp::LabelPair> {
  std::size_t operator()(const vrsp::LabelPair& l) const noexcept {
    std::size_t h = std::hash<std::string>{}(l.action);
    h ^= std::hash<std::int64_t>{}(l.weight.numerator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(l.weight.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
