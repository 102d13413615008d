#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace divindex {

/// Logarithm base used by the entropy-family indexes. The base only sets the
/// unit of the result (bits, nats, or "relative" for log base M); the
/// Information Theory Index is base-invariant.
class LogBase {
 public:
  enum class Kind { Base2, Natural, NumGroups };

  constexpr LogBase() = default;
  constexpr explicit LogBase(Kind kind) : kind_(kind) {}

  static constexpr LogBase base2() { return LogBase(Kind::Base2); }
  static constexpr LogBase natural() { return LogBase(Kind::Natural); }
  static constexpr LogBase num_groups() { return LogBase(Kind::NumGroups); }

  constexpr Kind kind() const { return kind_; }

  /// log_b(x) for x > 0, where b is resolved against the number of groups M.
  /// Throws InvalidInput for NumGroups with M < 2.
  double log(double x, std::size_t num_groups) const;

  /// Rejects a NumGroups base for M < 2.
  void check(std::size_t num_groups) const;

  /// "2", "e" or "M": the CLI spelling.
  std::string_view label() const;
  /// "bits", "nats" or "relative".
  std::string_view unit() const;

  static std::optional<LogBase> parse(std::string_view text);

  friend constexpr bool operator==(LogBase, LogBase) = default;

 private:
  Kind kind_ = Kind::Base2;
};

}  // namespace divindex
