#include "divindex/log_base.hpp"

#include <cmath>

#include "divindex/error.hpp"

namespace divindex {

void LogBase::check(std::size_t num_groups) const {
  if (kind_ == Kind::NumGroups && num_groups < 2) {
    throw Error(ErrorKind::InvalidInput,
                "log base M requires at least two groups (got M=" +
                    std::to_string(num_groups) + ")");
  }
}

double LogBase::log(double x, std::size_t num_groups) const {
  switch (kind_) {
    case Kind::Base2:
      return std::log2(x);
    case Kind::Natural:
      return std::log(x);
    case Kind::NumGroups:
      check(num_groups);
      return std::log(x) / std::log(static_cast<double>(num_groups));
  }
  return std::log2(x);
}

std::string_view LogBase::label() const {
  switch (kind_) {
    case Kind::Base2: return "2";
    case Kind::Natural: return "e";
    case Kind::NumGroups: return "M";
  }
  return "2";
}

std::string_view LogBase::unit() const {
  switch (kind_) {
    case Kind::Base2: return "bits";
    case Kind::Natural: return "nats";
    case Kind::NumGroups: return "relative";
  }
  return "bits";
}

std::optional<LogBase> LogBase::parse(std::string_view text) {
  if (text == "2" || text == "base2") return base2();
  if (text == "e" || text == "natural" || text == "ln") return natural();
  if (text == "M" || text == "m" || text == "numGroups") return num_groups();
  return std::nullopt;
}

}  // namespace divindex
