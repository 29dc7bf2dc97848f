#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mmdd {

// Library error with a stable machine-readable code ("id-collision",
// "out-of-space", ...) plus a human-readable detail.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace mmdd
