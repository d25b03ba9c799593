#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mre {

// Runtime error carrying a stable machine-readable code ("not-hermitian",
// "invalid-pair", ...) next to the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace mre
