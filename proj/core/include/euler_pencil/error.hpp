#pragma once

#include <stdexcept>
#include <string>

namespace ep {

enum class ErrorKind {
  domain,
  degenerate,
  singular,
  bad_reduction,
  on_shell,
  pole,
  branch,
  quadrature,
  radicand_mismatch,
  hasse,
  parse,
  not_implemented,
  io,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ep
