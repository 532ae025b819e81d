#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace espace {

enum class ErrorCode {
  EmptyInput,
  EmptyCorpus,
  EmptyContext,
  MissingConcept,
  SizeLimit,
  Configuration,
  Io,
  Format,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::EmptyCorpus: return "empty-corpus";
    case ErrorCode::EmptyContext: return "empty-context";
    case ErrorCode::MissingConcept: return "missing-concept";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::Configuration: return "configuration";
    case ErrorCode::Io: return "io";
    case ErrorCode::Format: return "format";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace espace
