#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arxivnet {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input record (only thrown in strict parsing mode).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A pipeline stage was asked to run before its upstream artifact exists.
class MissingArtifactError : public Error {
public:
  MissingArtifactError(const std::string& stage, const std::string& path)
      : Error("missing artifact " + path + ": run `" + stage + "` first"),
        required_stage_(stage) {}

  const std::string& required_stage() const noexcept { return required_stage_; }

private:
  std::string required_stage_;
};

}  // namespace arxivnet
