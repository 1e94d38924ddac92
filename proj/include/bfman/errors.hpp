#pragma once

#include <stdexcept>
#include <string>

namespace bfman {

// Error categories map one-to-one onto the CLI's machine-parsable prefixes
// ("error: <category>: <message>").
class Error : public std::runtime_error {
public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

private:
  std::string category_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

class NumericError : public Error {
public:
  explicit NumericError(const std::string& what) : Error("numeric", what) {}
};

class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

}  // namespace bfman
