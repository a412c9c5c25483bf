#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uzlem {

/// Raised when input text is not valid UTF-8.
class EncodingError : public std::runtime_error {
 public:
  EncodingError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Raised by the data-file loaders. what() is "<source>:<line>: <message>".
class LoadError : public std::runtime_error {
 public:
  LoadError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(format(source, line, message)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  /// 1-based; 0 when the error is not tied to a line (e.g. unreadable file).
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& message) {
    std::string out = source.empty() ? std::string("<stream>") : source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + message;
  }

  std::string source_;
  std::size_t line_;
};

}  // namespace uzlem
