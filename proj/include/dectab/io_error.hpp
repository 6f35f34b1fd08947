// Parse failure with file/line context, shared by all text format readers.
#pragma once

#include <stdexcept>
#include <string>

namespace dectab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& file, int line, const std::string& message)
      : std::runtime_error((file.empty() ? "" : file + ":") +
                           (line > 0 ? std::to_string(line) + ": " : "") + message),
        line_number(line) {}
  int line_number = 0;
};

}  // namespace dectab
