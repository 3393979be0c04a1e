#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "sbaplace/model.hpp"

namespace sbaplace::detail {

/// Shortest decimal form that parses back to the same double.
inline std::string double_to_string(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(what + ": expected a number, got '" + text + "'");
  }
  return value;
}

inline long long parse_int(const std::string& text, const std::string& what) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

}  // namespace sbaplace::detail
