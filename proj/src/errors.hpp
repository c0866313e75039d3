#pragma once

#include <stdexcept>
#include <string>

namespace geu {

enum class errc {
  ok = 0,
  invalid_argument,
  empty_word,
  duplicate_value,
  value_out_of_range,
  cap_exceeded,
  invalid_position,
  no_matching_row,
  unclassifiable,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace geu
