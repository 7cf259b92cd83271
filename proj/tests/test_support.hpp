#pragma once

#include <functional>

#include "complex_core.hpp"

namespace symb_test {

// Runs fn and reports the thrown library error code, errc::ok if none.
inline symb::errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const symb::error& e) {
    return e.code();
  }
  return symb::errc::ok;
}

} // namespace symb_test
