#ifndef FLAGCHAR_TEST_UTIL_HPP
#define FLAGCHAR_TEST_UTIL_HPP

#include <catch_amalgamated.hpp>

#include "flagchar/error.hpp"

namespace testutil {

// Runs f, expecting it to throw flagchar::Error with the given code.
template <class F>
bool throws_errc(flagchar::Errc want, F&& f) {
  try {
    f();
  } catch (const flagchar::Error& e) {
    return e.code() == want;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace testutil

#endif
