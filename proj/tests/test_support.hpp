#pragma once

#include <doctest.h>

#include "suite_cases.hpp"

namespace lk::testing {

template <class Fn>
void expect_kind(ErrorKind k, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected an Error of kind " << to_string(k));
  } catch (const Error& e) {
    CHECK(e.kind() == k);
  }
}

}  // namespace lk::testing
