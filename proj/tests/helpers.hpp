#pragma once

#include <doctest.h>

#include "qseries/errors.hpp"

namespace testing {

template <class F>
qseries::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const qseries::Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return qseries::ErrorKind::kIoError;
}

}  // namespace testing
