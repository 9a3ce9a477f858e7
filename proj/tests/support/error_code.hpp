#pragma once

#include <functional>

#include <gtest/gtest.h>

#include <discrete_remez/error.hpp>

namespace testing_support {

/// Code of the library error raised by `f`; records a failure if none is raised.
inline discrete_remez::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const discrete_remez::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return discrete_remez::ErrorCode::kInvalidParameter;
}

}  // namespace testing_support
