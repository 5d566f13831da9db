#pragma once

#include <stdexcept>

namespace rayfan {

// Violated input contract or failed precondition; the CLI maps this to
// exit code 2 (internal faults stay logic_error / runtime_error, exit 1).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rayfan
