#pragma once

#include <stdexcept>
#include <string>

namespace cutcx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad family string, bad graph file, bad JSON, out-of-range parameter.
struct InvalidInput : Error {
    using Error::Error;
};

// Operation requires a nonvoid complex.
struct VoidComplex : Error {
    VoidComplex() : Error("operation undefined on the void complex") {}
};

// No closed form applies to the requested family and parameters.
struct NotCovered : Error {
    using Error::Error;
};

}  // namespace cutcx
