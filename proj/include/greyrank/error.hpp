#pragma once
#include <stdexcept>
#include <string>

namespace greyrank {

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. CLI exit code 1.
class validation_error : public error
{
public:
    using error::error;
};

// Input is well-formed but the method is undefined on it (0/0 cases,
// all plans identical, non-convergent eigen-iteration). CLI exit code 2.
class degenerate_error : public error
{
public:
    using error::error;
};

} // namespace greyrank
