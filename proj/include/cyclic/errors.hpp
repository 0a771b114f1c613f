#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

// Base for every failure raised by the library. Derived types name the
// specific condition so callers (and the CLI) can map them to exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_argument : public error {
public:
    using error::error;
};

// State is identically zero; no direction to normalize to.
class degenerate_zero : public error {
public:
    using error::error;
};

class steps_too_large : public error {
public:
    using error::error;
};

class not_conjugate_symmetric : public error {
public:
    using error::error;
};

class wrong_parity : public error {
public:
    using error::error;
};

class degenerate_ellipse : public error {
public:
    using error::error;
};

class insufficient_snapshots : public error {
public:
    using error::error;
};

class route_mismatch : public error {
public:
    using error::error;
};

class no_such_snapshot : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace cyclic
