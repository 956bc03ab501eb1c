// error.hpp - exception hierarchy shared across the library
#pragma once

#include <stdexcept>

namespace hggan {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape or size mismatch between operands.
class dimension_error : public error { public: using error::error; };

// Invalid configuration value.
class config_error : public error { public: using error::error; };

// Invalid data fed to an operation (empty hyperedge, index out of range, ...).
class input_error : public error { public: using error::error; };

// Instance too large for an exact method.
class capacity_error : public error { public: using error::error; };

// File, format, or manifest problem.
class io_error : public error { public: using error::error; };

// Operation called out of order (e.g. backward without a cached forward).
class state_error : public error { public: using error::error; };

// Non-finite values or a diverging iteration. The CLI maps this family to
// exit code 3; every other error exits 2.
class numeric_error : public error { public: using error::error; };

// The random walk can never reach its termination condition.
class no_termination_error : public error { public: using error::error; };

// Walk sampling kept hitting the step cap past the retry budget.
class sampling_error : public error { public: using error::error; };

} // namespace hggan
