#ifndef PEARCEY_ERRORS_HPP
#define PEARCEY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pearcey {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The spectral exponent does not decay at infinity (or is otherwise unusable).
class invalid_kernel_error : public error {
public:
    explicit invalid_kernel_error(const std::string& msg) : error(msg) {}
};

/// A requested accuracy could not be met; carries the best value obtained.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& msg, double best, double estimate)
        : error(msg), best_value(best), error_estimate(estimate) {}
    double best_value;
    double error_estimate;
};

/// Input outside the operation's domain (t = 0 for an undamped symbol, etc).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// Result outside floating-point range.
class range_error : public error {
public:
    explicit range_error(const std::string& msg) : error(msg) {}
};

/// Fewer zeros than requested; carries the zeros located so far.
class not_found_error : public error {
public:
    not_found_error(const std::string& msg, std::vector<double> partial)
        : error(msg), found(std::move(partial)) {}
    std::vector<double> found;
};

/// v^(1) vanished where the derivation divides by it (suspected double zero).
class double_zero_error : public error {
public:
    explicit double_zero_error(const std::string& msg) : error(msg) {}
};

} // namespace pearcey

#endif
