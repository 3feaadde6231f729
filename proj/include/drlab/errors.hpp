#pragma once

#include <stdexcept>
#include <string>

namespace drlab {

// Error taxonomy: callers can distinguish bad mathematical input (domain),
// mixed field configurations, division by zero, operations that need a
// finite coefficient field, and exhausted search guards.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

struct division_by_zero : domain_error {
    division_by_zero() : domain_error("division by zero") {}
};

struct config_mismatch : error {
    using error::error;
};

struct unsupported_field : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

struct resource_limit : error {
    resource_limit(const std::string& what, long long attempted)
        : error(what + " (attempted bound: " + std::to_string(attempted) + ")"),
          attempted_bound(attempted) {}
    long long attempted_bound;
};

}  // namespace drlab
