#pragma once

#include <stdexcept>
#include <string>

namespace mclab {

// Base class for all library-specific failures. Plain argument/domain
// violations use std::invalid_argument directly.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Model exceeds the annealer capability (max_variables, mirroring the
// 164-node QPU budget).
struct embedding_limit_error : error {
    explicit embedding_limit_error(const std::string& msg) : error(msg) {}
};

// Input data carries no usable signal for the requested statistic
// (all-zero variances, constant samples, fully tied ranks).
struct degenerate_data_error : error {
    explicit degenerate_data_error(const std::string& msg) : error(msg) {}
};

// The test is defined only for a design the data does not satisfy
// (e.g. Cochran's C with unequal group sizes).
struct unsupported_design_error : error {
    explicit unsupported_design_error(const std::string& msg) : error(msg) {}
};

// Input size outside the supported range (exact oracle vertex cap,
// Shapiro-Wilk sample-size window).
struct size_limit_error : error {
    explicit size_limit_error(const std::string& msg) : error(msg) {}
};

// Experiment plan fails validation before any instance is generated.
struct plan_validation_error : error {
    explicit plan_validation_error(const std::string& msg) : error(msg) {}
};

}  // namespace mclab
