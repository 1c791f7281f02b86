#pragma once

#include <stdexcept>
#include <string>

namespace invstat {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory { config = 2, io = 3, data = 4, fit = 5 };

inline const char* category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::config: return "config";
        case ErrorCategory::io: return "io";
        case ErrorCategory::data: return "data";
        case ErrorCategory::fit: return "fit";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(ErrorCategory::config, m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};

// Validation and parse failures on user data.
struct DataError : Error {
    explicit DataError(const std::string& m) : Error(ErrorCategory::data, m) {}
};

struct FitError : Error {
    explicit FitError(const std::string& m) : Error(ErrorCategory::fit, m) {}
};

}  // namespace invstat
