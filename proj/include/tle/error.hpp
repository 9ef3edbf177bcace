#pragma once

#include <stdexcept>
#include <string>

namespace tle {

enum class ErrorKind { usage, data, degenerate, domain, inconclusive, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tle
