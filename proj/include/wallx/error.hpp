#pragma once

#include <stdexcept>
#include <string>

namespace wallx {

// Every failed operation in the library throws this. The message carries the
// witness (degree, point, component index, byte offset) the caller would need
// to report.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wallx
