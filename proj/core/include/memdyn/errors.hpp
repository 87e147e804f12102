#pragma once

#include <stdexcept>
#include <string>

namespace memdyn {

/// Thrown when integration or root refinement leaves its valid numeric range.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace memdyn
