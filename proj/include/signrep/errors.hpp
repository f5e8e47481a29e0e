#ifndef SIGNREP_ERRORS_HPP
#define SIGNREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace signrep {

/// A configured size limit (grid points, pool size, subsets enumerated) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace signrep

#endif  // SIGNREP_ERRORS_HPP
