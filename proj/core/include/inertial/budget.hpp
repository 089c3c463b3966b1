#pragma once

#include <stdexcept>

namespace inertial {

/// A solver declined its input for exceeding a configured desk-scale
/// budget (vertex count, column cap, ...). A limit, not a failure.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace inertial
