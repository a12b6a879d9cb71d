#pragma once

namespace nuforge {

/// A function value together with its first and second derivatives.
struct Jet {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

}  // namespace nuforge
