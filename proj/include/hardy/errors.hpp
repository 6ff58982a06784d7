#pragma once

#include <stdexcept>

namespace hardy {

// Exact polynomial division left a remainder. For certificate constructions
// this signals that the certificate itself is wrong, not a numerical issue.
class NonzeroRemainder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quotient does not stay inside Q[1/pi].
class InexactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series needed more terms than the hard cap allows.
class SlowConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature doubling stalled before reaching the requested tolerance.
class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hardy
