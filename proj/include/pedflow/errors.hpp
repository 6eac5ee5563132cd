#pragma once

#include <stdexcept>
#include <string>

namespace pedflow {

// Scenario file could not be parsed (syntax) or failed validation (semantics).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A simulation phase failed; message carries step index and phase name.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pedflow
