#pragma once

#include "tsgraph/ts_dag.hpp"

namespace tsgraph::testing {

/// O1 -> O1 and O1 -> O2, both at lag 1.
inline TsDagTemplate fixture_a() { return TsDagTemplate(2, {{0, 0, 1}, {0, 1, 1}}); }

/// O1 <- L -> O2 contemporaneously, L (index 2) unobserved.
inline TsDagTemplate fixture_b() { return TsDagTemplate(3, {{2, 0, 0}, {2, 1, 0}}); }
inline ObservationScheme fixture_b_scheme(int tau_max) { return {{0, 1}, tau_max, 1}; }

/// Autocorrelated latent L (index 2) confounding O2 across time steps.
inline TsDagTemplate fixture_autocorrelated_latent() {
  return TsDagTemplate(3, {{2, 2, 1}, {2, 1, 0}, {0, 1, 0}});
}

}  // namespace tsgraph::testing
