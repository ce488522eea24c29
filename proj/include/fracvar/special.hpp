#pragma once

namespace fracvar {

/// Gamma function for real x (poles at 0, -1, -2, ... rejected).
/// Lanczos approximation (g = 7, 9 terms), relative error below 1e-12
/// on the argument range used by the fractional operators.
double gamma_fn(double x);

}  // namespace fracvar
