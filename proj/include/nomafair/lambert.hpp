#pragma once

namespace nomafair {

/// Principal branch of the Lambert W function restricted to x >= 0, i.e.
/// the unique w >= 0 with w * exp(w) = x. Relative residual stays below
/// 1e-12 over the whole double range. Throws std::invalid_argument for
/// negative or non-finite input.
double lambert_w0(double x);

/// W(exp(ln_x)) evaluated without forming exp(ln_x), for arguments whose
/// direct value would overflow a double. Accepts any finite ln_x; for
/// ln_x <= 700 it simply exponentiates and delegates to lambert_w0().
double lambert_w0_ln(double ln_x);

}  // namespace nomafair
