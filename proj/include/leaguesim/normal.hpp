#pragma once

namespace leaguesim {

/// Standard normal quantile Phi^-1(p) for p in (0,1), Wichura's AS241
/// (PPND16) rational approximation, accurate to about 1e-15.
/// Throws std::invalid_argument outside (0,1).
double normal_quantile(double p);

/// Two-sided z multiplier for a central interval at the given level,
/// i.e. Phi^-1((1+level)/2). z(0.95) = 1.959964 to six decimals.
double two_sided_z(double level);

}  // namespace leaguesim
