#pragma once

#include <cstddef>

namespace latkit {

// Hard ceiling on carrier size for any constructed lattice; join/meet tables
// are dense so this bounds memory at a few MB.
inline constexpr int kConstructionCap = 1024;

// Free distributive lattices blow up past four generators (|FD(4)| = 166,
// |FD(5)| > 7*10^6), so the constructor refuses n > 4.
inline constexpr int kFreeDistributiveCap = 4;

inline constexpr int kEnumerateDefaultCap = 8;
inline constexpr int kUndoubleDefaultCap = 16;
inline constexpr int kSdLevelDefaultMax = 6;
inline constexpr int kIdentityVarCap = 4;

// Isomorphism search bound. Overridable through the LATKIT_CAP environment
// variable, read once per process.
int iso_cap();

}  // namespace latkit
