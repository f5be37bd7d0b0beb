#pragma once

#include <cstddef>

// Embedded H2+ Born-Oppenheimer tables; definitions are generated into
// src/potential_tables.cpp by tools/make_h2plus_tables.py.
namespace atl::potentials::tables {

extern const std::size_t kNumPoints;
extern const double kRGrid[];         // a.u., strictly increasing
extern const double kGroundSigmaG[];  // eV, H2 ground-state zero
extern const double kExcitedSigmaU[];

}  // namespace atl::potentials::tables
