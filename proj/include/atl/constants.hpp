#pragma once

// Physical constants and unit conversions (atomic units unless noted).

namespace atl::constants {

inline constexpr double kHartreeEv = 27.211386245988;
inline constexpr double kHbarEvFs = 0.6582119569;  // hbar in eV*fs

// masses in electron masses
inline constexpr double kProtonMass = 1836.153;
inline constexpr double kHydrogenMass = 1837.153;  // neutral H carries its electron
inline constexpr double kReducedMassH2p = 918.076;

// atomic unit of intensity: E0 [a.u.] = sqrt(I [W/cm^2] / kIntensityAu)
inline constexpr double kIntensityAu = 3.509e16;

inline constexpr double kPi = 3.14159265358979323846;

// angular frequency (rad/fs) of a photon of the given energy
inline constexpr double omega_rad_per_fs(double photon_ev) {
  return photon_ev / kHbarEvFs;
}

inline constexpr double ev_to_hartree(double ev) { return ev / kHartreeEv; }
inline constexpr double hartree_to_ev(double ha) { return ha * kHartreeEv; }

}  // namespace atl::constants
