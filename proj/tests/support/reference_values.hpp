#pragma once

// Expected values for the embedded 33-bus feeder, frozen from the admittance
// reference solver (tolerance 1e-12). The sweep solver at its default
// tolerance has to land within the stated slack of these.

namespace testsupport::ref33 {

inline constexpr double kBaseLossKw = 202.6771;
inline constexpr double kBaseVdi = 0.117094;
inline constexpr double kBaseMinV = 0.913090;
inline constexpr int kBaseMinBus = 18;

// (bus 7, 2229.0 kW)
inline constexpr double kRowALossKw = 105.6668;
inline constexpr double kRowAVdi = 0.034805;
inline constexpr double kRowAMinV = 0.948899;

// (bus 11, 2229.0 kW)
inline constexpr double kRowBLossKw = 139.7962;
inline constexpr double kRowBVdi = 0.016634;
inline constexpr double kRowBMinV = 0.948866;

// (bus 15, 755.9 kW)
inline constexpr double kRowCLossKw = 137.8256;
inline constexpr double kRowCVdi = 0.056567;
inline constexpr double kRowCMinV = 0.928375;

// (bus 14, 1097.7 kW)
inline constexpr double kFinalLossKw = 129.3789;
inline constexpr double kFinalVdi = 0.040872;
inline constexpr double kFinalMinV = 0.933291;

// Single line, r = x = 0.1 ohm, 100 kW unity-pf load, 12.66 kV / 100 MVA:
// closed-form receiving-end voltage and branch loss.
inline constexpr double kTwoBusVreal = 0.999937599685;
inline constexpr double kTwoBusVimag = -0.000062392529;
inline constexpr double kTwoBusVmag = 0.999937601631;
inline constexpr double kTwoBusLossKw = 0.006240032;

} // namespace testsupport::ref33
