// Golden reference values for the test suite.
// Generated by tests/oracle/golden.py -- do not edit by hand.
// Regenerate with:  python3 tests/oracle/golden.py > tests/golden_values.hpp
#pragma once

namespace golden {

// Cole-Cole spot values: relative permittivity (real part) and effective
// conductivity sigma_ionic + w*eps0*eps'' in S/m.
inline constexpr double kEpsMuscle10Hz = 25700364.300175506;
inline constexpr double kSigmaMuscle10Hz = 0.20196673761297155;
inline constexpr double kEpsMuscle1kHz = 434932.19240351149;
inline constexpr double kSigmaMuscle1kHz = 0.32115644050631800;
inline constexpr double kEpsMuscle100kHz = 8089.1487210099303;
inline constexpr double kSigmaMuscle100kHz = 0.36184851287067007;
inline constexpr double kEpsMuscle1MHz = 1836.4130976120785;
inline constexpr double kSigmaMuscle1MHz = 0.50268661004685351;
inline constexpr double kEpsMuscle10MHz = 170.73117545305854;
inline constexpr double kSigmaMuscle10MHz = 0.61683651716947088;
inline constexpr double kEpsMuscle30MHz = 91.811541477656749;
inline constexpr double kSigmaMuscle30MHz = 0.65803676279860645;
inline constexpr double kEpsMuscle100MHz = 65.972444578520891;
inline constexpr double kSigmaMuscle100MHz = 0.70760386027796065;
inline constexpr double kEpsMuscle447MHz = 56.774749220623748;
inline constexpr double kSigmaMuscle447MHz = 0.80849150670408388;
inline constexpr double kEpsSkinDry1MHz = 990.75954856751051;
inline constexpr double kSigmaSkinDry1MHz = 0.013236908850549460;
inline constexpr double kEpsSkinDry100MHz = 72.930306492329711;
inline constexpr double kSigmaSkinDry100MHz = 0.49124190344294554;

// Muscle propagation quantities at 447 MHz.
inline constexpr double kMuscleLambdaLossless447MHz = 0.089009337280708318;
inline constexpr double kMuscleLambdaLossy447MHz = 0.085801265295373774;
inline constexpr double kMuscleSkinDepth447MHz = 0.051326713187150079;
inline constexpr double kMuscleSkinDepth1MHz = 0.78524541927605600;

// Frequency at which the muscle lossless wavelength crosses 1 m.
inline constexpr double kMuscleLambda1mCrossingHz = 31615514.173294900;

// Linear-interpolation anchors: muscle Cole-Cole at 10 Hz and 10 MHz.
inline constexpr double kInterpEpsLow = 25700364.300175506;
inline constexpr double kInterpEpsHigh = 170.73117545305854;
// Frequency at which the interpolated-muscle lossless wavelength = 8 cm
// (descending crossing).
inline constexpr double kInterpLambda8cmCrossingHz = 769388.15216317022;

// Loop self-inductance, thin-wire closed form (Y = 0).
inline constexpr double kSelfInductance14AWG = 2.6374475067128868e-7;
inline constexpr double kSelfInductance1mmWire = 2.5079111396517095e-7;
inline constexpr double kSelfInductance14AWGFilamentPair = 2.6376304757661415e-7;

// Coaxial mutual inductance of equal 5 cm filament loops (Maxwell),
// cross-checked against a 4096-segment numpy Neumann quadrature.
inline constexpr double kMutualCoaxDistances[] = {
    0.02, 0.03, 0.05, 0.10, 0.20, 0.50, 1.00};
inline constexpr double kMutualCoaxHenries[] = {
    6.7536943697418842e-8,
    4.6482213245608863e-8,
    2.4703923153991340e-8,
    7.0929963102237026e-9,
    1.2999224801608539e-9,
    9.5824766270294908e-11,
    1.2245194977451293e-11,
};
// Dipole asymptote mu0*pi*R^4/(2 d^3) at d = 1 m (rel. gap 0.00744).
inline constexpr double kMutualDipole1m = 1.2337005501361698e-11;

// Signed mutual inductance, parallel axes, axial gap 10 cm, lateral
// offsets 0.05/0.10/0.15/0.20 m (4096-segment Neumann quadrature).
inline constexpr double kMutualOffsets[] = {0.05, 0.10, 0.15, 0.20};
inline constexpr double kMutualOffsetHenries[] = {
    4.9306467361964024e-9,
    1.6032361284533773e-9,
    1.2223298848320693e-10,
    -1.7832005280976015e-10,
};

// Anchored link: L_tx = L_rx = 260 nH, M = coaxial mutual at 10 cm,
// 50-ohm resistive source and load.
inline constexpr double kAnchorMutual = 7.0929963102237026e-9;
// Loop currents per unit source EMF at 31 MHz (2x2 linear solve).
inline constexpr double kAnchorItxRe31MHz = 0.0098761449885745276;
inline constexpr double kAnchorItxIm31MHz = -0.0099955113626956543;
inline constexpr double kAnchorIrxRe31MHz = 0.00027276567037680559;
inline constexpr double kAnchorIrxIm31MHz = -3.3798566171490970e-6;
// Numeric argmax of |gain| for the matched anchored link.
inline constexpr double kAnchorPeakHz = 30618115.553014380;
inline constexpr double kAnchorPeakGainMag = 0.013640377519660966;
// Load capacitance resonating 260 nH at 80 MHz.
inline constexpr double kLoadCap80MHz = 1.5222533600110843e-11;
// Numeric argmax of |gain| for the capacitive-load case (Z_S = 50 ohm).
inline constexpr double kCapacitivePeakHz = 80025981.966444914;

// On-axis field transmission |H(0)/H0| of a 4 cm muscle cylinder.
// 'Diff' = conduction-only gamma; 'Full' = displacement current included.
inline constexpr double kEddyT1MHzDiff = 0.99999936986485467;
inline constexpr double kEddyT447MHzDiff = 0.77402116460421656;
inline constexpr double kEddyT1MHzFull = 1.0003221101468720;
inline constexpr double kEddyT447MHzFull = 2.1701774133411003;
// Frequency where conduction-only transmission drops below 0.9.
inline constexpr double kEddyT09CrossingHz = 281845395.50545420;
// Dissipated power per unit length per unit H0^2 (conduction-only).
inline constexpr double kEddyPower1MHz = 1.5752378392402241e-5;
inline constexpr double kEddyPower100MHz = 0.21678022192215324;
// Surface current density magnitude at 1 MHz per unit H0.
inline constexpr double kEddySurfaceJ1MHz = 0.079381045978184768;
// Complex modified Bessel function spot values.
inline constexpr double kI0zARe = 3.0000000000000000, kI0zAIm = 4.0000000000000000;
inline constexpr double kI0zAValRe = -3.3924877882755196, kI0zAValIm = -1.3239458916287265;
inline constexpr double kI0zAI1Re = -3.0683095812730114, kI0zAI1Im = -1.5310157285037969;
inline constexpr double kI0zBRe = 15.000000000000000, kI0zBIm = 14.000000000000000;
inline constexpr double kI0zBValRe = 142927.93688548357, kI0zBValIm = 251408.51768191690;
inline constexpr double kI0zBI1Re = 136122.76414798685, kI0zBI1Im = 249347.61874316737;
inline constexpr double kI0zCRe = 2.0000000000000000, kI0zCIm = 19.000000000000000;
inline constexpr double kI0zCValRe = 0.57053086469815442, kI0zCValIm = -0.36698435479848986;
inline constexpr double kI0zCI1Re = 0.55975097443593679, kI0zCI1Im = -0.36701516964644079;
inline constexpr double kI0zDRe = 22.000000000000000, kI0zDIm = 21.000000000000000;
inline constexpr double kI0zDValRe = -50569509.386959715, kI0zDValIm = 255139554.70464485;
inline constexpr double kI0zDI1Re = -52899461.985384783, kI0zDI1Im = 251523636.17017661;
inline constexpr double kI0zERe = 1.0000000000000000, kI0zEIm = 40.000000000000000;
inline constexpr double kI0zEValRe = 0.0095161536618491992, kI0zEValIm = 0.14812316420340242;
inline constexpr double kI0zEI1Re = 0.0043748680914346831, kI0zEI1Im = 0.19449206224775763;

}  // namespace golden
