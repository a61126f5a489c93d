#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace mqs {

enum class TerminationKind { resistive, complex_impedance, capacitive, open_circuit };

// Source or load termination of the coupled-inductor link.
struct Termination {
  TerminationKind kind = TerminationKind::resistive;
  double resistance = 50.0;   // ohm, series part
  double reactance = 0.0;     // ohm, fixed (complex_impedance kind)
  double capacitance = 0.0;   // F (capacitive kind)

  static Termination make_resistive(double ohms);
  static Termination make_complex(double resistance_ohms, double reactance_ohms);
  static Termination make_capacitive(double farads, double series_resistance_ohms = 0.0);
  static Termination make_open();

  bool is_open() const { return kind == TerminationKind::open_circuit; }
  bool is_resistive() const { return kind == TerminationKind::resistive; }

  // Finite impedance at angular frequency omega; open terminations have no
  // finite impedance and throw.
  std::complex<double> impedance(double omega) const;

  void validate() const;
};

// Two coupled inductors with source and load terminations.  The signed
// mutual inductance satisfies M^2 <= L_tx * L_rx.
struct LinkModel {
  double l_tx = 260e-9;   // H
  double l_rx = 260e-9;   // H
  double mutual = 0.0;    // H, signed
  Termination source = Termination::make_resistive(50.0);
  Termination load = Termination::make_resistive(50.0);

  void validate() const;
};

struct LoopCurrents {
  std::complex<double> tx;  // A per volt of source EMF
  std::complex<double> rx;
};

// Steady-state loop currents per unit source EMF:
//   I_tx = 1 / (Z_S + w^2 M^2 / (j w L_rx + Z_L) + j w L_tx)
//   I_rx = j w M I_tx / (j w L_rx + Z_L)
// An exactly-zero total loop impedance (pathological lossless resonance)
// raises numeric_error naming the frequency.  An open load carries no
// current: I_rx = 0.
LoopCurrents currents(const LinkModel& link, double frequency);

// Voltage transfer V_out / V_source_emf:
//   j w M Z_L / ((j w L_tx + Z_S)(j w L_rx + Z_L) + w^2 M^2),
// reducing to the open-circuit induced EMF j w M I_tx for an open load.
std::complex<double> voltage_gain(const LinkModel& link, double frequency);

// Termination special cases.
enum class TerminationCase { vna_50, low_source, capacitive_load, low_source_capacitive_load };

struct TerminationCaseParams {
  double z0 = 50.0;                     // common reference resistance, ohm
  double source_resistance_low = 1.0;   // realized "low" source impedance, ohm
  std::optional<double> load_capacitance;  // F, required for capacitive cases
};

const char* to_string(TerminationCase c);
std::optional<TerminationCase> termination_case_from_string(const std::string& name);

// Returns a link whose terminations realize the requested case; the general
// gain then reproduces the corresponding closed form.
LinkModel specialize(const LinkModel& link, TerminationCase c,
                     const TerminationCaseParams& params = {});

// Closed-form specializations of the voltage gain (used by the reduction
// tests and available directly).  All take the exact special-case
// terminations: matched resistive, zero source impedance, capacitive load.
std::complex<double> gain_matched(double frequency, double inductance, double mutual, double z0);
std::complex<double> gain_low_source(double frequency, double l_tx, double l_rx, double mutual,
                                     std::complex<double> z_load);
std::complex<double> gain_capacitive_load(double frequency, double l_tx, double l_rx,
                                          double mutual, double r_source,
                                          double load_capacitance);
std::complex<double> gain_low_source_capacitive_load(double frequency, double l_tx, double l_rx,
                                                     double mutual, double load_capacitance);

// Small-coupling peak of the matched response: f = Z0 / (2 pi L).
double peak_frequency_approx(double inductance, double z0);

// Resonance of the rx inductance with the load capacitance,
// f = 1 / (2 pi sqrt(L C)), and its inverse.
double resonance_frequency(double inductance, double capacitance);
double infer_load_capacitance(double resonance_hz, double inductance);

// S21 under the source-EMF convention: the stimulus is the open-circuit
// source voltage behind Z_S = Z0, so S21 = 2 * (V_out / V_emf).  Requires
// both terminations resistive with a common reference Z0; anything else
// raises validation_error directing the caller to the raw voltage gain.
std::complex<double> s21(const LinkModel& link, double frequency);
std::complex<double> s21_from_gain(std::complex<double> gain);

// Response sampled over a frequency grid.
struct FrequencyResponse {
  std::vector<double> frequencies;
  std::vector<std::complex<double>> gain;
  std::vector<std::complex<double>> s21;  // empty unless requested and applicable
  std::vector<std::complex<double>> tx_current;
  std::vector<std::complex<double>> rx_current;
};

FrequencyResponse frequency_response(const LinkModel& link, const std::vector<double>& frequencies,
                                     bool with_s21 = false);

// Golden-section argmax of |voltage_gain| over log-frequency in [f_lo, f_hi].
double argmax_gain_frequency(const LinkModel& link, double f_lo, double f_hi);

}  // namespace mqs
