#include "mqslink/link.hpp"

#include <cmath>
#include <string>

#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"

namespace mqs {

using cd = std::complex<double>;

Termination Termination::make_resistive(double ohms) {
  Termination t;
  t.kind = TerminationKind::resistive;
  t.resistance = ohms;
  t.validate();
  return t;
}

Termination Termination::make_complex(double resistance_ohms, double reactance_ohms) {
  Termination t;
  t.kind = TerminationKind::complex_impedance;
  t.resistance = resistance_ohms;
  t.reactance = reactance_ohms;
  t.validate();
  return t;
}

Termination Termination::make_capacitive(double farads, double series_resistance_ohms) {
  Termination t;
  t.kind = TerminationKind::capacitive;
  t.resistance = series_resistance_ohms;
  t.capacitance = farads;
  t.validate();
  return t;
}

Termination Termination::make_open() {
  Termination t;
  t.kind = TerminationKind::open_circuit;
  t.resistance = 0.0;
  return t;
}

void Termination::validate() const {
  if (!(resistance >= 0.0)) {
    throw validation_error("termination: resistance must be >= 0, got " +
                           std::to_string(resistance));
  }
  if (kind == TerminationKind::capacitive && !(capacitance > 0.0)) {
    throw validation_error("termination: capacitive kind requires capacitance > 0");
  }
}

cd Termination::impedance(double omega) const {
  switch (kind) {
    case TerminationKind::resistive:
      return {resistance, 0.0};
    case TerminationKind::complex_impedance:
      return {resistance, reactance};
    case TerminationKind::capacitive:
      return {resistance, -1.0 / (omega * capacitance)};
    case TerminationKind::open_circuit:
      break;
  }
  throw validation_error("termination: open circuit has no finite impedance");
}

void LinkModel::validate() const {
  if (!(l_tx > 0.0) || !(l_rx > 0.0)) {
    throw validation_error("link: inductances must be > 0");
  }
  if (mutual * mutual > l_tx * l_rx * (1.0 + 1e-12)) {
    throw validation_error("link: mutual^2 exceeds l_tx * l_rx");
  }
  if (source.is_open()) {
    throw validation_error("link: source termination cannot be an open circuit");
  }
  source.validate();
  load.validate();
}

namespace {

[[noreturn]] void singularity(double frequency) {
  throw numeric_error("link response singular at " + std::to_string(frequency) +
                      " Hz (zero total loop impedance)");
}

// Common denominator (j w L_tx + Z_S)(j w L_rx + Z_L) + w^2 M^2.  A value at
// roundoff level relative to its constituent terms means a pathological
// lossless resonance.
cd link_denominator(const LinkModel& link, double omega, cd zs, cd zl, double frequency) {
  const cd a = cd(0.0, omega * link.l_tx) + zs;
  const cd b = cd(0.0, omega * link.l_rx) + zl;
  const double coupling = omega * omega * link.mutual * link.mutual;
  const cd den = a * b + coupling;
  const double scale = std::abs(a) * std::abs(b) + coupling;
  if (std::abs(den) <= 1e-12 * scale) singularity(frequency);
  return den;
}

}  // namespace

LoopCurrents currents(const LinkModel& link, double frequency) {
  link.validate();
  if (!(frequency > 0.0)) {
    throw validation_error("currents: frequency must be > 0");
  }
  const double omega = 2.0 * kPi * frequency;
  const cd zs = link.source.impedance(omega);

  if (link.load.is_open()) {
    const cd den = cd(0.0, omega * link.l_tx) + zs;
    if (den == cd(0.0, 0.0)) singularity(frequency);
    return {1.0 / den, cd(0.0, 0.0)};
  }

  const cd zl = link.load.impedance(omega);
  const cd den = link_denominator(link, omega, zs, zl, frequency);
  return {(cd(0.0, omega * link.l_rx) + zl) / den, cd(0.0, omega * link.mutual) / den};
}

cd voltage_gain(const LinkModel& link, double frequency) {
  link.validate();
  if (!(frequency > 0.0)) {
    throw validation_error("voltage_gain: frequency must be > 0");
  }
  const double omega = 2.0 * kPi * frequency;
  const cd zs = link.source.impedance(omega);

  if (link.load.is_open()) {
    // Open-circuit output: the induced EMF j w M I_tx.
    const cd den = cd(0.0, omega * link.l_tx) + zs;
    if (den == cd(0.0, 0.0)) singularity(frequency);
    return cd(0.0, omega * link.mutual) / den;
  }

  const cd zl = link.load.impedance(omega);
  const cd den = link_denominator(link, omega, zs, zl, frequency);
  return cd(0.0, omega * link.mutual) * zl / den;
}

const char* to_string(TerminationCase c) {
  switch (c) {
    case TerminationCase::vna_50:
      return "vna_50";
    case TerminationCase::low_source:
      return "low_source";
    case TerminationCase::capacitive_load:
      return "capacitive_load";
    case TerminationCase::low_source_capacitive_load:
      return "low_source_capacitive_load";
  }
  return "?";
}

std::optional<TerminationCase> termination_case_from_string(const std::string& name) {
  if (name == "vna_50") return TerminationCase::vna_50;
  if (name == "low_source") return TerminationCase::low_source;
  if (name == "capacitive_load") return TerminationCase::capacitive_load;
  if (name == "low_source_capacitive_load") return TerminationCase::low_source_capacitive_load;
  return std::nullopt;
}

LinkModel specialize(const LinkModel& link, TerminationCase c,
                     const TerminationCaseParams& params) {
  LinkModel out = link;
  const bool capacitive = c == TerminationCase::capacitive_load ||
                          c == TerminationCase::low_source_capacitive_load;
  if (capacitive && !params.load_capacitance.has_value()) {
    throw validation_error(std::string("specialize: case ") + to_string(c) +
                           " requires a load capacitance");
  }
  const bool low_source =
      c == TerminationCase::low_source || c == TerminationCase::low_source_capacitive_load;

  out.source = Termination::make_resistive(low_source ? params.source_resistance_low : params.z0);
  out.load = capacitive ? Termination::make_capacitive(*params.load_capacitance)
                        : Termination::make_resistive(params.z0);
  out.validate();
  return out;
}

cd gain_matched(double frequency, double inductance, double mutual, double z0) {
  const double omega = 2.0 * kPi * frequency;
  const cd a = cd(0.0, omega * inductance) + z0;
  return cd(0.0, omega * mutual) * z0 / (a * a + omega * omega * mutual * mutual);
}

cd gain_low_source(double frequency, double l_tx, double l_rx, double mutual, cd z_load) {
  const double omega = 2.0 * kPi * frequency;
  return cd(0.0, omega * mutual) * z_load /
         (cd(0.0, omega * l_tx) * (cd(0.0, omega * l_rx) + z_load) +
          omega * omega * mutual * mutual);
}

cd gain_capacitive_load(double frequency, double l_tx, double l_rx, double mutual,
                        double r_source, double load_capacitance) {
  const double omega = 2.0 * kPi * frequency;
  const double detune = 1.0 - omega * omega * l_rx * load_capacitance;
  return cd(0.0, omega * mutual) /
         (detune * (cd(0.0, omega * l_tx) + r_source) +
          cd(0.0, omega * omega * omega * load_capacitance * mutual * mutual));
}

cd gain_low_source_capacitive_load(double frequency, double l_tx, double l_rx, double mutual,
                                   double load_capacitance) {
  const double omega = 2.0 * kPi * frequency;
  const double detune = 1.0 - omega * omega * l_rx * load_capacitance;
  return cd(0.0, omega * mutual) /
         (cd(0.0, omega * l_tx) * detune +
          cd(0.0, omega * omega * omega * load_capacitance * mutual * mutual));
}

double peak_frequency_approx(double inductance, double z0) {
  if (!(inductance > 0.0) || !(z0 > 0.0)) {
    throw validation_error("peak_frequency_approx: inductance and z0 must be > 0");
  }
  return z0 / (2.0 * kPi * inductance);
}

double resonance_frequency(double inductance, double capacitance) {
  if (!(inductance > 0.0) || !(capacitance > 0.0)) {
    throw validation_error("resonance_frequency: inputs must be > 0");
  }
  return 1.0 / (2.0 * kPi * std::sqrt(inductance * capacitance));
}

double infer_load_capacitance(double resonance_hz, double inductance) {
  if (!(resonance_hz > 0.0) || !(inductance > 0.0)) {
    throw validation_error("infer_load_capacitance: inputs must be > 0");
  }
  const double omega = 2.0 * kPi * resonance_hz;
  return 1.0 / (omega * omega * inductance);
}

cd s21_from_gain(cd gain) { return 2.0 * gain; }

cd s21(const LinkModel& link, double frequency) {
  if (!link.source.is_resistive() || !link.load.is_resistive()) {
    throw validation_error(
        "s21: defined only for resistive source and load with a common reference; "
        "use voltage_gain for other terminations");
  }
  const double rs = link.source.resistance;
  const double rl = link.load.resistance;
  if (std::abs(rs - rl) > 1e-9 * std::max(rs, rl)) {
    throw validation_error("s21: source and load references differ (" + std::to_string(rs) +
                           " vs " + std::to_string(rl) + " ohm); use voltage_gain");
  }
  return s21_from_gain(voltage_gain(link, frequency));
}

FrequencyResponse frequency_response(const LinkModel& link, const std::vector<double>& frequencies,
                                     bool with_s21) {
  link.validate();
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (!(frequencies[i] > 0.0) || (i > 0 && !(frequencies[i] > frequencies[i - 1]))) {
      throw validation_error("frequency_response: grid must be positive and strictly increasing");
    }
  }
  FrequencyResponse r;
  r.frequencies = frequencies;
  r.gain.reserve(frequencies.size());
  r.tx_current.reserve(frequencies.size());
  r.rx_current.reserve(frequencies.size());
  const bool s21_ok = with_s21 && link.source.is_resistive() && link.load.is_resistive() &&
                      std::abs(link.source.resistance - link.load.resistance) <=
                          1e-9 * std::max(link.source.resistance, link.load.resistance);
  if (s21_ok) r.s21.reserve(frequencies.size());
  for (double f : frequencies) {
    const LoopCurrents i = currents(link, f);
    const cd g = voltage_gain(link, f);
    r.gain.push_back(g);
    r.tx_current.push_back(i.tx);
    r.rx_current.push_back(i.rx);
    if (s21_ok) r.s21.push_back(s21_from_gain(g));
  }
  return r;
}

double argmax_gain_frequency(const LinkModel& link, double f_lo, double f_hi) {
  if (!(f_lo > 0.0) || !(f_lo < f_hi)) {
    throw validation_error("argmax_gain_frequency: requires 0 < f_lo < f_hi");
  }
  const auto magnitude = [&](double u) { return std::abs(voltage_gain(link, std::exp(u))); };
  constexpr double kInvPhi = 0.6180339887498949;
  double a = std::log(f_lo);
  double b = std::log(f_hi);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = magnitude(c);
  double fd = magnitude(d);
  for (int i = 0; i < 200 && (b - a) > 1e-14; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = magnitude(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = magnitude(d);
    }
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace mqs
