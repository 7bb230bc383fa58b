// Fit a 16-coefficient Fourier model to a synthetic set, browse a spectrum,
// and evaluate it with spectral distortion and an MSE sweep.

#include <cstdio>

#include "dirkit/dirkit.hpp"

int main() {
  using namespace dirkit;

  io::SynthSpec spec;
  spec.mode = io::SynthMode::Lowpass;
  const RawIRs raw = io::synthTestSet(spec);

  const auto model = fitBasisModel("Fourier series, 16 coefficients", raw, BasisFamily::Fourier, 16);

  const auto rawSpectrum = raw.spectrumSeries(Direction(0.0, 0.0), 1.0, DataType::LogMagnitude);
  const auto fitSpectrum = model.spectrumSeries(Direction(0.0, 0.0), 1.0, DataType::LogMagnitude);
  std::printf("front spectrum: %zu raw bins, %zu model samples\n", rawSpectrum.values.size(),
              fitSpectrum.values.size());

  const DirectivityDiff sd({}, raw, model, raw.coords(), DataType::LogMagnitude);
  std::printf("%s\n", sd.info().c_str());
  for (const auto& [f, e] : sd.errorVsFrequency(Measure::sd(), std::pair{200.0, 20000.0})) {
    if (f > 5000.0) break;
    std::printf("  %8.1f Hz  SD %.4f dB\n", f, e);
  }

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto f = fitBasisModel({}, raw, BasisFamily::Fourier, n);
    const DirectivityDiff d({}, raw, f, raw.coords(), DataType::LinearMagnitude);
    std::printf("K=%zu  MSE %.3e\n", n, d.computeMSE());
  }
  return 0;
}
