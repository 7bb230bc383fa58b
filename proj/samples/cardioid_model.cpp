// Reads a custom representation through the common contract.

#include <cstdio>

#include "cardioid_model.hpp"

int main() {
  const samples::CardioidModel model("cardioid toward the left", dirkit::Direction(90.0, 0.0),
                                     -40.0, 90.0);

  const auto spectrum = model.spectrumSeries(dirkit::Direction(0.0, 0.0), 1.0,
                                             dirkit::DataType::LogMagnitude);
  std::printf("spectrum at front: %zu points, %.3f dB at %.1f Hz .. %.3f dB at %.1f Hz\n",
              spectrum.values.size(), spectrum.values.front(), spectrum.frequencies.front(),
              spectrum.values.back(), spectrum.frequencies.back());

  const auto balloon = model.balloonGrid(1000.0, 1.0, dirkit::DataType::LogMagnitude);
  std::printf("balloon at %.0f Hz: %zu directions, lowest elevation %.0f deg\n",
              balloon.frequency, balloon.directions.size(), balloon.directions.front().elevation());
  return 0;
}
