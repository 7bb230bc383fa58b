// dirkit command-line front end.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dirkit/dirkit.hpp"
#ifdef DIRKIT_HAVE_SOFA
#include "dirkit/io/sofa.hpp"
#endif

namespace {

using namespace dirkit;

std::string extension(const std::string& path) {
  return std::filesystem::path(path).extension().string();
}

std::string firstLine(const std::string& path) {
  const std::string text = io::readFile(path);
  return text.substr(0, text.find('\n'));
}

bool isHdf5(const std::string& path) {
  const std::string text = io::readFile(path);
  return text.size() >= 8 && text.compare(0, 8, "\x89HDF\r\n\x1a\n") == 0;
}

std::vector<RawIRs> loadSofaFile(const std::string& path) {
#ifdef DIRKIT_HAVE_SOFA
  return io::loadSofa(path);
#else
  throw Error("'" + path + "' looks like SOFA, but this build has no SOFA support");
#endif
}

RawIRs loadRaw(const std::string& path, std::size_t receiver) {
  if (firstLine(path) == "DIRD 1") return io::readDird(path);
  if (isHdf5(path)) {
    auto all = loadSofaFile(path);
    if (receiver < 1 || receiver > all.size()) {
      throw DomainError("receiver " + std::to_string(receiver) + " out of range (file has " +
                        std::to_string(all.size()) + ")");
    }
    return std::move(all[receiver - 1]);
  }
  throw Error("'" + path + "' is not an impulse-response dataset (DIRD or SOFA)");
}

std::unique_ptr<Directivity> load(const std::string& path, std::size_t receiver) {
  if (firstLine(path) == "DIRM 1") return std::make_unique<BasisSpectrumModel>(io::readDirm(path));
  return std::make_unique<RawIRs>(loadRaw(path, receiver));
}

std::optional<std::pair<double, double>> range(const std::vector<double>& r) {
  if (r.empty()) return std::nullopt;
  return std::pair{r[0], r[1]};
}

void writeSeries(const std::vector<plot::PlotSeries>& series, const std::string& out,
                 const plot::SvgOptions& opt) {
  const std::string ext = extension(out);
  if (ext == ".csv") io::writeFile(out, plot::seriesCsv(series));
  else if (ext == ".svg") io::writeFile(out, plot::seriesSvg(series, opt));
  else throw DomainError("output '" + out + "' must end in .csv or .svg");
}

std::string quantityFor(DataType t) {
  switch (t) {
    case DataType::LogMagnitude: return "magnitude";
    case DataType::PowerSpectrum: return "power";
    default: return "linear_magnitude";
  }
}

struct Common {
  std::string output;
  std::size_t receiver = 1;
  plot::SvgOptions svg;
};

void addPlotFlags(CLI::App* cmd, Common& c) {
  cmd->add_option("--title", c.svg.title, "Figure title (SVG)");
  cmd->add_option("--xlabel", c.svg.xLabel, "x-axis label (SVG)");
  cmd->add_option("--ylabel", c.svg.yLabel, "y-axis label (SVG)");
  cmd->add_option("--width", c.svg.width, "Figure width in px (SVG)")->check(CLI::PositiveNumber);
  cmd->add_option("--height", c.svg.height, "Figure height in px (SVG)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirkit: directivity representation, fitting and evaluation"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App*, const CLI::Error& e) {
    return std::string("error: ") + e.what() + "\n";
  });

  Common c;
  const auto receiverOpt = [&](CLI::App* cmd) {
    cmd->add_option("--receiver", c.receiver, "Receiver (ear) index for SOFA inputs, 1-based")
        ->check(CLI::PositiveNumber);
  };

  // info
  std::string infoIn;
  auto* info = app.add_subcommand("info", "Print info, coordinates and supported datatypes");
  info->add_option("input", infoIn, "DIRD, DIRM or SOFA file")->required();
  receiverOpt(info);

  // synth
  io::SynthSpec spec;
  std::string synthMode = "flat", synthInfo;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic impulse-response set (DIRD)");
  synth->add_option("--mode", synthMode, "flat | lowpass")->check(CLI::IsMember({"flat", "lowpass"}));
  synth->add_option("--az-step", spec.azimuthStep, "Azimuth step in degrees");
  synth->add_option("--el-step", spec.elevationStep, "Elevation step in degrees");
  synth->add_option("--el-min", spec.elevationMin, "Lowest elevation in degrees");
  synth->add_option("--el-max", spec.elevationMax, "Highest elevation in degrees");
  synth->add_option("--length", spec.length, "Impulse-response length in samples");
  synth->add_option("--fs", spec.sampleRate, "Sample rate in Hz");
  synth->add_option("--g0", spec.g0, "Gain offset");
  synth->add_option("--g1", spec.g1, "Gain modulation depth");
  synth->add_option("--a", spec.a, "Second tap of the lowpass mode, in (0, 1)");
  synth->add_option("--info", synthInfo, "Info text");
  synth->add_option("-o,--output", c.output, "Output .dird")->required();

  // convert
  std::string convertIn;
  auto* convert = app.add_subcommand("convert", "Convert a SOFA SimpleFreeFieldHRIR file to DIRD");
  convert->add_option("input", convertIn, "SOFA file")->required();
  convert->add_option("-o,--output", c.output, "Output .dird")->required();
  receiverOpt(convert);

  // spectrum
  std::vector<std::string> spectrumIn, labels;
  double az = 0.0, el = 0.0, dist = kDefaultDistance;
  std::string typeName = "log";
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum at one direction; two inputs overlay");
  spectrum->add_option("inputs", spectrumIn, "One or two DIRD/DIRM/SOFA files")
      ->required()
      ->expected(1, 2);
  spectrum->add_option("--az", az, "Azimuth in degrees");
  spectrum->add_option("--el", el, "Elevation in degrees");
  spectrum->add_option("--dist", dist, "Distance in metres");
  spectrum->add_option("--type", typeName, "lin | power | log");
  spectrum->add_option("--labels", labels, "Series labels (default: info strings)")->delimiter(',');
  spectrum->add_option("-o,--output", c.output, "Output .csv or .svg")->required();
  receiverOpt(spectrum);
  addPlotFlags(spectrum, c);

  // balloon
  std::string balloonIn;
  double freq = 1000.0;
  auto* balloon = app.add_subcommand("balloon", "Values over all directions at one frequency");
  balloon->add_option("input", balloonIn, "DIRD, DIRM or SOFA file")->required();
  balloon->add_option("--freq", freq, "Frequency in Hz");
  balloon->add_option("--dist", dist, "Distance in metres");
  balloon->add_option("--type", typeName, "lin | power | log");
  balloon->add_option("-o,--output", c.output, "Output .csv or .svg")->required();
  receiverOpt(balloon);
  addPlotFlags(balloon, c);

  // fit
  std::string fitIn, familyName = "Fourier", fitInfo;
  std::size_t order = 16;
  std::vector<double> limits;
  auto* fit = app.add_subcommand("fit", "Fit a basis-function spectrum model (DIRM)");
  fit->add_option("input", fitIn, "DIRD or SOFA file")->required();
  fit->add_option("--family", familyName, "Fourier | Cosine")->check(CLI::IsMember({"Fourier", "Cosine"}));
  fit->add_option("-K,--order", order, "Number of basis functions")->check(CLI::PositiveNumber);
  fit->add_option("--limits", limits, "Frequency limits fmin fmax in Hz")->expected(2);
  fit->add_option("--info", fitInfo, "Info text");
  fit->add_option("-o,--output", c.output, "Output .dirm")->required();
  receiverOpt(fit);

  // diff
  std::string refIn, evalIn, measureName = "SD", mode = "frequency";
  std::vector<double> freqRange;
  double horizontalTol = 1e-6;
  auto* diff = app.add_subcommand("diff", "Error of an evaluand against a reference");
  diff->add_option("reference", refIn, "Reference file")->required();
  diff->add_option("evaluand", evalIn, "Evaluand file")->required();
  diff->add_option("--type", typeName, "log | lin | complex");
  diff->add_option("--measure", measureName, "SD | MSE")->check(CLI::IsMember({"SD", "MSE"}));
  diff->add_option("--mode", mode, "frequency | horizontal")->check(CLI::IsMember({"frequency", "horizontal"}));
  diff->add_option("--range", freqRange, "Frequency range flo fhi in Hz")->expected(2);
  diff->add_option("--horizontal-tol", horizontalTol, "Elevation tolerance of the horizontal plane (deg)");
  diff->add_option("-o,--output", c.output, "Output .csv or .svg")->required();
  receiverOpt(diff);
  addPlotFlags(diff, c);

  // sweep
  std::string sweepIn;
  std::size_t kmax = 32;
  auto* sweep = app.add_subcommand("sweep", "MSE against the number of basis functions");
  sweep->add_option("reference", sweepIn, "DIRD or SOFA file")->required();
  sweep->add_option("--family", familyName, "Fourier | Cosine")->check(CLI::IsMember({"Fourier", "Cosine"}));
  sweep->add_option("--kmax", kmax, "Largest number of basis functions")->check(CLI::PositiveNumber);
  sweep->add_option("--type", typeName, "lin | complex (MSE datatype)");
  sweep->add_option("-o,--output", c.output, "Output .csv or .svg")->required();
  receiverOpt(sweep);
  addPlotFlags(sweep, c);

  // extract-ir
  std::string irIn;
  auto* extract = app.add_subcommand("extract-ir", "Impulse response at one direction (WAV or CSV)");
  extract->add_option("input", irIn, "DIRD, DIRM or SOFA file")->required();
  extract->add_option("--az", az, "Azimuth in degrees");
  extract->add_option("--el", el, "Elevation in degrees");
  extract->add_option("--dist", dist, "Distance in metres");
  extract->add_option("-o,--output", c.output, "Output .wav or .csv")->required();
  receiverOpt(extract);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) {
      const auto obj = load(infoIn, c.receiver);
      const auto& cs = obj->coords();
      std::cout << "info: " << obj->info() << "\n";
      std::cout << "directions: " << cs.directions().size()
                << (cs.continuity().direction ? " (continuous elevation limits)" : "") << "\n";
      std::cout << "frequencies: " << cs.frequencies().size()
                << (cs.continuity().frequency ? " (continuous limits)" : "");
      if (!cs.frequencies().empty()) {
        std::cout << " [" << io::formatNumber(cs.frequencies().front()) << ", "
                  << io::formatNumber(cs.frequencies().back()) << "] Hz";
      }
      std::cout << "\ndistances:";
      for (double r : cs.distances()) std::cout << " " << io::formatNumber(r);
      std::cout << " m\nsupported:";
      for (DataType t : obj->supportedDataTypes().list()) std::cout << " " << toString(t);
      std::cout << "\n";
    } else if (*synth) {
      spec.mode = io::parseSynthMode(synthMode);
      io::writeDird(io::synthTestSet(spec, synthInfo), c.output);
    } else if (*convert) {
      io::writeDird(loadRaw(convertIn, c.receiver), c.output);
    } else if (*spectrum) {
      const DataType t = parseDataType(typeName);
      if (!labels.empty() && labels.size() != spectrumIn.size()) {
        throw DomainError("--labels needs one label per input");
      }
      std::vector<plot::PlotSeries> series;
      for (std::size_t i = 0; i < spectrumIn.size(); ++i) {
        const auto obj = load(spectrumIn[i], c.receiver);
        const auto s = obj->spectrumSeries(Direction(az, el), dist, t);
        series.emplace_back(labels.empty() ? obj->info() : labels[i], plot::XAxis::FrequencyLog,
                            plot::yAxisFor(t), quantityFor(t), s.frequencies, s.values);
      }
      writeSeries(series, c.output, c.svg);
    } else if (*balloon) {
      const DataType t = parseDataType(typeName);
      const auto obj = load(balloonIn, c.receiver);
      const auto g = obj->balloonGrid(freq, dist, t);
      const std::string q = quantityFor(t) + plot::unitSuffix(plot::yAxisFor(t));
      const std::string ext = extension(c.output);
      if (ext == ".csv") io::writeFile(c.output, plot::balloonCsv(g, q));
      else if (ext == ".svg") {
        if (c.svg.title.empty()) c.svg.title = "balloon at " + io::formatNumber(g.frequency) + " Hz";
        io::writeFile(c.output, plot::balloonSvg(g, q, c.svg));
      } else {
        throw DomainError("output '" + c.output + "' must end in .csv or .svg");
      }
    } else if (*fit) {
      const RawIRs raw = loadRaw(fitIn, c.receiver);
      if (fitInfo.empty()) fitInfo = familyName + " series, " + std::to_string(order) + " coefficients";
      const auto model = fitBasisModel(fitInfo, raw, parseBasisFamily(familyName), order, range(limits));
      io::writeDirm(model, c.output);
    } else if (*diff) {
      const DataType t = parseDataType(typeName);
      const auto ref = load(refIn, c.receiver);
      const auto ev = load(evalIn, c.receiver);
      const DirectivityDiff d({}, *ref, *ev, ref->coords(), t);
      if (d.hasCoordinateWarning()) {
        std::cerr << "warning: " << d.warnings().size()
                  << " coordinate(s) read at different points in the evaluand, first: "
                  << d.warnings().front() << "\n";
      }
      const Measure m = measureName == "SD" ? Measure::sd() : Measure::mse();
      const plot::YAxis y = measureName == "SD" ? plot::YAxis::Db : plot::YAxis::Ratio;
      const auto points = mode == "frequency" ? d.errorVsFrequency(m, range(freqRange))
                                              : d.errorHorizontal(m, range(freqRange), horizontalTol);
      writeSeries({plot::PlotSeries(d.info(),
                                    mode == "frequency" ? plot::XAxis::FrequencyLog
                                                        : plot::XAxis::AzimuthLinear,
                                    y, measureName, points)},
                  c.output, c.svg);
    } else if (*sweep) {
      const DataType t = typeName == "log" ? DataType::LinearMagnitude : parseDataType(typeName);
      const RawIRs raw = loadRaw(sweepIn, c.receiver);
      const BasisFamily family = parseBasisFamily(familyName);
      std::vector<std::pair<double, double>> points;
      for (std::size_t n = 1; n <= kmax; ++n) {
        const auto model = fitBasisModel(familyName + ", " + std::to_string(n), raw, family, n);
        const DirectivityDiff d({}, raw, model, raw.coords(), t);
        points.emplace_back(static_cast<double>(n), d.computeMSE());
      }
      writeSeries({plot::PlotSeries(raw.info(), plot::XAxis::CoefficientCount, plot::YAxis::Ratio,
                                    "MSE", points)},
                  c.output, c.svg);
    } else if (*extract) {
      const auto obj = load(irIn, c.receiver);
      const auto v = obj->getDataV(CoordinateSet({Direction(az, el)}, {}, {dist}),
                                   DataType::ImpulseResponses);
      const auto& times = v.actualCoords.frequencies();
      const std::string ext = extension(c.output);
      if (ext == ".wav") {
        plot::writeWavFloat(c.output, v.values, static_cast<std::uint32_t>(std::lround(1.0 / times.at(1))));
      } else if (ext == ".csv") {
        std::string out = "time_s,amplitude\n";
        for (std::size_t n = 0; n < v.values.size(); ++n) {
          out += io::formatNumber(times[n]) + "," + io::formatNumber(v.values[n]) + "\n";
        }
        io::writeFile(c.output, out);
      } else {
        throw DomainError("output '" + c.output + "' must end in .wav or .csv");
      }
      const Direction& actual = v.actualCoords.directions().at(0);
      std::cerr << "read at (" << io::formatNumber(actual.azimuth()) << ", "
                << io::formatNumber(actual.elevation()) << ")\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
