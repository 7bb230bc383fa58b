#pragma once

// Read-only SOFA ingestion (SimpleFreeFieldHRIR, default units) built on the
// HDF5 C library. Link against HDF5 to use this header.

#include <hdf5.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "../raw_irs.hpp"

namespace dirkit::io {

class SofaError : public Error {
 public:
  using Error::Error;
};

namespace sofa_detail {

class Handle {
 public:
  using Closer = herr_t (*)(hid_t);
  Handle(hid_t id, Closer close) : id_(id), close_(close) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (id_ >= 0) close_(id_);
  }
  hid_t get() const noexcept { return id_; }
  bool valid() const noexcept { return id_ >= 0; }

 private:
  hid_t id_;
  Closer close_;
};

inline std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\0' || std::isspace(static_cast<unsigned char>(s.back())))) {
    s.pop_back();
  }
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// String attribute of `obj`, or empty when absent.
inline std::string stringAttribute(hid_t obj, const char* name) {
  if (H5Aexists(obj, name) <= 0) return {};
  Handle attr(H5Aopen(obj, name, H5P_DEFAULT), H5Aclose);
  if (!attr.valid()) return {};
  Handle type(H5Aget_type(attr.get()), H5Tclose);
  if (H5Tget_class(type.get()) != H5T_STRING) return {};
  if (H5Tis_variable_str(type.get()) > 0) {
    char* value = nullptr;
    Handle mem(H5Tcopy(H5T_C_S1), H5Tclose);
    H5Tset_size(mem.get(), H5T_VARIABLE);
    if (H5Aread(attr.get(), mem.get(), &value) < 0 || value == nullptr) return {};
    std::string out(value);
    H5free_memory(value);
    return trim(out);
  }
  const std::size_t size = H5Tget_size(type.get());
  std::string buf(size, '\0');
  if (H5Aread(attr.get(), type.get(), buf.data()) < 0) return {};
  return trim(buf);
}

struct Dataset {
  std::vector<hsize_t> dims;
  std::vector<double> values;
};

inline Dataset readDoubles(hid_t file, const char* name) {
  if (H5Lexists(file, name, H5P_DEFAULT) <= 0) {
    throw SofaError(std::string("SOFA: missing mandatory variable '") + name + "'");
  }
  Handle ds(H5Dopen2(file, name, H5P_DEFAULT), H5Dclose);
  if (!ds.valid()) throw SofaError(std::string("SOFA: cannot open variable '") + name + "'");
  Handle space(H5Dget_space(ds.get()), H5Sclose);
  const int rank = H5Sget_simple_extent_ndims(space.get());
  if (rank < 0) throw SofaError(std::string("SOFA: bad dataspace for '") + name + "'");
  Dataset out;
  out.dims.resize(static_cast<std::size_t>(rank));
  H5Sget_simple_extent_dims(space.get(), out.dims.data(), nullptr);
  std::size_t total = 1;
  for (hsize_t d : out.dims) total *= static_cast<std::size_t>(d);
  out.values.resize(total);
  if (total > 0 &&
      H5Dread(ds.get(), H5T_NATIVE_DOUBLE, H5S_ALL, H5S_ALL, H5P_DEFAULT, out.values.data()) < 0) {
    throw SofaError(std::string("SOFA: cannot read '") + name + "' as numbers");
  }
  return out;
}

inline std::string datasetAttribute(hid_t file, const char* dataset, const char* attr) {
  Handle ds(H5Dopen2(file, dataset, H5P_DEFAULT), H5Dclose);
  if (!ds.valid()) return {};
  return stringAttribute(ds.get(), attr);
}

}  // namespace sofa_detail

/// Loads a SimpleFreeFieldHRIR file: one RawIRs per receiver.
///
/// Source positions must be spherical in "degree, degree, metre". Positions
/// are grouped into distinct directions and distances, which must form a full
/// grid.
inline std::vector<RawIRs> loadSofa(const std::string& path) {
  using namespace sofa_detail;
  H5Eset_auto2(H5E_DEFAULT, nullptr, nullptr);
  if (H5Fis_hdf5(path.c_str()) <= 0) throw SofaError("SOFA: '" + path + "' is not an HDF5 file");
  Handle file(H5Fopen(path.c_str(), H5F_ACC_RDONLY, H5P_DEFAULT), H5Fclose);
  if (!file.valid()) throw SofaError("SOFA: cannot open '" + path + "'");
  Handle root(H5Gopen2(file.get(), "/", H5P_DEFAULT), H5Gclose);

  const std::string conventions = stringAttribute(root.get(), "Conventions");
  if (conventions != "SOFA") {
    throw SofaError("SOFA: unsupported convention: Conventions attribute is '" + conventions + "'");
  }
  const std::string sofaConventions = stringAttribute(root.get(), "SOFAConventions");
  if (sofaConventions != "SimpleFreeFieldHRIR") {
    throw SofaError("SOFA: unsupported convention '" + sofaConventions +
                    "' (only SimpleFreeFieldHRIR is read)");
  }

  const Dataset ir = readDoubles(file.get(), "Data.IR");
  if (ir.dims.size() != 3) throw SofaError("SOFA: Data.IR must be M x R x N");
  const auto M = static_cast<std::size_t>(ir.dims[0]);
  const auto receivers = static_cast<std::size_t>(ir.dims[1]);
  const auto N = static_cast<std::size_t>(ir.dims[2]);

  const Dataset fsData = readDoubles(file.get(), "Data.SamplingRate");
  if (fsData.values.empty()) throw SofaError("SOFA: Data.SamplingRate is empty");
  const double fs = fsData.values[0];
  for (double v : fsData.values) {
    if (v != fs) throw SofaError("SOFA: varying sampling rates are not supported");
  }
  const std::string fsUnits = lower(datasetAttribute(file.get(), "Data.SamplingRate", "Units"));
  if (!fsUnits.empty() && fsUnits != "hertz") {
    throw SofaError("SOFA: unsupported units '" + fsUnits + "' for Data.SamplingRate");
  }

  const Dataset pos = readDoubles(file.get(), "SourcePosition");
  if (pos.dims.size() != 2 || pos.dims[1] != 3) throw SofaError("SOFA: SourcePosition must be M x 3");
  const auto P = static_cast<std::size_t>(pos.dims[0]);
  if (P != M && P != 1) throw SofaError("SOFA: SourcePosition rows do not match Data.IR");

  const std::string type = lower(datasetAttribute(file.get(), "SourcePosition", "Type"));
  if (type != "spherical") {
    throw SofaError("SOFA: unsupported SourcePosition type '" + type + "' (expected spherical)");
  }
  const std::string units = datasetAttribute(file.get(), "SourcePosition", "Units");
  {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : units + ",") {
      if (c == ',') {
        parts.push_back(lower(trim(cur)));
        cur.clear();
      } else {
        cur += c;
      }
    }
    const char* expected[] = {"degree", "degree", "metre"};
    if (parts.size() != 3) throw SofaError("SOFA: unsupported units '" + units + "' for SourcePosition");
    for (std::size_t i = 0; i < 3; ++i) {
      const bool ok = parts[i] == expected[i] || (i == 2 && parts[i] == "meter");
      if (!ok) {
        throw SofaError("SOFA: unsupported unit '" + parts[i] + "' in SourcePosition (expected " +
                        expected[i] + ")");
      }
    }
  }

  std::vector<Direction> dirs;
  std::map<Direction, std::size_t> dirIndex;
  std::vector<double> dists;
  std::vector<std::pair<std::size_t, double>> cell(M);
  for (std::size_t m = 0; m < M; ++m) {
    const std::size_t row = P == 1 ? 0 : m;
    const double az = pos.values[row * 3], el = pos.values[row * 3 + 1], r = pos.values[row * 3 + 2];
    Direction d;
    try {
      d = Direction(az, el);
    } catch (const Error& e) {
      throw SofaError("SOFA: source position " + std::to_string(m) + ": " + e.what());
    }
    auto [it, inserted] = dirIndex.emplace(d, dirs.size());
    if (inserted) dirs.push_back(d);
    cell[m] = {it->second, r};
    if (std::find(dists.begin(), dists.end(), r) == dists.end()) dists.push_back(r);
  }
  std::sort(dists.begin(), dists.end());
  if (dirs.size() * dists.size() != M) {
    throw SofaError("SOFA: source positions do not form a full direction x distance grid");
  }

  std::vector<Array3<double>> irs(receivers, Array3<double>(dirs.size(), N, dists.size()));
  std::vector<bool> filled(M, false);
  for (std::size_t m = 0; m < M; ++m) {
    const std::size_t d = cell[m].first;
    const auto r = static_cast<std::size_t>(
        std::lower_bound(dists.begin(), dists.end(), cell[m].second) - dists.begin());
    const std::size_t slot = d + dirs.size() * r;
    if (filled[slot]) throw SofaError("SOFA: duplicate source position at row " + std::to_string(m));
    filled[slot] = true;
    for (std::size_t e = 0; e < receivers; ++e)
      for (std::size_t n = 0; n < N; ++n) irs[e](d, n, r) = ir.values[(m * receivers + e) * N + n];
  }

  std::string title = stringAttribute(root.get(), "Title");
  if (title.empty()) title = path;
  std::vector<RawIRs> out;
  out.reserve(receivers);
  for (std::size_t e = 0; e < receivers; ++e) {
    out.emplace_back(title + " (receiver " + std::to_string(e + 1) + ")", std::move(irs[e]), fs,
                     dirs, dists);
  }
  return out;
}

}  // namespace dirkit::io
