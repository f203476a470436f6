// SPDX-License-Identifier: Apache-2.0
#include "core/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace slt {

using nlohmann::json;

namespace {

void write_bytes(std::ofstream& out, const void* data, size_t bytes) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
  if (!out) throw std::runtime_error("write failed");
}

void read_bytes(std::ifstream& in, void* data, size_t bytes) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(bytes));
  if (!in) throw std::runtime_error("read failed (truncated file?)");
}

json band_header(const Subband& band) {
  json h;
  h["kind"] = band.kind == BandKind::ShearAtom ? "shear"
              : band.kind == BandKind::DyadicAtom ? "dyadic"
                                                  : "lowpass";
  h["cone"] = band.cone;
  h["scale"] = band.scale;
  h["sigma"] = band.sigma;
  h["shear"] = band.shear;
  h["boundary"] = band.boundary;
  h["capped"] = band.capped;
  if (!band.aliases.empty()) {
    json al = json::array();
    for (const auto& [cone, shear] : band.aliases) al.push_back({{"cone", cone}, {"shear", shear}});
    h["aliases"] = al;
  }
  if (!band.box.empty) {
    h["box_lo"] = band.box.lo;
    h["box_hi"] = band.box.hi;
  }
  h["counts"] = band.counts;
  h["oversample"] = band.oversample;
  h["covol"] = band.covol;
  h["scale_volume"] = band.scale_volume;
  return h;
}

Subband band_from_header(const json& h, int dim) {
  Subband band;
  const std::string kind = h.at("kind").get<std::string>();
  band.kind = kind == "shear" ? BandKind::ShearAtom
              : kind == "dyadic" ? BandKind::DyadicAtom
                                 : BandKind::Lowpass;
  band.cone = h.at("cone").get<int>();
  band.scale = h.at("scale").get<int>();
  band.sigma = h.at("sigma").get<int>();
  band.shear = h.at("shear").get<std::vector<int64_t>>();
  band.boundary = h.at("boundary").get<bool>();
  band.capped = h.at("capped").get<bool>();
  if (h.contains("aliases")) {
    for (const auto& al : h.at("aliases"))
      band.aliases.emplace_back(al.at("cone").get<int>(),
                                al.at("shear").get<std::vector<int64_t>>());
  }
  if (h.contains("box_lo")) {
    band.box.lo = h.at("box_lo").get<std::vector<int>>();
    band.box.hi = h.at("box_hi").get<std::vector<int>>();
    band.box.empty = false;
  }
  band.counts = h.at("counts").get<std::vector<int>>();
  band.oversample = h.at("oversample").get<std::vector<int>>();
  band.covol = h.at("covol").get<double>();
  band.scale_volume = h.at("scale_volume").get<double>();
  (void)dim;
  return band;
}

void write_header_block(std::ofstream& out, const char magic[4], const json& header) {
  const std::string text = header.dump();
  out.write(magic, 4);
  const uint32_t len = static_cast<uint32_t>(text.size());
  write_bytes(out, &len, sizeof(len));
  write_bytes(out, text.data(), text.size());
}

json read_header_block(std::ifstream& in, const char magic[4]) {
  char got[4];
  read_bytes(in, got, 4);
  if (std::string(got, 4) != std::string(magic, 4))
    throw std::runtime_error("bad magic in binary file");
  uint32_t len = 0;
  read_bytes(in, &len, sizeof(len));
  std::string text(len, '\0');
  read_bytes(in, text.data(), len);
  return json::parse(text);
}

}  // namespace

void write_signal(const GridFunction& g, const std::string& path) {
  bool complex = false;
  for (const auto& v : g.samples)
    if (v.imag() != 0.0) {
      complex = true;
      break;
    }
  json side;
  side["d"] = g.dim;
  side["n"] = g.n;
  side["dtype"] = complex ? "complex128" : "float64";
  std::ofstream sout(path + ".json");
  if (!sout) throw std::runtime_error("cannot open " + path + ".json");
  sout << side.dump(2) << "\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  if (complex) {
    write_bytes(out, g.samples.data(), g.samples.size() * sizeof(cplx));
  } else {
    std::vector<double> re(g.size());
    for (size_t i = 0; i < g.size(); ++i) re[i] = g.samples[i].real();
    write_bytes(out, re.data(), re.size() * sizeof(double));
  }
}

GridFunction read_signal(const std::string& path) {
  std::ifstream sin(path + ".json");
  if (!sin) throw std::runtime_error("missing sidecar " + path + ".json");
  json side = json::parse(sin);
  const int dim = side.at("d").get<int>();
  const int n = side.at("n").get<int>();
  const std::string dtype = side.at("dtype").get<std::string>();
  GridFunction g(dim, n);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (dtype == "complex128") {
    read_bytes(in, g.samples.data(), g.size() * sizeof(cplx));
  } else if (dtype == "float64") {
    std::vector<double> re(g.size());
    read_bytes(in, re.data(), re.size() * sizeof(double));
    for (size_t i = 0; i < g.size(); ++i) g.samples[i] = cplx(re[i], 0.0);
  } else {
    throw std::runtime_error("unsupported dtype " + dtype);
  }
  return g;
}

void write_signal_csv(const GridFunction& g, const std::string& path) {
  if (g.dim != 2) throw std::invalid_argument("CSV signals are d=2 only");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  for (int r = 0; r < g.n; ++r) {
    for (int c = 0; c < g.n; ++c) {
      if (c) out << ",";
      out << g.samples[static_cast<size_t>(r) * g.n + c].real();
    }
    out << "\n";
  }
}

GridFunction read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cellv;
    while (std::getline(ss, cellv, ',')) row.push_back(std::stod(cellv));
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0 || static_cast<int>(rows[0].size()) != n)
    throw std::runtime_error("CSV signal must be square");
  GridFunction g(2, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.samples[static_cast<size_t>(r) * n + c] = rows[r][c];
  return g;
}

void write_frame(const Frame& frame, const std::string& path) {
  json header;
  header["format"] = "shearlet-frame";
  header["version"] = 1;
  header["d"] = frame.spec.dim;
  header["n"] = frame.spec.n;
  header["j_max"] = frame.spec.j_max;
  header["variant"] = to_string(frame.spec.variant);
  header["meyer_degree"] = frame.spec.meyer_degree;
  header["freq_scale"] = FrameSpec::kFreqScale;
  json bands = json::array();
  for (const auto& b : frame.bands) bands.push_back(band_header(b));
  header["bands"] = bands;
  header["lowpass"] = band_header(frame.lowpass);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_header_block(out, "SLTF", header);
  // Dense payload over each band's support bounding box.
  auto write_dense = [&](const Subband& b) {
    if (b.box.empty) return;
    std::vector<double> dense(static_cast<size_t>(b.box.count()), 0.0);
    const int dim = static_cast<int>(b.box.lo.size());
    std::vector<int> xi(dim);
    for (size_t k = 0; k < b.support.size(); ++k) {
      uint32_t flat = b.support[k];
      for (int a = dim - 1; a >= 0; --a) {
        xi[a] = signed_freq(static_cast<int>(flat % static_cast<uint32_t>(b.grid_n)), b.grid_n);
        flat /= static_cast<uint32_t>(b.grid_n);
      }
      size_t f = 0;
      for (int a = 0; a < dim; ++a)
        f = f * static_cast<size_t>(b.box.hi[a] - b.box.lo[a] + 1) +
            static_cast<size_t>(xi[a] - b.box.lo[a]);
      dense[f] = b.values[k];
    }
    write_bytes(out, dense.data(), dense.size() * sizeof(double));
  };
  for (const auto& b : frame.bands) write_dense(b);
  write_dense(frame.lowpass);
}

Frame read_frame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json header = read_header_block(in, "SLTF");
  Frame frame;
  frame.spec.dim = header.at("d").get<int>();
  frame.spec.n = header.at("n").get<int>();
  frame.spec.j_max = header.at("j_max").get<int>();
  frame.spec.variant = frame_variant_from_string(header.at("variant").get<std::string>());
  frame.spec.meyer_degree = header.at("meyer_degree").get<int>();
  frame.bank = WindowBank(frame.spec.meyer_degree);
  for (const auto& h : header.at("bands"))
    frame.bands.push_back(band_from_header(h, frame.spec.dim));
  frame.lowpass = band_from_header(header.at("lowpass"), frame.spec.dim);
  auto read_dense = [&](Subband& b) {
    b.grid_n = frame.spec.n;
    b.support.clear();
    b.values.clear();
    if (b.box.empty) return;
    std::vector<double> dense(static_cast<size_t>(b.box.count()));
    read_bytes(in, dense.data(), dense.size() * sizeof(double));
    const int dim = static_cast<int>(b.box.lo.size());
    std::vector<std::pair<uint32_t, double>> nz;
    std::vector<int> xi(dim);
    for (int a = 0; a < dim; ++a) xi[a] = b.box.lo[a];
    for (size_t f = 0; f < dense.size(); ++f) {
      if (dense[f] != 0.0) {
        size_t flat = 0;
        for (int a = 0; a < dim; ++a)
          flat = flat * static_cast<size_t>(b.grid_n) +
                 static_cast<size_t>(storage_freq(xi[a], b.grid_n));
        nz.emplace_back(static_cast<uint32_t>(flat), dense[f]);
      }
      int a = dim - 1;
      while (a >= 0 && ++xi[a] > b.box.hi[a]) xi[a--] = b.box.lo[a];
    }
    std::sort(nz.begin(), nz.end());
    b.support.resize(nz.size());
    b.values.resize(nz.size());
    for (size_t i = 0; i < nz.size(); ++i) {
      b.support[i] = nz[i].first;
      b.values[i] = nz[i].second;
    }
  };
  for (auto& b : frame.bands) read_dense(b);
  read_dense(frame.lowpass);
  return frame;
}

void write_coefficients(const Frame& frame, const CoefficientField& field,
                        const std::string& path) {
  json header;
  header["format"] = "shearlet-coefficients";
  header["version"] = 1;
  header["d"] = field.dim;
  header["n"] = field.n;
  header["bands"] = frame.bands.size();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_header_block(out, "SLTC", header);
  for (const auto& spec : field.band_spec) {
    const uint64_t count = spec.size();
    write_bytes(out, &count, sizeof(count));
    if (count) write_bytes(out, spec.data(), spec.size() * sizeof(cplx));
  }
  const uint64_t count = field.low_spec.size();
  write_bytes(out, &count, sizeof(count));
  if (count) write_bytes(out, field.low_spec.data(), field.low_spec.size() * sizeof(cplx));
}

CoefficientField read_coefficients(const Frame& frame, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json header = read_header_block(in, "SLTC");
  CoefficientField field;
  field.dim = header.at("d").get<int>();
  field.n = header.at("n").get<int>();
  const size_t bands = header.at("bands").get<size_t>();
  if (bands != frame.bands.size())
    throw std::runtime_error("coefficient file does not match the frame");
  field.band_spec.resize(bands);
  for (auto& spec : field.band_spec) {
    uint64_t count = 0;
    read_bytes(in, &count, sizeof(count));
    spec.resize(count);
    if (count) read_bytes(in, spec.data(), spec.size() * sizeof(cplx));
  }
  uint64_t count = 0;
  read_bytes(in, &count, sizeof(count));
  field.low_spec.resize(count);
  if (count) read_bytes(in, field.low_spec.data(), field.low_spec.size() * sizeof(cplx));
  return field;
}

void write_sequence(const SequenceCoefficients& seq, const std::string& path) {
  json header;
  header["format"] = "shearlet-sequence";
  header["version"] = 1;
  header["d"] = seq.dim;
  header["torus"] = seq.torus;
  json bands = json::array();
  for (const auto& g : seq.geometry) bands.push_back(band_header(g));
  header["bands"] = bands;
  header["lowpass"] = band_header(seq.low_geometry);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_header_block(out, "SLTS", header);
  for (const auto& vals : seq.values)
    write_bytes(out, vals.data(), vals.size() * sizeof(cplx));
  write_bytes(out, seq.low_values.data(), seq.low_values.size() * sizeof(cplx));
}

std::string window_bank_config(const WindowBank& bank) {
  json cfg;
  cfg["meyer_degree"] = bank.meyer_degree();
  cfg["psi1"] = {{"support", {1.0 / 16, 0.5}}, {"rise", {1.0 / 16, 0.125}},
                 {"flat", {0.125, 0.25}},      {"fall", {0.25, 0.5}}};
  cfg["psi2"] = {{"support", {-1.0, 1.0}}};
  cfg["phi_smooth"] = {{"flat", {0.0, 1.0 / 16}}, {"fall", {1.0 / 16, 0.125}}};
  cfg["phi_dyadic"] = {{"support", {0.5, 2.0}}, {"rise", {0.5, 1.0}}, {"fall", {1.0, 2.0}}};
  cfg["big_phi_dyadic"] = {{"flat", {0.0, 0.5}}, {"fall", {0.5, 1.0}}};
  cfg["big_psi"] = {{"flat", {0.0, 0.125}}, {"fall", {0.125, 0.25}}};
  return cfg.dump(2);
}

WindowBank window_bank_from_config(const std::string& json_text) {
  const json cfg = json::parse(json_text);
  return WindowBank(cfg.at("meyer_degree").get<int>());
}

SequenceCoefficients read_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json header = read_header_block(in, "SLTS");
  SequenceCoefficients seq;
  seq.dim = header.at("d").get<int>();
  seq.torus = header.at("torus").get<bool>();
  for (const auto& h : header.at("bands"))
    seq.geometry.push_back(band_from_header(h, seq.dim));
  seq.low_geometry = band_from_header(header.at("lowpass"), seq.dim);
  seq.zero_like();
  for (auto& vals : seq.values) read_bytes(in, vals.data(), vals.size() * sizeof(cplx));
  read_bytes(in, seq.low_values.data(), seq.low_values.size() * sizeof(cplx));
  return seq;
}

}  // namespace slt
