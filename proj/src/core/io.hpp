// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/transform.hpp"

namespace slt {

// Signals: raw little-endian float64 (or interleaved complex128) with a
// JSON sidecar {"d": ..., "n": ..., "dtype": "float64"|"complex128"}; the
// sidecar path is <path>.json.  CSV (n rows by n columns) for d = 2.
void write_signal(const GridFunction& g, const std::string& path);
GridFunction read_signal(const std::string& path);
void write_signal_csv(const GridFunction& g, const std::string& path);
GridFunction read_signal_csv(const std::string& path);

// Frame file: "SLTF" magic, uint32 header length, JSON header describing
// the frame parameters and each band, then per-band float64 mask payloads
// over the support bounding boxes.
void write_frame(const Frame& frame, const std::string& path);
Frame read_frame(const std::string& path);

// Coefficient dump mirroring the frame layout with complex128 payloads.
void write_coefficients(const Frame& frame, const CoefficientField& field,
                        const std::string& path);
CoefficientField read_coefficients(const Frame& frame, const std::string& path);

// Sequence coefficients: JSON header with per-band lattice geometry,
// complex128 payload per band.
void write_sequence(const SequenceCoefficients& seq, const std::string& path);
SequenceCoefficients read_sequence(const std::string& path);

// Window-bank configuration (smoothstep degree plus the support breakpoints
// of every profile) as a JSON document, and its inverse.
std::string window_bank_config(const WindowBank& bank);
WindowBank window_bank_from_config(const std::string& json_text);

}  // namespace slt
