// Copyright 2026 The QCrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCRANK_IO_H
#define QCRANK_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qcrank/apps.h"
#include "qcrank/decoder.h"
#include "qcrank/noise.h"
#include "qcrank/types.h"

namespace qcrank {

// JSON documents are written with sorted keys and two-space indentation, so
// equal values always serialize to identical bytes.

std::string layout_to_json(const Layout &layout);
Layout layout_from_json(std::string_view text);

/// {"layout": {...}, "counts": {"<bits>": n, ...}, "shots": total}
std::string histogram_to_json(const ShotHistogram &h);
ShotHistogram histogram_from_json(std::string_view text);

/// {"k": K, "means": [...], "thresholds": [...]}
std::string calibration_to_json(const CalibrationTable &t);
CalibrationTable calibration_from_json(std::string_view text);

/// {"bit_depth": b, "values": [...]}
std::string sequence_to_json(const DataSequence &s);
DataSequence sequence_from_json(std::string_view text);

std::string noise_model_to_json(const NoiseModel &m);
/// Accepts a full model object; missing fields keep the ideal defaults.
NoiseModel noise_model_from_json(std::string_view text);

/// Plain (P1) or raw (P4) portable bitmap.
std::string write_pbm(const Bitmap &b, bool raw = false);
/// Reads P1 or P4, with comments.
Bitmap read_pbm(std::string_view data);

std::string read_file(const std::filesystem::path &path);
/// Creates missing parent directories.
void write_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace qcrank

#endif
