// Copyright 2026 The pdoenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdoenc/approx.hpp"
#include "pdoenc/pdo.hpp"
#include "pdoenc/pipelines.hpp"

namespace pdoenc::cli {

// Invalid configuration; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Pipeline { Generic, Separable, FullySeparable, Lcu, Elliptic, Inverse };

Pipeline pipeline_from_string(const std::string& name, const std::string& path = "pipeline");
const char* to_string(Pipeline p);

struct Overrides {
  std::optional<std::string> pipeline;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_wires;
};

struct RunConfig {
  GridSpec grid;
  Pipeline pipeline = Pipeline::FullySeparable;
  double epsilon = 1e-3;
  std::uint64_t seed = 7;
  int max_wires = 24;
  std::optional<SymbolSpec> symbol;  // absent for the elliptic and inverse builtins
  std::vector<FourierMode> omega;    // elliptic
};

RunConfig parse_config(const nlohmann::json& j, const Overrides& o = {});
RunConfig load_config(const std::string& path, const Overrides& o = {});

struct PipelineRun {
  BlockEncoding encoding;
  std::optional<ExpSumApprox> terms;  // inverse pipeline only
};

PipelineRun run_pipeline(const RunConfig& cfg);

// Dense operator the encoding is verified against, and the bound it must meet.
struct Reference {
  DenseOperator matrix;
  double bound = 0.0;
};

Reference reference_for(const RunConfig& cfg, const PipelineRun& run);

nlohmann::json report_json(const RunConfig& cfg, const EncodingReport& r);

// Polynomial target for the phases command: {"chebyshev": [...]} or
// {"monomial": [...]}.
RealPolynomial parse_polynomial(const nlohmann::json& j, const std::string& path = "polynomial");

}  // namespace pdoenc::cli
