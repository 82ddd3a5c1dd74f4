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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "pdoenc/errors.hpp"
#include "pdoenc/listing.hpp"
#include "pdoenc/qsp.hpp"

namespace {

using namespace pdoenc;
using namespace pdoenc::cli;

enum Exit { kPass = 0, kVerifyFail = 1, kConfigError = 2, kResourceCap = 3 };

struct Options {
  std::string config;
  std::string out;
  std::string terms_out;
  std::string pipeline;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  int max_wires = 0;
  std::string chebyshev;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw ConfigError("--out", "cannot write '" + path + "'");
  os << text;
}

Overrides overrides(const CLI::App& sub, const Options& o) {
  Overrides ov;
  if (sub.count("--pipeline")) ov.pipeline = o.pipeline;
  if (sub.count("--epsilon")) ov.epsilon = o.epsilon;
  if (sub.count("--seed")) ov.seed = o.seed;
  if (sub.count("--max-wires")) ov.max_wires = o.max_wires;
  return ov;
}

int cmd_encode(const CLI::App& sub, const Options& o) {
  const RunConfig cfg = load_config(o.config, overrides(sub, o));
  const PipelineRun run = run_pipeline(cfg);
  const BlockEncoding& be = run.encoding;
  std::ostringstream os;
  os << "# pipeline " << to_string(cfg.pipeline) << '\n';
  os << "# ancillas " << be.ancilla_count() << '\n';
  os << "# gates_elementary " << be.circuit.elementary_gate_count() << '\n';
  os << "# oracle_calls " << be.circuit.oracle_call_count() << '\n';
  os << write_encoding(be);
  emit(o.out, os.str());
  if (run.terms) {
    std::string path = o.terms_out;
    if (path.empty() && !o.out.empty() && o.out != "-") path = o.out + ".terms";
    if (!path.empty()) emit(path, run.terms->to_text());
  }
  std::fprintf(stderr, "gamma %.12g ancillas %d epsilon %.3g wires %d\n", be.gamma, be.ancilla_count(), be.epsilon,
               be.circuit.wire_count());
  return kPass;
}

int cmd_verify(const CLI::App& sub, const Options& o) {
  const RunConfig cfg = load_config(o.config, overrides(sub, o));
  const PipelineRun run = run_pipeline(cfg);
  const Reference ref = reference_for(cfg, run);
  const EncodingReport r = verify_encoding(run.encoding, ref.matrix, ref.bound);
  emit(o.out, report_json(cfg, r).dump(2) + "\n");
  if (!r.within_bound)
    std::fprintf(stderr, "verification failed: defect %.6g above bound %.6g\n", r.defect_spectral, r.claimed_error);
  return r.within_bound ? kPass : kVerifyFail;
}

int cmd_phases(const CLI::App& sub, const Options& o) {
  RealPolynomial target;
  if (!o.chebyshev.empty()) {
    nlohmann::json coeffs = nlohmann::json::array();
    std::istringstream is(o.chebyshev);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        coeffs.push_back(std::stod(tok));
      } catch (const std::logic_error&) {
        throw ConfigError("--chebyshev", "not a number: '" + tok + "'");
      }
    }
    target = parse_polynomial(nlohmann::json{{"chebyshev", coeffs}}, "--chebyshev");
  } else if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw ConfigError("--config", "cannot open '" + o.config + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("polynomial")) throw ConfigError("polynomial", "missing field");
    target = parse_polynomial(j["polynomial"]);
  } else {
    throw ConfigError("--chebyshev", "give coefficients or a --config with a polynomial");
  }
  if (target.parity == Parity::None) throw ContractViolation("target polynomial has no definite parity");
  PhaseSolverOptions opts;
  if (sub.count("--seed")) opts.seed = o.seed;
  const PhaseFactors ph = find_phases(target, opts);
  double residual = 0.0;
  for (double x : chebyshev_nodes(ph.degree() + 1)) residual = std::max(residual, std::abs(qsp_real_part(ph, x) - target(x)));
  char line[64];
  std::snprintf(line, sizeof line, "# residual %.3e\n", residual);
  emit(o.out, ph.to_text() + line);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block encodings of discretized pseudo-differential operators"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON run configuration")->required();
    sub->add_option("--pipeline", o.pipeline,
                    "generic | separable | fully-separable | lcu | elliptic | inverse");
    sub->add_option("--epsilon", o.epsilon, "target accuracy");
    sub->add_option("--seed", o.seed, "seed for random symbols");
    sub->add_option("--max-wires", o.max_wires, "simulation cap in wires");
    sub->add_option("--out", o.out, "output path (default stdout)");
  };
  CLI::App* encode = app.add_subcommand("encode", "build an encoding and write its circuit listing");
  common(encode);
  encode->add_option("--terms-out", o.terms_out, "exponential-sum terms (inverse pipeline)");
  CLI::App* verify = app.add_subcommand("verify", "build, simulate and check against the dense operator");
  common(verify);
  CLI::App* phases = app.add_subcommand("phases", "solve phase factors for a parity-definite polynomial");
  phases->add_option("--chebyshev", o.chebyshev, "comma separated Chebyshev coefficients");
  phases->add_option("--config", o.config, "JSON file with a 'polynomial' field");
  phases->add_option("--seed", o.seed, "solver seed");
  phases->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (*encode) return cmd_encode(*encode, o);
    if (*verify) return cmd_verify(*verify, o);
    return cmd_phases(*phases, o);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const ContractViolation& e) {
    std::fprintf(stderr, "contract violation: %s\n", e.what());
    return kConfigError;
  } catch (const DimensionMismatch& e) {
    std::fprintf(stderr, "dimension mismatch: %s\n", e.what());
    return kConfigError;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kResourceCap;
  } catch (const ApproximationError& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kResourceCap;
  } catch (const SolverFailure& e) {
    std::fprintf(stderr, "phase solver failed: %s (residual %.3e)\n", e.what(), e.residual());
    return kVerifyFail;
  }
}
