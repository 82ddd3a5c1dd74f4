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


#include "config.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "pdoenc/errors.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc::cli {
namespace {

using nlohmann::json;

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(at(path, key), "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

double number_or(const json& j, const std::string& path, const std::string& key, double fallback) {
  return j.contains(key) ? number(j[key], at(path, key)) : fallback;
}

// A complex number is a plain number or [re, im].
cplx complex_number(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(path, "expected a number or [re, im]");
}

std::vector<double> number_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], at(path, i)));
  return out;
}

// Builtin payloads: cos(s y), sin(s y), (1 + cos(s y)) / 2, 1 / (1 + (s y)^2),
// exp(-s y^2), s y and (s y)^2.
RealFunction builtin(const std::string& name, double s, const std::string& path) {
  if (name == "cos") return [s](double y) { return std::cos(s * y); };
  if (name == "sin") return [s](double y) { return std::sin(s * y); };
  if (name == "raised-cos") return [s](double y) { return 0.5 * (1.0 + std::cos(s * y)); };
  if (name == "lorentzian") return [s](double y) { return 1.0 / (1.0 + (s * y) * (s * y)); };
  if (name == "gaussian") return [s](double y) { return std::exp(-s * y * y); };
  if (name == "linear") return [s](double y) { return s * y; };
  if (name == "square") return [s](double y) { return (s * y) * (s * y); };
  throw ConfigError(path, "unknown builtin '" + name + "'");
}

// One-dimensional factor as written in a config. Kind "any" has no parity
// and is only accepted where the pipeline does not need one.
struct Term1D {
  std::string kind;
  Factor factor;
  RealFunction g;
  double bound = 1.0;
  cplx operator()(double y) const { return kind == "any" ? cplx(g(y)) : factor(y); }
};

Term1D parse_term(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected a factor object");
  const json& k = field(j, path, "kind");
  if (!k.is_string()) throw ConfigError(at(path, "kind"), "expected a string");
  Term1D t;
  t.kind = k.get<std::string>();
  if (t.kind == "one") {
    t.factor = Factor::one();
    return t;
  }
  if (t.kind == "exponential") {
    t.factor = Factor::exponential(number(field(j, path, "theta"), at(path, "theta")));
    return t;
  }
  if (t.kind != "even" && t.kind != "odd" && t.kind != "any")
    throw ConfigError(at(path, "kind"), "unknown factor kind '" + t.kind + "'");
  if (j.contains("poly")) {
    // Monomial coefficients in the factor's argument.
    const std::vector<double> c = number_list(j["poly"], at(path, "poly"));
    t.g = [c](double y) {
      double v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
      return v;
    };
  } else if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw ConfigError(at(path, "builtin"), "expected a name");
    t.g = builtin(j["builtin"].get<std::string>(), number_or(j, path, "scale", 1.0), at(path, "builtin"));
  } else {
    throw ConfigError(path, "factor needs 'poly' or 'builtin'");
  }
  t.bound = number(field(j, path, "bound"), at(path, "bound"));
  if (t.kind == "even") t.factor = Factor::even(t.g, t.bound);
  if (t.kind == "odd") t.factor = Factor::odd(t.g, t.bound);
  return t;
}

std::vector<Term1D> parse_terms(const json& j, const std::string& path, int d) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of factors");
  if (static_cast<int>(j.size()) != d) throw ConfigError(path, "expected " + std::to_string(d) + " factors");
  std::vector<Term1D> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_term(j[i], at(path, i)));
  return out;
}

std::vector<Factor> as_factors(const std::vector<Term1D>& ts, const std::string& path) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].kind == "any")
      throw ConfigError(at(path, i) + ".kind", "fully separable factors must be even, odd or exponential");
    out.push_back(ts[i].factor);
  }
  return out;
}

double product_bound(const std::vector<Term1D>& ts) {
  double b = 1.0;
  for (const auto& t : ts) b *= t.kind == "one" || t.kind == "exponential" ? 1.0 : t.bound;
  return b;
}

SpaceFunction space_product(std::vector<Term1D> ts) {
  return [ts](const std::vector<double>& x) {
    cplx v = 1.0;
    for (std::size_t k = 0; k < ts.size(); ++k) v *= ts[k](x[k]);
    return v;
  };
}

FrequencyFunction frequency_product(std::vector<Term1D> ts) {
  return [ts](const std::vector<std::int64_t>& xi) {
    cplx v = 1.0;
    for (std::size_t k = 0; k < ts.size(); ++k) v *= ts[k](static_cast<double>(xi[k]));
    return v;
  };
}

std::vector<Term1D> as_terms(const std::vector<Factor>& fs) {
  std::vector<Term1D> out;
  for (const auto& f : fs) {
    Term1D t;
    t.kind = f.kind == Factor::Kind::Exponential ? "exponential" : "even";
    t.factor = f;
    t.bound = f.bound;
    out.push_back(t);
  }
  return out;
}

SeparableSymbol as_separable(const FullySeparableSymbol& fs) {
  const auto alpha = as_terms(fs.alpha), beta = as_terms(fs.beta);
  return SeparableSymbol{space_product(alpha), frequency_product(beta), product_bound(alpha), product_bound(beta)};
}

GenericSymbol parse_generic(const json& j, const std::string& path, const GridSpec& grid, std::uint64_t seed) {
  const std::int64_t N = grid.N();
  const double bound = number(field(j, path, "bound"), at(path, "bound"));
  if (j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array() || static_cast<std::int64_t>(t.size()) != N * N)
      throw ConfigError(at(path, "table"), "expected N^2 = " + std::to_string(N * N) + " entries");
    std::vector<cplx> v;
    for (std::size_t i = 0; i < t.size(); ++i) v.push_back(complex_number(t[i], at(at(path, "table"), i)));
    return GenericSymbol::from_table(grid, std::move(v), bound);
  }
  if (j.contains("random")) {
    // Uniform in the disc of radius `bound`, drawn from the run seed.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> r(0.0, 1.0);
    std::vector<cplx> v(N * N);
    for (auto& z : v) z = std::polar(bound * std::sqrt(r(rng)), 2.0 * kPi * r(rng));
    return GenericSymbol::from_table(grid, std::move(v), bound);
  }
  if (j.contains("alpha") && j.contains("beta")) {
    const SpaceFunction a = space_product(parse_terms(j["alpha"], at(path, "alpha"), grid.d));
    const FrequencyFunction b = frequency_product(parse_terms(j["beta"], at(path, "beta"), grid.d));
    GenericSymbol g;
    g.bound = bound;
    g.a = [a, b](const std::vector<double>& x, const std::vector<std::int64_t>& xi) { return a(x) * b(xi); };
    return g;
  }
  throw ConfigError(path, "generic symbol needs 'table', 'random' or 'alpha' and 'beta'");
}

SimpleSymbol parse_simple(const json& j, const std::string& path, const GridSpec& grid, std::uint64_t seed) {
  const json& type = field(j, path, "type");
  if (!type.is_string()) throw ConfigError(at(path, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "generic") return parse_generic(j, path, grid, seed);
  if (t != "fully-separable" && t != "separable")
    throw ConfigError(at(path, "type"), "unknown symbol type '" + t + "'");
  const auto alpha = parse_terms(field(j, path, "alpha"), at(path, "alpha"), grid.d);
  const auto beta = parse_terms(field(j, path, "beta"), at(path, "beta"), grid.d);
  if (t == "fully-separable")
    return FullySeparableSymbol{as_factors(alpha, at(path, "alpha")), as_factors(beta, at(path, "beta"))};
  return SeparableSymbol{space_product(alpha), frequency_product(beta),
                         number_or(j, path, "alpha_bound", product_bound(alpha)),
                         number_or(j, path, "beta_bound", product_bound(beta))};
}

SymbolSpec parse_symbol(const json& j, const std::string& path, const GridSpec& grid, std::uint64_t seed) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  if (j.value("type", std::string()) != "lcu")
    return std::visit([](auto&& v) -> SymbolSpec { return v; }, parse_simple(j, path, grid, seed));
  const json& terms = field(j, path, "terms");
  const json& y = field(j, path, "y");
  if (!terms.is_array() || terms.empty()) throw ConfigError(at(path, "terms"), "expected a nonempty list");
  if (!y.is_array() || y.size() != terms.size())
    throw ConfigError(at(path, "y"), "expected one coefficient per term");
  LinearCombination lc;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    lc.y.push_back(complex_number(y[i], at(at(path, "y"), i)));
    lc.terms.push_back(parse_simple(terms[i], at(at(path, "terms"), i), grid, seed));
  }
  return lc;
}

std::vector<FourierMode> parse_omega(const json& j, const std::string& path, int d) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of modes");
  std::vector<FourierMode> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    FourierMode m;
    m.c = complex_number(field(j[i], p, "c"), at(p, "c"));
    const json& q = field(j[i], p, "q");
    if (!q.is_array() || static_cast<int>(q.size()) != d)
      throw ConfigError(at(p, "q"), "expected " + std::to_string(d) + " integers");
    for (std::size_t k = 0; k < q.size(); ++k) m.q.push_back(integer(q[k], at(at(p, "q"), k)));
    out.push_back(std::move(m));
  }
  return out;
}

Pipeline default_pipeline(const SymbolSpec& s) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GenericSymbol>) return Pipeline::Generic;
        else if constexpr (std::is_same_v<T, SeparableSymbol>) return Pipeline::Separable;
        else if constexpr (std::is_same_v<T, FullySeparableSymbol>) return Pipeline::FullySeparable;
        else return Pipeline::Lcu;
      },
      s);
}

bool pipeline_accepts(Pipeline p, const SymbolSpec& s) {
  switch (p) {
    case Pipeline::Generic: return true;  // any symbol can be tabulated
    case Pipeline::Separable:
      return std::holds_alternative<SeparableSymbol>(s) || std::holds_alternative<FullySeparableSymbol>(s);
    case Pipeline::FullySeparable: return std::holds_alternative<FullySeparableSymbol>(s);
    case Pipeline::Lcu: return true;
    default: return false;
  }
}

DenseOperator radial_multiplier(const GridSpec& g, const std::function<double(double)>& f) {
  DenseOperator d = DenseOperator::Zero(g.N(), g.N());
  for (std::int64_t k = 0; k < g.N(); ++k) {
    double r2 = 0.0;
    for (auto v : g.unflatten(k)) {
      const double s = static_cast<double>(fold_frequency(v, g.P()));
      r2 += s * s;
    }
    d(k, k) = f(r2);
  }
  const DenseOperator F = dft_matrix(g);
  return F * d * dagger(F);
}

}  // namespace

Pipeline pipeline_from_string(const std::string& name, const std::string& path) {
  if (name == "generic") return Pipeline::Generic;
  if (name == "separable") return Pipeline::Separable;
  if (name == "fully-separable") return Pipeline::FullySeparable;
  if (name == "lcu") return Pipeline::Lcu;
  if (name == "elliptic") return Pipeline::Elliptic;
  if (name == "inverse") return Pipeline::Inverse;
  throw ConfigError(path, "unknown pipeline '" + name + "'");
}

const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Generic: return "generic";
    case Pipeline::Separable: return "separable";
    case Pipeline::FullySeparable: return "fully-separable";
    case Pipeline::Lcu: return "lcu";
    case Pipeline::Elliptic: return "elliptic";
    case Pipeline::Inverse: return "inverse";
  }
  return "?";
}

RunConfig parse_config(const json& j, const Overrides& o) {
  if (!j.is_object()) throw ConfigError("(root)", "expected an object");
  RunConfig cfg;
  const json& grid = field(j, "", "grid");
  const auto p = integer(field(grid, "grid", "p"), "grid.p");
  const auto d = integer(field(grid, "grid", "d"), "grid.d");
  if (p < 1 || p > 12) throw ConfigError("grid.p", "must lie in [1, 12]");
  if (d < 1 || p * d > 24) throw ConfigError("grid.d", "must be >= 1 with p d <= 24");
  cfg.grid = GridSpec(static_cast<int>(p), static_cast<int>(d));

  cfg.epsilon = o.epsilon ? *o.epsilon : number(field(j, "", "epsilon"), "epsilon");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon", "must be positive");
  if (o.seed) cfg.seed = *o.seed;
  else if (j.contains("seed")) cfg.seed = static_cast<std::uint64_t>(integer(j["seed"], "seed"));
  if (o.max_wires) cfg.max_wires = *o.max_wires;
  else if (j.contains("caps")) cfg.max_wires = static_cast<int>(integer(field(j["caps"], "caps", "max_wires"), "caps.max_wires"));
  if (cfg.max_wires < 1 || cfg.max_wires > 30) throw ConfigError("caps.max_wires", "must lie in [1, 30]");

  std::optional<Pipeline> pipe;
  if (o.pipeline) pipe = pipeline_from_string(*o.pipeline, "--pipeline");
  else if (j.contains("pipeline")) {
    if (!j["pipeline"].is_string()) throw ConfigError("pipeline", "expected a string");
    pipe = pipeline_from_string(j["pipeline"].get<std::string>());
  }

  if (pipe == Pipeline::Elliptic) {
    cfg.pipeline = Pipeline::Elliptic;
    cfg.omega = parse_omega(field(j, "", "omega"), "omega", cfg.grid.d);
    return cfg;
  }
  if (pipe == Pipeline::Inverse) {
    cfg.pipeline = Pipeline::Inverse;
    if (cfg.epsilon > 0.5) throw ConfigError("epsilon", "the inverse pipeline needs epsilon <= 1/2");
    return cfg;
  }
  cfg.symbol = parse_symbol(field(j, "", "symbol"), "symbol", cfg.grid, cfg.seed);
  cfg.pipeline = pipe ? *pipe : default_pipeline(*cfg.symbol);
  if (!pipeline_accepts(cfg.pipeline, *cfg.symbol))
    throw ConfigError("pipeline", std::string("pipeline '") + to_string(cfg.pipeline) + "' cannot encode this symbol");
  return cfg;
}

RunConfig load_config(const std::string& path, const Overrides& o) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j, o);
}

PipelineRun run_pipeline(const RunConfig& cfg) {
  simulation_caps().state_wires = cfg.max_wires;
  simulation_caps().dense_wires = std::min(simulation_caps().dense_wires, cfg.max_wires);
  PipelineRun run;
  const GridSpec& g = cfg.grid;
  switch (cfg.pipeline) {
    case Pipeline::Elliptic: run.encoding = elliptic_encoding(cfg.omega, g, cfg.epsilon); break;
    case Pipeline::Inverse: {
      RadialInverse ri = build_radial_inverse(g, cfg.epsilon);
      run.encoding = std::move(ri.encoding);
      run.terms = std::move(ri.terms);
      break;
    }
    case Pipeline::Generic: {
      const WrappedSymbol w = wrap_symbol(*cfg.symbol, g);
      double bound = w.sup_abs();
      if (const auto* gs = std::get_if<GenericSymbol>(&*cfg.symbol)) bound = gs->bound;
      run.encoding = generic_pdo_encoding(w, bound, cfg.epsilon);
      break;
    }
    case Pipeline::Separable:
      if (const auto* fs = std::get_if<FullySeparableSymbol>(&*cfg.symbol))
        run.encoding = separable_pdo_encoding(as_separable(*fs), g, cfg.epsilon);
      else
        run.encoding = separable_pdo_encoding(std::get<SeparableSymbol>(*cfg.symbol), g, cfg.epsilon);
      break;
    case Pipeline::FullySeparable:
      run.encoding = fully_separable_pdo_encoding(std::get<FullySeparableSymbol>(*cfg.symbol), g, cfg.epsilon);
      break;
    case Pipeline::Lcu: {
      LinearCombination lc;
      if (const auto* l = std::get_if<LinearCombination>(&*cfg.symbol)) {
        lc = *l;
      } else {
        lc.y = {1.0};
        lc.terms = {std::visit(
            [](const auto& v) -> SimpleSymbol {
              if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LinearCombination>) throw std::logic_error("unreachable");
              else return v;
            },
            *cfg.symbol)};
      }
      run.encoding = lcu_pdo_encoding(lc, g, cfg.epsilon);
      break;
    }
  }
  if (run.encoding.circuit.wire_count() > cfg.max_wires)
    throw ResourceError("encoding uses " + std::to_string(run.encoding.circuit.wire_count()) +
                        " wires, above the cap of " + std::to_string(cfg.max_wires));
  return run;
}

Reference reference_for(const RunConfig& cfg, const PipelineRun& run) {
  Reference ref;
  ref.bound = run.encoding.epsilon;
  if (cfg.pipeline == Pipeline::Inverse) {
    const ExpSumApprox& t = *run.terms;
    ref.matrix = radial_multiplier(cfg.grid, [&t](double r2) {
      double s = 0.0;
      for (std::size_t m = 0; m < t.size(); ++m) s += t.weights[m] * std::exp(-t.exponents[m] * r2);
      return s;
    });
  } else if (cfg.pipeline == Pipeline::Elliptic) {
    ref.matrix = dense_pdo_matrix(wrap_symbol(elliptic_symbol(cfg.omega, cfg.grid), cfg.grid));
  } else {
    ref.matrix = dense_pdo_matrix(wrap_symbol(*cfg.symbol, cfg.grid));
  }
  return ref;
}

json report_json(const RunConfig& cfg, const EncodingReport& r) {
  return json{{"pipeline", to_string(cfg.pipeline)},
              {"grid", {{"p", cfg.grid.p}, {"d", cfg.grid.d}}},
              {"gamma", r.gamma},
              {"ancillas", r.ancillas},
              {"epsilon_claimed", r.claimed_error},
              {"defect_spectral", r.defect_spectral},
              {"defect_max", r.defect_max},
              {"gates_elementary", r.elementary_gates},
              {"oracle_calls", r.oracle_calls},
              {"success_probability", r.success_probability},
              {"within_bound", r.within_bound}};
}

RealPolynomial parse_polynomial(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected {\"chebyshev\": [...]} or {\"monomial\": [...]}");
  if (j.contains("chebyshev")) return RealPolynomial::from_chebyshev(number_list(j["chebyshev"], at(path, "chebyshev")));
  if (j.contains("monomial")) return RealPolynomial::from_monomial(number_list(j["monomial"], at(path, "monomial")));
  throw ConfigError(path, "expected 'chebyshev' or 'monomial' coefficients");
}

}  // namespace pdoenc::cli
