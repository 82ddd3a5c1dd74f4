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


#include "pdoenc/listing.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "pdoenc/errors.hpp"

namespace pdoenc {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F fmt) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s == "-" || s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad(int line, const std::string& what) {
  throw ContractViolation("listing line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& s, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    bad(line, "not a number: '" + s + "'");
  }
  if (used != s.size()) bad(line, "trailing characters in number '" + s + "'");
  return v;
}

long long parse_int(const std::string& s, int line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad(line, "not an integer: '" + s + "'");
  return v;
}

std::vector<int> parse_wires(const std::string& s, int line) {
  std::vector<int> out;
  for (const auto& t : split(s, ',')) out.push_back(static_cast<int>(parse_int(t, line)));
  return out;
}

std::string gate_line(const Gate& g) {
  std::string out = to_string(g.kind);
  out += " targets=" + join(g.targets, [](int w) { return std::to_string(w); });
  out += " controls=" + join(g.controls, [](const Control& c) { return (c.on_one ? "" : "~") + std::to_string(c.wire); });
  switch (g.kind) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::ZExp:
    case GateKind::Phase:
      out += " angle=" + num(g.angle);
      break;
    case GateKind::Oracle:
      out += " label=" + (g.label.empty() ? std::string("-") : g.label);
      out += " inputs=" + join(g.inputs, [](int w) { return std::to_string(w); });
      out += " table=" + join(*g.table, [](std::uint64_t v) { return std::to_string(v); });
      break;
    case GateKind::Unitary: {
      out += " label=" + (g.label.empty() ? std::string("-") : g.label);
      std::vector<double> flat;
      const auto& m = *g.matrix;
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          flat.push_back(m(i, j).real());
          flat.push_back(m(i, j).imag());
        }
      out += " matrix=" + join(flat, num);
      break;
    }
    default:
      break;
  }
  return out;
}

Gate parse_gate(const std::string& text, int line) {
  std::istringstream is(text);
  std::string kind_name;
  is >> kind_name;
  std::map<std::string, std::string> fields;
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) bad(line, "expected key=value, got '" + tok + "'");
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  GateKind kind;
  try {
    kind = gate_kind_from_string(kind_name);
  } catch (const std::exception&) {
    bad(line, "unknown gate kind '" + kind_name + "'");
  }
  auto field = [&](const char* key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end()) bad(line, std::string("missing field ") + key);
    return it->second;
  };
  const auto targets = parse_wires(field("targets"), line);
  std::vector<Control> controls;
  for (const auto& t : split(field("controls"), ',')) {
    const bool open = !t.empty() && t[0] == '~';
    controls.push_back({static_cast<int>(parse_int(open ? t.substr(1) : t, line)), !open});
  }

  Gate g;
  switch (kind) {
    case GateKind::Oracle: {
      std::vector<std::uint64_t> table;
      for (const auto& t : split(field("table"), ',')) table.push_back(static_cast<std::uint64_t>(parse_int(t, line)));
      const std::string& label = field("label");
      g = oracle_gate(label == "-" ? "" : label, parse_wires(field("inputs"), line), targets, std::move(table));
      break;
    }
    case GateKind::Unitary: {
      const auto flat = split(field("matrix"), ',');
      const Eigen::Index dim = Eigen::Index{1} << targets.size();
      if (static_cast<Eigen::Index>(flat.size()) != 2 * dim * dim) bad(line, "matrix size does not match targets");
      DenseOperator m(dim, dim);
      std::size_t k = 0;
      for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i, k += 2)
          m(i, j) = cplx(parse_double(flat[k], line), parse_double(flat[k + 1], line));
      const std::string& label = field("label");
      g = unitary_gate(label == "-" ? "" : label, targets, std::move(m));
      break;
    }
    case GateKind::Phase:
      g = phase_gate(parse_double(field("angle"), line));
      break;
    case GateKind::Swap:
      if (targets.size() != 2) bad(line, "SWAP needs two targets");
      g = swap_gate(targets[0], targets[1]);
      break;
    default: {
      if (targets.size() != 1) bad(line, "single-wire gate needs one target");
      const int w = targets[0];
      switch (kind) {
        case GateKind::H: g = h_gate(w); break;
        case GateKind::X: g = x_gate(w); break;
        case GateKind::Z: g = z_gate(w); break;
        case GateKind::S: g = s_gate(w); break;
        case GateKind::Sdg: g = sdg_gate(w); break;
        case GateKind::Ry: g = ry_gate(w, parse_double(field("angle"), line)); break;
        case GateKind::Rz: g = rz_gate(w, parse_double(field("angle"), line)); break;
        case GateKind::ZExp: g = zexp_gate(w, parse_double(field("angle"), line)); break;
        default: bad(line, "unhandled gate kind");
      }
    }
  }
  return with_controls(std::move(g), std::move(controls));
}

}  // namespace

std::string write_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "# bit order: wire w is bit w of the basis index (wire 0 least significant)\n";
  os << "wires " << c.wire_count() << '\n';
  os << "global_phase " << num(c.global_phase().real()) << ' ' << num(c.global_phase().imag()) << '\n';
  os << "gates " << c.gates().size() << '\n';
  for (const auto& g : c.gates()) os << gate_line(g) << '\n';
  return os.str();
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Circuit c;
  bool have_wires = false;
  long long expected = -1, seen = 0;
  cplx phase = 1.0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "wires") {
      std::string v;
      ls >> v;
      c = Circuit(static_cast<int>(parse_int(v, lineno)));
      have_wires = true;
    } else if (head == "global_phase") {
      std::string re, im;
      ls >> re >> im;
      phase = cplx(parse_double(re, lineno), parse_double(im, lineno));
    } else if (head == "gates") {
      std::string v;
      ls >> v;
      expected = parse_int(v, lineno);
    } else if (head == "gamma" || head == "epsilon" || head == "hermitian" || head == "inputs" ||
               head == "outputs" || head == "workspace") {
      continue;  // encoding metadata, handled by parse_encoding
    } else {
      if (!have_wires) bad(lineno, "gate before the wires line");
      try {
        c.add(parse_gate(line, lineno));
      } catch (const ContractViolation&) {
        throw;
      } catch (const std::exception& e) {
        bad(lineno, e.what());
      }
      ++seen;
    }
  }
  if (!have_wires) throw ContractViolation("listing has no wires line");
  if (expected >= 0 && expected != seen)
    throw ContractViolation("listing announces " + std::to_string(expected) + " gates but has " + std::to_string(seen));
  c.set_global_phase(phase);
  return c;
}

std::string write_encoding(const BlockEncoding& be) {
  std::ostringstream os;
  auto wires = [](const std::vector<int>& v) { return join(v, [](int w) { return std::to_string(w); }); };
  os << "gamma " << num(be.gamma) << '\n';
  os << "epsilon " << num(be.epsilon) << '\n';
  os << "hermitian " << (be.hermitian ? 1 : 0) << '\n';
  os << "inputs " << wires(be.input_wires) << '\n';
  os << "outputs " << wires(be.output_wires) << '\n';
  os << "workspace " << be.workspace << '\n';
  os << write_circuit(be.circuit);
  return os.str();
}

BlockEncoding parse_encoding(const std::string& text) {
  BlockEncoding be;
  be.circuit = parse_circuit(text);
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head, v;
    ls >> head >> v;
    if (head == "gamma") be.gamma = parse_double(v, lineno);
    else if (head == "epsilon") be.epsilon = parse_double(v, lineno);
    else if (head == "hermitian") be.hermitian = parse_int(v, lineno) != 0;
    else if (head == "inputs") be.input_wires = parse_wires(v, lineno);
    else if (head == "outputs") be.output_wires = parse_wires(v, lineno);
    else if (head == "workspace") be.workspace = static_cast<int>(parse_int(v, lineno));
  }
  if (be.input_wires.size() != be.output_wires.size())
    throw ContractViolation("encoding listing has mismatched input and output registers");
  return be;
}

}  // namespace pdoenc
