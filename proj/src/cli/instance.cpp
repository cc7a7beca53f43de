#include "solvcohom/cli/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "solvcohom/errors.hpp"
#include "solvcohom/weights/invariant_complex.hpp"

namespace solvcohom::cli {

using nlohmann::json;

std::string to_string(InstanceKind kind) { return kind == InstanceKind::derham ? "derham" : "dolbeault"; }

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

// A JSON value together with its pointer, for positioned errors.
class Node {
public:
  Node(const json& value, std::string pointer) : value_(&value), pointer_(std::move(pointer)) {}

  const json& value() const { return *value_; }
  const std::string& pointer() const { return pointer_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pointer_.empty() ? "/" : pointer_, what); }

  bool has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

  Node operator[](const std::string& key) const {
    if (!value_->is_object()) fail("expected an object");
    auto it = value_->find(key);
    if (it == value_->end()) fail("missing key \"" + key + "\"");
    return Node(*it, pointer_ + "/" + escape_token(key));
  }
  Node operator[](std::size_t index) const { return Node(value_->at(index), pointer_ + "/" + std::to_string(index)); }

  std::size_t array_size() const {
    if (!value_->is_array()) fail("expected an array");
    return value_->size();
  }
  std::vector<std::pair<std::string, Node>> items() const {
    if (!value_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = value_->begin(); it != value_->end(); ++it)
      out.emplace_back(it.key(), Node(it.value(), pointer_ + "/" + escape_token(it.key())));
    return out;
  }

  std::string string() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }
  bool boolean() const {
    if (!value_->is_boolean()) fail("expected true or false");
    return value_->get<bool>();
  }
  std::size_t natural() const {
    if (!value_->is_number_unsigned()) fail("expected a non-negative integer");
    return value_->get<std::size_t>();
  }
  // Exact scalars are strings; plain JSON integers are accepted, floats never.
  std::string scalar_text() const {
    if (value_->is_string()) return value_->get<std::string>();
    if (value_->is_number_integer()) return std::to_string(value_->get<long long>());
    fail("expected an exact scalar written as a string");
  }
  GaussianRational scalar() const {
    try {
      return GaussianRational::parse(scalar_text());
    } catch (const ParseError& e) {
      fail(std::string("bad scalar: ") + e.what());
    }
  }
  PeriodValue period(const SymbolTable& table) const {
    try {
      return PeriodValue::parse(scalar_text(), table);
    } catch (const ParseError& e) {
      fail(std::string("bad period value: ") + e.what());
    }
  }

private:
  const json* value_;
  std::string pointer_;
};

class NameIndex {
public:
  explicit NameIndex(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }
  std::size_t operator()(const Node& node) const {
    auto name = node.string();
    auto it = index_.find(name);
    if (it == index_.end()) node.fail("unknown basis vector \"" + name + "\"");
    return it->second;
  }

private:
  std::map<std::string, std::size_t> index_;
};

std::vector<std::size_t> parse_index_list(const Node& node, const NameIndex& names) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < node.array_size(); ++i) out.push_back(names(node[i]));
  return out;
}

ExactMatrix parse_matrix(const Node& node, std::size_t dim) {
  if (node.array_size() != dim) node.fail("expected " + std::to_string(dim) + " rows");
  ExactMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Node row = node[r];
    if (row.array_size() != dim) row.fail("expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c].scalar();
  }
  return m;
}

Weight parse_weight(const Node& node, std::size_t rank) {
  if (node.array_size() != rank) node.fail("expected " + std::to_string(rank) + " coordinates (one per complement vector)");
  std::vector<GaussianRational> coords;
  for (std::size_t j = 0; j < rank; ++j) coords.push_back(node[j].scalar());
  return Weight(std::move(coords));
}

LieAlgebraData parse_algebra(const Node& node) {
  LieAlgebraData g;
  std::string mode = node["mode"].string();
  if (mode == "real" || mode == "real-complexified") {
    g.mode = GroundMode::real_complexified;
  } else if (mode == "complex") {
    g.mode = GroundMode::complex;
  } else {
    node["mode"].fail("mode must be \"real\" or \"complex\"");
  }

  Node basis = node["basis"];
  for (std::size_t i = 0; i < basis.array_size(); ++i) {
    auto name = basis[i].string();
    for (const auto& seen : g.basis_names)
      if (seen == name) basis[i].fail("duplicate basis name \"" + name + "\"");
    g.basis_names.push_back(name);
  }
  if (g.basis_names.size() > 63) basis.fail("at most 63 basis vectors are supported");
  if (node.has("dim") && node["dim"].natural() != g.dim())
    node["dim"].fail("dim does not match the number of basis names");

  NameIndex names(g.basis_names);
  if (node.has("brackets")) {
    Node brackets = node["brackets"];
    for (std::size_t b = 0; b < brackets.array_size(); ++b) {
      Node entry = brackets[b];
      auto len = entry.array_size();
      if (len != 3 && len != 4) entry.fail("a bracket is [X, Y, Z] or [X, Y, Z, coefficient]");
      Bracket br{names(entry[0]), names(entry[1]), names(entry[2]), GaussianRational(1)};
      if (len == 4) br.coeff = entry[3].scalar();
      g.brackets.push_back(std::move(br));
    }
  }
  g.nilradical = parse_index_list(node["nilradical"], names);
  g.complement = node.has("complement") ? parse_index_list(node["complement"], names) : std::vector<std::size_t>{};

  if (node.has("conjugation")) {
    Node pairs = node["conjugation"];
    std::vector<std::size_t> sigma(g.dim());
    std::vector<bool> used(g.dim(), false);
    for (std::size_t i = 0; i < g.dim(); ++i) sigma[i] = i;
    for (std::size_t p = 0; p < pairs.array_size(); ++p) {
      Node pair = pairs[p];
      if (pair.array_size() != 2) pair.fail("a conjugation entry is a pair [X, Y]");
      std::size_t a = names(pair[0]);
      std::size_t b = names(pair[1]);
      if (used[a] || used[b]) pair.fail("basis vector paired more than once");
      used[a] = used[b] = true;
      sigma[a] = b;
      sigma[b] = a;
    }
    g.conjugation = std::move(sigma);
  }
  return g;
}

RepresentationData parse_representation(const Node& node, const LieAlgebraData& g) {
  if (node.has("adjoint") && node["adjoint"].boolean()) return RepresentationData::adjoint(g);
  if (node.has("trivial") && node["trivial"].boolean()) return RepresentationData::trivial(g);
  if (!node.has("matrices")) node.fail("representation needs \"adjoint\": true, \"trivial\": true, or \"matrices\"");

  RepresentationData rep;
  rep.kind = RepresentationData::Kind::explicit_matrices;
  rep.dim = node["dim"].natural();
  rep.matrices.assign(g.dim(), ExactMatrix(rep.dim, rep.dim));
  NameIndex names(g.basis_names);
  for (const auto& [name, m] : node["matrices"].items()) {
    auto idx = names(Node(json(name), m.pointer()));
    rep.matrices[idx] = parse_matrix(m, rep.dim);
  }
  return rep;
}

void parse_weights(const Node& node, Instance& inst) {
  if (node.has("infer")) {
    if (!node["infer"].boolean()) node["infer"].fail("use \"infer\": true or give explicit tables");
    inst.infer_weights = true;
    return;
  }
  const auto& g = inst.algebra;
  NameIndex names(g.basis_names);
  inst.weights.algebra.assign(g.dim(), Weight::zero(g.rank()));
  for (const auto& [name, w] : node["algebra"].items()) {
    auto idx = names(Node(json(name), w.pointer()));
    inst.weights.algebra[idx] = parse_weight(w, g.rank());
  }
  if (node.has("representation")) {
    Node list = node["representation"];
    if (list.array_size() != inst.rep.dim)
      list.fail("expected " + std::to_string(inst.rep.dim) + " representation weights");
    for (std::size_t k = 0; k < inst.rep.dim; ++k) inst.weights.rep.push_back(parse_weight(list[k], g.rank()));
  } else {
    try {
      inst.weights.rep = derived_rep_weights(g, inst.rep, inst.weights.algebra);
    } catch (const ValidationError& e) {
      node.fail(e.what());
    }
  }
}

LatticeData parse_lattice(const Node& node, std::size_t rank) {
  LatticeData lat;
  if (node.has("symbols")) {
    Node symbols = node["symbols"];
    for (std::size_t s = 0; s < symbols.array_size(); ++s) {
      Node entry = symbols[s];
      auto name = entry["name"].string();
      auto parity_text = entry.has("parity") ? entry["parity"].string() : std::string("real");
      Parity parity = Parity::real;
      if (parity_text == "imaginary") {
        parity = Parity::imaginary;
      } else if (parity_text != "real") {
        entry["parity"].fail("parity must be \"real\" or \"imaginary\"");
      }
      try {
        lat.symbols.declare(name, parity);
      } catch (const ParseError& e) {
        entry["name"].fail(e.what());
      }
    }
  }
  if (node.has("generators")) {
    Node gens = node["generators"];
    for (std::size_t s = 0; s < gens.array_size(); ++s) {
      Node delta = gens[s];
      if (delta.array_size() != rank)
        delta.fail("expected " + std::to_string(rank) + " coordinates (one per complement vector)");
      std::vector<PeriodValue> coords;
      for (std::size_t j = 0; j < rank; ++j) coords.push_back(delta[j].period(lat.symbols));
      lat.generators.push_back(std::move(coords));
    }
  }
  return lat;
}

json emit_matrix(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json emit_weight(const Weight& w) {
  json out = json::array();
  for (const auto& c : w.coords()) out.push_back(c.to_string());
  return out;
}

}  // namespace

Instance parse_instance(const json& doc) {
  Node root(doc, "");
  Instance inst;
  auto kind = root["kind"].string();
  if (kind == "derham") {
    inst.kind = InstanceKind::derham;
  } else if (kind == "dolbeault") {
    inst.kind = InstanceKind::dolbeault;
  } else {
    root["kind"].fail("kind must be \"derham\" or \"dolbeault\"");
  }
  inst.algebra = parse_algebra(root["algebra"]);
  inst.rep = parse_representation(root["representation"], inst.algebra);
  if (root.has("weights")) {
    parse_weights(root["weights"], inst);
  } else {
    inst.infer_weights = true;
  }
  if (root.has("lattice")) inst.lattice = parse_lattice(root["lattice"], inst.algebra.rank());
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open instance file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json emit_algebra(const LieAlgebraData& g) {
  json a;
  a["mode"] = g.mode == GroundMode::complex ? "complex" : "real";
  a["dim"] = g.dim();
  a["basis"] = g.basis_names;
  json brackets = json::array();
  for (const auto& b : g.brackets)
    brackets.push_back({g.basis_names[b.i], g.basis_names[b.j], g.basis_names[b.k], b.coeff.to_string()});
  a["brackets"] = std::move(brackets);
  auto names_of = [&](const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(g.basis_names[i]);
    return out;
  };
  a["nilradical"] = names_of(g.nilradical);
  a["complement"] = names_of(g.complement);
  if (g.conjugation) {
    json pairs = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      std::size_t j = (*g.conjugation)[i];
      if (i < j) pairs.push_back({g.basis_names[i], g.basis_names[j]});
    }
    a["conjugation"] = std::move(pairs);
  }
  return a;
}

json emit_instance(const Instance& inst) {
  json doc;
  doc["kind"] = to_string(inst.kind);
  doc["algebra"] = emit_algebra(inst.algebra);

  json rep;
  switch (inst.rep.kind) {
    case RepresentationData::Kind::adjoint:
      rep["adjoint"] = true;
      break;
    case RepresentationData::Kind::trivial:
      rep["trivial"] = true;
      break;
    case RepresentationData::Kind::explicit_matrices: {
      rep["dim"] = inst.rep.dim;
      json matrices = json::object();
      for (std::size_t i = 0; i < inst.algebra.dim(); ++i)
        matrices[inst.algebra.basis_names[i]] = emit_matrix(inst.rep.matrices[i]);
      rep["matrices"] = std::move(matrices);
      break;
    }
  }
  doc["representation"] = std::move(rep);

  json weights;
  if (inst.infer_weights) {
    weights["infer"] = true;
  } else {
    json alg = json::object();
    for (std::size_t i = 0; i < inst.weights.algebra.size(); ++i)
      alg[inst.algebra.basis_names[i]] = emit_weight(inst.weights.algebra[i]);
    weights["algebra"] = std::move(alg);
    json repw = json::array();
    for (const auto& w : inst.weights.rep) repw.push_back(emit_weight(w));
    weights["representation"] = std::move(repw);
  }
  doc["weights"] = std::move(weights);

  json lattice;
  json symbols = json::array();
  for (const auto& e : inst.lattice.symbols.entries())
    symbols.push_back({{"name", e.name}, {"parity", e.parity == Parity::real ? "real" : "imaginary"}});
  lattice["symbols"] = std::move(symbols);
  json gens = json::array();
  for (const auto& delta : inst.lattice.generators) {
    json row = json::array();
    for (const auto& v : delta) row.push_back(v.to_string());
    gens.push_back(std::move(row));
  }
  lattice["generators"] = std::move(gens);
  doc["lattice"] = std::move(lattice);
  return doc;
}

WeightAssignment resolve_weights(const Instance& inst) {
  if (inst.infer_weights) return infer_weights(inst.algebra, inst.rep);
  auto report = validate_weights(inst.algebra, inst.rep, inst.weights);
  if (!report.ok()) throw ValidationError("declared weights are invalid: " + report.violations.front().message);
  return inst.weights;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report = validate_algebra(inst.algebra);
  if (!report.ok()) return report;
  report.merge(validate_representation(inst.algebra, inst.rep));
  if (!report.ok()) return report;

  const bool real = inst.algebra.mode == GroundMode::real_complexified;
  if (inst.kind == InstanceKind::derham && !real)
    report.add("mode", "a derham instance needs a real algebra (mode \"real\")");
  if (inst.kind == InstanceKind::dolbeault && real)
    report.add("mode", "a dolbeault instance needs a complex algebra (mode \"complex\")");

  report.merge(validate_lattice(inst.algebra, inst.lattice));

  if (inst.infer_weights) {
    try {
      WeightAssignment w = infer_weights(inst.algebra, inst.rep);
      build_invariant_complex(inst.algebra, inst.rep, w);
    } catch (const ValidationError& e) {
      report.add("weights", e.what());
    }
  } else {
    auto wr = validate_weights(inst.algebra, inst.rep, inst.weights);
    report.merge(wr);
    if (wr.ok()) {
      try {
        build_invariant_complex(inst.algebra, inst.rep, inst.weights);
      } catch (const ValidationError& e) {
        report.add("weight-grading", e.what());
      }
    }
  }
  return report;
}

}  // namespace solvcohom::cli
