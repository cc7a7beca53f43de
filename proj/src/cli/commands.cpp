#include "solvcohom/cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "solvcohom/errors.hpp"
#include "solvcohom/lattice/lattice.hpp"
#include "solvcohom/lie/nilshadow.hpp"
#include "solvcohom/oracle/oracle.hpp"
#include "solvcohom/weights/invariant_complex.hpp"

namespace solvcohom::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations)
    out.push_back({{"invariant", v.invariant}, {"message", v.message}, {"witness", v.witness}});
  return out;
}

std::string violations_text(const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& v : report.violations) {
    os << "  [" << v.invariant << "] " << v.message;
    if (!v.witness.empty()) os << " (witness " << join(v.witness) << ")";
    os << "\n";
  }
  return os.str();
}

CommandOutput invalid_output(const std::string& command, const ValidationReport& report) {
  CommandOutput out;
  out.exit_code = exit_invalid;
  out.machine = {{"command", command}, {"status", "invalid"}, {"violations", violations_json(report)}};
  out.text = "validation failed:\n" + violations_text(report);
  return out;
}

CommandOutput error_output(const std::string& command, int code, const std::string& status, const std::string& message,
                           const std::string& where = "") {
  CommandOutput out;
  out.exit_code = code;
  out.machine = {{"command", command}, {"status", status}, {"message", message}};
  if (!where.empty()) out.machine["where"] = where;
  out.text = status + ": " + message + "\n";
  return out;
}

json representatives_json(const FiniteComplex& c, const CohomologyResult& h) {
  json out = json::array();
  for (std::size_t p = 0; p < h.representatives.size(); ++p) {
    json degree = json::array();
    for (const auto& v : h.representatives[p]) {
      json terms = json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) terms[c.labels[p][k]] = v[k].to_string();
      degree.push_back(std::move(terms));
    }
    out.push_back(std::move(degree));
  }
  return out;
}

std::string representatives_text(const json& reps) {
  std::ostringstream os;
  for (std::size_t p = 0; p < reps.size(); ++p) {
    os << "H^" << p << ":\n";
    for (const auto& terms : reps[p]) {
      std::string line;
      for (auto it = terms.begin(); it != terms.end(); ++it)
        line += (line.empty() ? "" : " + ") + std::string("(") + it.value().get<std::string>() + ") " + it.key();
      os << "  " << line << "\n";
    }
  }
  return os.str();
}

std::vector<std::string> selected_tags(const SelectionResult& s) {
  std::vector<Weight> tags;
  for (const auto& degree : s.verdicts)
    for (const auto& v : degree)
      if (v.selected) tags.push_back(v.tag);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  std::vector<std::string> out;
  for (const auto& t : tags) out.push_back(t.to_string());
  return out;
}

struct Prepared {
  WeightAssignment weights;
  InvariantComplex ic;
};

Prepared prepare(const Instance& inst) {
  Prepared p;
  p.weights = resolve_weights(inst);
  p.ic = build_invariant_complex(inst.algebra, inst.rep, p.weights);
  return p;
}

CommandOutput cmd_validate(const Instance& inst) {
  auto report = validate_instance(inst);
  if (!report.ok()) return invalid_output("validate", report);
  CommandOutput out;
  out.machine = {{"command", "validate"}, {"status", "ok"}, {"violations", json::array()}};
  out.text = "ok: all validators passed\n";
  return out;
}

CommandOutput cmd_derham(const Instance& inst, const Options& opts) {
  if (inst.kind != InstanceKind::derham) throw ModeError("derham needs an instance of kind \"derham\"");
  auto p = prepare(inst);
  auto sel = select_de_rham(p.ic, inst.lattice);
  auto h = cohomology(sel.complex);

  CommandOutput out;
  out.machine = {{"command", "derham"},
                 {"status", "ok"},
                 {"invariant_dims", p.ic.complex.dims},
                 {"selected_dims", sel.complex.dims},
                 {"betti", h.betti},
                 {"euler_characteristic", euler_characteristic(h.betti)},
                 {"distinct_tags", p.ic.distinct_tags().size()},
                 {"selected_tags", selected_tags(sel)}};

  std::vector<std::vector<std::string>> rows{{"degree", "invariant", "selected", "betti"}};
  for (std::size_t q = 0; q < h.betti.size(); ++q)
    rows.push_back({std::to_string(q), std::to_string(p.ic.complex.dims[q]), std::to_string(sel.complex.dims[q]),
                    std::to_string(h.betti[q])});
  std::ostringstream os;
  os << "twisted de Rham cohomology of A*\n" << format_table(rows);
  os << "euler characteristic: " << euler_characteristic(h.betti) << "\n";
  os << "weight tags: " << p.ic.distinct_tags().size() << " distinct, " << selected_tags(sel).size()
     << " trivial on the lattice\n";
  if (opts.representatives) {
    out.machine["representatives"] = representatives_json(sel.complex, h);
    os << representatives_text(out.machine["representatives"]);
  }
  out.text = os.str();
  return out;
}

CommandOutput cmd_dolbeault(const Instance& inst, const Options& opts) {
  if (inst.kind != InstanceKind::dolbeault) throw ModeError("dolbeault needs an instance of kind \"dolbeault\"");
  auto p = prepare(inst);
  auto sel = select_dolbeault(p.ic, inst.lattice);
  auto h = cohomology(sel.complex);
  auto hodge = dolbeault_hodge_table(h, inst.algebra.dim());

  CommandOutput out;
  out.machine = {{"command", "dolbeault"},
                 {"status", "ok"},
                 {"invariant_dims", p.ic.complex.dims},
                 {"selected_dims", sel.complex.dims},
                 {"betti", h.betti},
                 {"hodge", hodge},
                 {"distinct_tags", p.ic.distinct_tags().size()},
                 {"selected_tags", selected_tags(sel)}};

  std::vector<std::vector<std::string>> rows{{"q", "invariant", "selected", "h^{0,q}"}};
  for (std::size_t q = 0; q < h.betti.size(); ++q)
    rows.push_back({std::to_string(q), std::to_string(p.ic.complex.dims[q]), std::to_string(sel.complex.dims[q]),
                    std::to_string(h.betti[q])});
  std::vector<std::vector<std::string>> table{{"p\\q"}};
  for (std::size_t q = 0; q < h.betti.size(); ++q) table[0].push_back(std::to_string(q));
  for (std::size_t pp = 0; pp < hodge.size(); ++pp) {
    std::vector<std::string> row{std::to_string(pp)};
    for (auto v : hodge[pp]) row.push_back(std::to_string(v));
    table.push_back(std::move(row));
  }
  std::ostringstream os;
  os << "Dolbeault cohomology of B*\n" << format_table(rows) << "\nh^{p,q}\n" << format_table(table);
  if (opts.representatives) {
    out.machine["representatives"] = representatives_json(sel.complex, h);
    os << representatives_text(out.machine["representatives"]);
  }
  out.text = os.str();
  return out;
}

CommandOutput cmd_conditions(const Instance& inst) {
  auto p = prepare(inst);
  auto flags = check_conditions(p.ic, inst.lattice);
  const std::vector<std::pair<std::string, const ConditionFlag*>> named{
      {"diamond1", &flags.diamond1}, {"diamond2", &flags.diamond2}, {"star", &flags.star}, {"box", &flags.box}};

  CommandOutput out;
  out.machine = {{"command", "conditions"}, {"status", "ok"}};
  std::vector<std::vector<std::string>> rows{{"condition", "value", "witnesses"}};
  for (const auto& [name, flag] : named) {
    out.machine[name] = {{"value", to_string(flag->value)}, {"witnesses", flag->witnesses}};
    std::string w;
    for (std::size_t i = 0; i < flag->witnesses.size() && i < 3; ++i)
      w += (i ? ", " : "") + flag->witnesses[i];
    if (flag->witnesses.size() > 3) w += ", ... (" + std::to_string(flag->witnesses.size()) + " total)";
    rows.push_back({name, to_string(flag->value), w});
  }
  out.text = format_table(rows);
  return out;
}

CommandOutput cmd_oracle(const Instance& inst) {
  auto w = resolve_weights(inst);
  auto report = oracle::verify_quasi_iso(inst.algebra, inst.rep, w);

  CommandOutput out;
  json sectors = json::array();
  std::vector<std::vector<std::string>> rows{{"tag", "full", "invariant block", "equal"}};
  for (const auto& s : report.sectors) {
    sectors.push_back(
        {{"tag", s.tag.to_string()}, {"full_betti", s.full_betti}, {"block_betti", s.block_betti}, {"equal", s.equal}});
    rows.push_back({s.tag.to_string(), join(s.full_betti), join(s.block_betti), s.equal ? "yes" : "NO"});
  }
  const bool ok = report.all_equal();
  out.exit_code = ok ? exit_ok : exit_oracle_mismatch;
  out.machine = {{"command", "oracle"}, {"status", ok ? "ok" : "mismatch"}, {"sectors", sectors}, {"all_equal", ok}};
  out.text = format_table(rows) + (ok ? "all sectors agree\n" : "MISMATCH in at least one sector\n");
  return out;
}

CommandOutput cmd_nilshadow(const Instance& inst) {
  auto w = resolve_weights(inst);
  auto u = nilshadow(inst.algebra, w.algebra);
  auto series = lower_central_series(u);
  const bool abelian = is_abelian(u);

  CommandOutput out;
  out.machine = {{"command", "nilshadow"},
                 {"status", "ok"},
                 {"algebra", emit_algebra(u)},
                 {"lower_central_series", series},
                 {"nilpotent", series.back() == 0},
                 {"abelian", abelian}};
  std::ostringstream os;
  os << "nilshadow of dimension " << u.dim() << (abelian ? " (abelian)" : "") << "\n";
  std::vector<std::vector<std::string>> rows{{"[X, Y]", "value"}};
  for (const auto& b : u.brackets) {
    std::string value = b.coeff.is_real() ? coefficient_prefix(b.coeff.re()) + u.basis_names[b.k]
                                          : "(" + b.coeff.to_string() + ")*" + u.basis_names[b.k];
    rows.push_back({"[" + u.basis_names[b.i] + ", " + u.basis_names[b.j] + "]", value});
  }
  if (u.brackets.empty()) {
    os << "all brackets vanish\n";
  } else {
    os << format_table(rows);
  }
  os << "lower central series: " << join(series) << "\n";
  out.text = os.str();
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "derham", "dolbeault", "conditions", "oracle", "nilshadow"};
  return names;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

CommandOutput run_command(const std::string& command, const Instance& inst, const Options& opts) {
  try {
    if (command == "validate") return cmd_validate(inst);

    auto report = validate_instance(inst);
    // kind/mode mismatches are reported by the mode-specific commands themselves
    if (command != "derham" && command != "dolbeault") {
      report.violations.erase(std::remove_if(report.violations.begin(), report.violations.end(),
                                             [](const Violation& v) { return v.invariant == "mode"; }),
                              report.violations.end());
    }
    if (!report.ok()) return invalid_output(command, report);

    if (command == "derham") return cmd_derham(inst, opts);
    if (command == "dolbeault") return cmd_dolbeault(inst, opts);
    if (command == "conditions") return cmd_conditions(inst);
    if (command == "oracle") return cmd_oracle(inst);
    if (command == "nilshadow") return cmd_nilshadow(inst);
    return error_output(command, exit_parse, "usage-error", "unknown command \"" + command + "\"");
  } catch (const ParseError& e) {
    return error_output(command, exit_parse, "parse-error", e.what(), e.where());
  } catch (const Error& e) {
    return error_output(command, exit_invalid, "invalid", e.what());
  }
}

CommandOutput run_command_on_file(const std::string& command, const std::filesystem::path& path,
                                  const Options& opts) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const ParseError& e) {
    return error_output(command, exit_parse, "parse-error", e.what(), e.where());
  } catch (const Error& e) {
    return error_output(command, exit_invalid, "invalid", e.what());
  }
  return run_command(command, inst, opts);
}

}  // namespace solvcohom::cli
