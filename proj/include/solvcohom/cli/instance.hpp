#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "solvcohom/lattice/lattice.hpp"
#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/representation.hpp"
#include "solvcohom/lie/validation.hpp"
#include "solvcohom/weights/weights.hpp"

namespace solvcohom::cli {

enum class InstanceKind { derham, dolbeault };
std::string to_string(InstanceKind kind);

/// Everything one instance file describes. With infer_weights set, `weights`
/// is empty until resolve_weights runs.
struct Instance {
  InstanceKind kind = InstanceKind::derham;
  LieAlgebraData algebra;
  RepresentationData rep;
  bool infer_weights = false;
  WeightAssignment weights;
  LatticeData lattice;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Schema errors are ParseErrors whose `where` is a JSON pointer
/// ("/algebra/brackets/2/3"); malformed JSON reports a byte offset.
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::filesystem::path& path);

/// Inverse of parse_instance: parse_instance(emit_instance(x)) == x.
nlohmann::json emit_instance(const Instance& inst);

/// Algebra block alone, as used in the instance schema.
nlohmann::json emit_algebra(const LieAlgebraData& g);

/// Runs every validator: algebra, representation, weights (declared or
/// inferred), lattice, and kind vs ground mode.
ValidationReport validate_instance(const Instance& inst);

/// The weights used by the pipeline: inferred or declared. Throws
/// ValidationError / ExtendScalarsError on failure.
WeightAssignment resolve_weights(const Instance& inst);

}  // namespace solvcohom::cli
