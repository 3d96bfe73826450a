#pragma once

#include <optional>
#include <string>

#include "dgla/cdga.hpp"
#include "dgla/errors.hpp"
#include "dgla/free_lie.hpp"
#include "dgla/lie.hpp"
#include "dgla/representation.hpp"

namespace dgla {

// Parsed content of an input document. Objects are validated eagerly:
// axiom violations surface as InputError with the validator's witnesses.
struct ParsedInput {
  std::string kind;  // lie | free-lie | cdga | cdga-presentation | representation
                     // | adjoint | mc | schlessinger | lie-morphism
  std::optional<DgLieAlgebra> lie;
  std::optional<std::vector<std::pair<std::string, int>>> free_generators;
  std::optional<FiniteAlgebra> algebra;
  std::optional<CdgaPresentation> presentation;
  // representation payload (against `lie`)
  std::optional<Complex> rep_underlying;
  std::optional<ActionTable> rep_action;
  bool rep_is_adjoint = false;
  // mc / schlessinger payload
  std::optional<FiniteAlgebra> coefficients;
  int schlessinger_n = 1;
  std::optional<std::map<std::string, Vec>> algebra_map_values;  // by source label
  // lie-morphism payload
  std::optional<DgLieAlgebra> morphism_target;
  std::optional<GradedMap> morphism;
};

ParsedInput parse_input_file(const std::string& path);
ParsedInput parse_input_text(const std::string& text, const std::string& origin);

// Canonical serialization (sorted fields, rational coefficients as strings).
std::string serialize_lie(const DgLieAlgebra& L);
std::string serialize_algebra(const FiniteAlgebra& B);

// FNV-1a over the raw bytes, for the report's input echo.
std::string content_hash(const std::string& bytes);

// Materializes a free presentation when it is finite-dimensional (all
// generators odd); nullopt otherwise.
std::optional<FiniteAlgebra> materialize(const CdgaPresentation& pres);

}  // namespace dgla
