#pragma once

// JSON schemas for boundary data and coefficient spectra.
//
//   boundary: {"type":"step","arcs":[{"phi":0.0,"theta":0.0},...]}
//           | {"type":"trigpoly","coeffs":{"1":[re,im],...}}
//           | {"type":"sampled","values":[[re,im],...]}
//     optional "admissible": bool overrides the computed flag.
//   spectrum: {"alpha":a, "coeffs":{"k":[re,im],...}}   (optional "K")

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "alphakit/boundary.hpp"
#include "alphakit/spectrum.hpp"

namespace alphakit {

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BoundaryFunction boundary_from_json(const nlohmann::json& j);
nlohmann::ordered_json boundary_to_json(const BoundaryFunction& b);

/// alpha comes from the document, else from fallback_alpha; ParseError if
/// neither is present.
CoefficientSpectrum spectrum_from_json(const nlohmann::json& j,
                                       std::optional<double> fallback_alpha = std::nullopt);
nlohmann::ordered_json spectrum_to_json(const CoefficientSpectrum& s);

using MapInput = std::variant<BoundaryFunction, CoefficientSpectrum>;

/// A document with "type" is a boundary, otherwise a spectrum.
MapInput parse_map_input(const std::string& text, std::optional<double> fallback_alpha);

}  // namespace alphakit
