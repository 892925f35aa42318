// Declarative map documents: a JSON schema with [index, re, im] coefficient
// triples, parsed into validated maps and serialized back coefficient-exactly.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "hqmap/maps.hpp"

namespace hqmap {

// Parse or validation failure; the message names the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be read or written; the message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapDocument {
  std::variant<InteriorMap, ExteriorMap> map;
  std::optional<std::string> label;
  std::optional<double> order;  // strongly-starlike order for class checks

  bool is_interior() const { return std::holds_alternative<InteriorMap>(map); }
  const InteriorMap& interior() const { return std::get<InteriorMap>(map); }
  const ExteriorMap& exterior() const { return std::get<ExteriorMap>(map); }
};

// Schema:
//   { "kind": "interior" | "exterior",
//     "label": string (optional),
//     "order": number in (0,1) (optional),
//     "a": [[n, re, im], ...], "b": [[n, re, im], ...]   (optional, default []),
//     and for exterior maps:
//     "alpha": [re, im] (required), "beta": [re, im], "A": [re, im] }
MapDocument parse_document(const std::string& json_text);
MapDocument load_document(const std::string& path);
std::string serialize_document(const MapDocument& doc);

// Writes text to path, throwing DocumentError with the path on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hqmap
