#ifndef VANISH_IO_HPP
#define VANISH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vanish/core.hpp"

namespace vanish {

/// Malformed input; the message names the file, line/column or JSON field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"field": {"type": "rational"} | {"type": "prime", "p": <int>},
///  "dimension": <n>, "points": [["<scalar>", ...], ...]}
PointSet parse_pointset(const nlohmann::json& doc);
PointSet load_pointset(const std::filesystem::path& path);
nlohmann::json pointset_to_json(const PointSet& a);

nlohmann::json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const nlohmann::json& doc);

/// Sorted list of exponent tuples.
nlohmann::json staircase_to_json(const Staircase& d);
nlohmann::json exponents_to_json(std::span<const Exponent> exponents);

/// {"staircase": [...], "corners": [...], "basis": [{"leading": [...],
///  "terms": [{"exp": [...], "coeff": "<scalar>"}, ...]}, ...]}
/// with terms in descending lex order and corners ascending.
nlohmann::json basis_to_json(const GroebnerBasis& gb);

/// Reads a basis in the format above. The "staircase" key is optional; if it
/// is missing the staircase is derived from the leading exponents.
GroebnerBasis basis_from_json(const nlohmann::json& doc, const FieldSpec& spec, std::size_t n);
GroebnerBasis load_basis(const std::filesystem::path& path, const FieldSpec& spec, std::size_t n);

/// Top-level keys one per line; arrays of objects one element per line;
/// everything else compact. Output ends with a newline.
std::string format_document(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace vanish

#endif  // VANISH_IO_HPP
