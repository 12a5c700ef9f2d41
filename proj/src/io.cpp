#include "vanish/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vanish {

using nlohmann::json;

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
  return doc.at(key);
}

Scalar scalar_from_json(const json& value, const FieldSpec& spec, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": scalars must be strings");
  try {
    return parse_scalar(value.get<std::string>(), spec);
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

Exponent exponent_from_json(const json& value, std::size_t n, const std::string& where) {
  if (!value.is_array() || value.size() != n) {
    throw InputError(where + ": expected an exponent with " + std::to_string(n) + " entries");
  }
  std::vector<unsigned> coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (!value[i].is_number_unsigned()) throw InputError(at(where, i) + ": expected a non-negative integer");
    coords.push_back(value[i].get<unsigned>());
  }
  return Exponent(std::move(coords));
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
  if (spec.is_rational()) return json{{"type", "rational"}};
  return json{{"type", "prime"}, {"p", spec.modulus()}};
}

FieldSpec field_from_json(const json& doc) {
  const json& type = require(doc, "type", "field");
  if (type == "rational") return FieldSpec::rational();
  if (type != "prime") throw InputError("field.type: expected \"rational\" or \"prime\"");
  const json& p = require(doc, "p", "field");
  if (!p.is_number_unsigned()) throw InputError("field.p: expected a positive integer below 2^64");
  try {
    return FieldSpec::prime(p.get<std::uint64_t>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field.p: ") + e.what());
  }
}

PointSet parse_pointset(const json& doc) {
  const FieldSpec spec = field_from_json(require(doc, "field", "input"));
  const json& dim = require(doc, "dimension", "input");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw InputError("dimension: expected a positive integer");
  }
  const std::size_t n = dim.get<std::size_t>();
  const json& rows = require(doc, "points", "input");
  if (!rows.is_array()) throw InputError("points: expected an array");
  std::vector<Point> points;
  points.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = at("points", i);
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw InputError(where + ": expected " + std::to_string(n) + " coordinates");
    }
    std::vector<Scalar> coords;
    for (std::size_t j = 0; j < n; ++j) coords.push_back(scalar_from_json(rows[i][j], spec, at(where, j)));
    points.emplace_back(std::move(coords));
  }
  try {
    return PointSet(n, spec, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("points: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

PointSet load_pointset(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return parse_pointset(doc);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json pointset_to_json(const PointSet& a) {
  json rows = json::array();
  for (const Point& p : a.points()) {
    json row = json::array();
    for (const Scalar& x : p.coords()) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return json{{"field", field_to_json(a.spec())}, {"dimension", a.dimension()}, {"points", std::move(rows)}};
}

json exponents_to_json(std::span<const Exponent> exponents) {
  json out = json::array();
  for (const Exponent& e : exponents) out.push_back(std::vector<unsigned>(e.coords().begin(), e.coords().end()));
  return out;
}

json staircase_to_json(const Staircase& d) {
  const std::vector<Exponent> cells(d.cells().begin(), d.cells().end());
  return exponents_to_json(cells);
}

json basis_to_json(const GroebnerBasis& gb) {
  json elements = json::array();
  for (const Polynomial& f : gb.elements) {
    json terms = json::array();
    for (const Term& t : f.terms()) {
      terms.push_back(json{{"exp", std::vector<unsigned>(t.exponent.coords().begin(), t.exponent.coords().end())},
                           {"coeff", t.coeff.to_string()}});
    }
    const Exponent& lead = f.leading_exponent();
    elements.push_back(json{{"leading", std::vector<unsigned>(lead.coords().begin(), lead.coords().end())},
                            {"terms", std::move(terms)}});
  }
  const std::vector<Exponent> corners = limiting_set(gb.staircase);
  return json{{"staircase", staircase_to_json(gb.staircase)},
              {"corners", exponents_to_json(corners)},
              {"basis", std::move(elements)}};
}

GroebnerBasis basis_from_json(const json& doc, const FieldSpec& spec, std::size_t n) {
  const json& elements = require(doc, "basis", "basis file");
  if (!elements.is_array()) throw InputError("basis: expected an array");
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = at("basis", i);
    const json& terms = require(elements[i], "terms", where);
    if (!terms.is_array()) throw InputError(where + ".terms: expected an array");
    std::vector<Term> parsed;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const std::string tw = where + ".terms" + "[" + std::to_string(j) + "]";
      parsed.push_back(Term{exponent_from_json(require(terms[j], "exp", tw), n, tw + ".exp"),
                            scalar_from_json(require(terms[j], "coeff", tw), spec, tw + ".coeff")});
    }
    Polynomial f = Polynomial::from_terms(n, spec, std::move(parsed));
    if (f.is_zero()) throw InputError(where + ": zero polynomial");
    if (elements[i].contains("leading") &&
        exponent_from_json(elements[i]["leading"], n, where + ".leading") != f.leading_exponent()) {
      throw InputError(where + ".leading: does not match the lex-greatest term " + f.leading_exponent().to_string());
    }
    polys.push_back(std::move(f));
  }

  if (doc.contains("staircase")) {
    const json& cells_json = doc["staircase"];
    if (!cells_json.is_array()) throw InputError("staircase: expected an array");
    std::set<Exponent> cells;
    for (std::size_t i = 0; i < cells_json.size(); ++i) {
      cells.insert(exponent_from_json(cells_json[i], n, at("staircase", i)));
    }
    try {
      return GroebnerBasis{Staircase::validate(std::move(cells), n), std::move(polys)};
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("staircase: ") + e.what());
    }
  }
  std::vector<Exponent> leads;
  for (const Polynomial& f : polys) leads.push_back(f.leading_exponent());
  try {
    return GroebnerBasis{Staircase::below_leading_exponents(leads, n), std::move(polys)};
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("basis: ") + e.what());
  }
}

GroebnerBasis load_basis(const std::filesystem::path& path, const FieldSpec& spec, std::size_t n) {
  const json doc = read_json_file(path);
  try {
    return basis_from_json(doc, spec, n);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

std::string format_document(const json& doc) {
  if (!doc.is_object()) return doc.dump() + "\n";
  std::string out = "{\n";
  std::size_t key_index = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++key_index) {
    out += "  " + json(it.key()).dump() + ": ";
    const json& value = it.value();
    const bool rows = value.is_array() && !value.empty() &&
                      std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_object(); });
    if (rows) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += key_index + 1 < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace vanish
