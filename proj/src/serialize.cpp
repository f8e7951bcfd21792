#include "srlab/serialize.hpp"

#include "srlab/error.hpp"

namespace srlab {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t uint_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    bad(where, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::vector<Elem>> rows_of(const Json& g, const std::string& where) {
  if (!g.is_array()) bad(where, "\"generator\" must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (!g[r].is_array()) bad(where, "generator row " + std::to_string(r) + " is not an array");
    std::vector<Elem> row;
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (!g[r][c].is_number_unsigned() && !(g[r][c].is_number_integer() && g[r][c].get<std::int64_t>() >= 0))
        bad(where, "generator entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not a canonical integer");
      row.push_back(g[r][c].get<Elem>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rows_to_json(const Matrix& m) {
  Json g = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) g.push_back(m.row_vector(r));
  return g;
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  std::vector<const Field*> chain;
  for (const Field* x = f.get(); x != nullptr && !x->is_prime(); x = x->base().get()) chain.push_back(x);
  Json tower = Json::array();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    tower.push_back(Json{{"degree", (*it)->degree()}, {"modulus", (*it)->modulus()}});
  return Json{{"characteristic", f->characteristic()}, {"tower", tower}};
}

FieldPtr field_from_json(const Json& j) {
  const std::string where = "field";
  auto p = uint_field(j, "characteristic", where);
  FieldPtr f = Field::prime(static_cast<std::uint32_t>(p));
  if (!j.contains("tower")) return f;
  const Json& t = j.at("tower");
  if (!t.is_array()) bad(where, "\"tower\" must be an array");
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string w = where + ".tower[" + std::to_string(i) + "]";
    auto d = uint_field(t[i], "degree", w);
    if (t[i].contains("modulus")) {
      auto mod = t[i].at("modulus").get<std::vector<Elem>>();
      if (mod.size() != d + 1) throw Error(ErrorKind::DegreeMismatch, w + ": modulus degree differs from \"degree\"");
      f = Field::extension(f, std::move(mod));
    } else {
      f = Field::extension(f, static_cast<unsigned>(d));
    }
  }
  return f;
}

Json code_to_json(const LinearCode& c) {
  return Json{{"q_tower", field_to_json(c.field())}, {"n", c.n()}, {"generator", rows_to_json(c.generator())}};
}

LinearCode code_from_json(const Json& j) {
  const std::string where = "code";
  FieldPtr f = field_from_json(field(j, "q_tower", where));
  auto n = uint_field(j, "n", where);
  auto rows = rows_of(field(j, "generator", where), where);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != n)
      throw Error(ErrorKind::LengthMismatch, where + ": generator row " + std::to_string(r) + " has length " +
                                                 std::to_string(rows[r].size()) + ", expected " + std::to_string(n));
  return LinearCode::from_rows(f, n, rows);
}

Json srcode_to_json(const SumRankCode& c) {
  Json blocks = Json::array();
  for (auto [m, n] : c.profile().blocks()) blocks.push_back(Json::array({m, n}));
  return Json{{"q_tower", field_to_json(c.field())}, {"blocks", blocks}, {"generator", rows_to_json(c.generator())}};
}

SumRankCode srcode_from_json(const Json& j) {
  const std::string where = "sum-rank code";
  FieldPtr f = field_from_json(field(j, "q_tower", where));
  const Json& b = field(j, "blocks", where);
  if (!b.is_array()) bad(where, "\"blocks\" must be an array of [m, n] pairs");
  BlockShapes shapes;
  for (auto& x : b) {
    if (!x.is_array() || x.size() != 2) bad(where, "each block must be [m, n]");
    shapes.push_back({x[0].get<unsigned>(), x[1].get<unsigned>()});
  }
  AmbientProfile prof(f, shapes);
  auto rows = rows_of(field(j, "generator", where), where);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != prof.length())
      throw Error(ErrorKind::LengthMismatch, where + ": generator row " + std::to_string(r) + " has wrong length");
  return SumRankCode(prof, Matrix::from_rows(f, rows, prof.length()));
}

Json poly_to_json(const Polynomial& p) { return Json{{"q_tower", field_to_json(p.field())}, {"coeffs", p.coeffs()}}; }

Polynomial poly_from_json(const Json& j, const FieldPtr& fallback) {
  FieldPtr f = j.contains("q_tower") ? field_from_json(j.at("q_tower")) : fallback;
  if (!f) bad("polynomial", "missing \"q_tower\"");
  return Polynomial(f, field(j, "coeffs", "polynomial").get<std::vector<Elem>>());
}

}  // namespace srlab
