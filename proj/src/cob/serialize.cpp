#include "cobcoh/serialize.hpp"

#include <sstream>

#include "cobcoh/error.hpp"

namespace cobcoh {

namespace {

Json boundaries_json(const std::vector<Boundary>& bs) {
  Json out = Json::array();
  for (const auto& b : bs) out.push_back(to_string(b));
  return out;
}

std::vector<Boundary> boundaries_from(const Json& j) {
  std::vector<Boundary> out;
  for (const auto& b : j) out.push_back(parse_boundary(b.get<std::string>()));
  return out;
}

std::string quoted_list(const std::vector<Boundary>& bs) {
  std::string out = "[";
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + to_string(bs[i]) + "\"";
  }
  return out + "]";
}

}  // namespace

Json to_json(const Cobordism& c) {
  Json pairs = Json::array();
  for (auto [a, b] : c.pairs()) pairs.push_back(Json::array({a, b}));
  Json out;
  out["pairs"] = std::move(pairs);
  out["circles"] = c.circles();
  return out;
}

Json to_json(const MultiCob& m) {
  Json out = Json::array();
  for (const auto& c : m.elements()) out.push_back(to_json(c));
  return out;
}

Json to_json(const CobMatrix& m) {
  Json out;
  out["shape"] = Json::array({m.row_count(), m.col_count()});
  out["rows"] = boundaries_json(m.rows());
  out["cols"] = boundaries_json(m.cols());
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.col_count(); ++j)
      row.push_back(to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

CobMatrix matrix_from_json(const Json& j) {
  try {
    auto rows = boundaries_from(j.at("rows"));
    auto cols = boundaries_from(j.at("cols"));
    const Json& shape = j.at("shape");
    if (shape.at(0).get<std::size_t>() != rows.size() ||
        shape.at(1).get<std::size_t>() != cols.size())
      throw CobError("shape does not match the type sequences");
    const Json& entries = j.at("entries");
    if (entries.size() != rows.size())
      throw CobError("entry rows do not match the shape");
    std::vector<MultiCob> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (entries[r].size() != cols.size())
        throw CobError("entry columns do not match the shape");
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Cobordism> elems;
        for (const auto& e : entries[r][c]) {
          std::vector<Cobordism::Pair> pairs;
          for (const auto& p : e.at("pairs"))
            pairs.emplace_back(p.at(0).get<std::uint32_t>(),
                               p.at(1).get<std::uint32_t>());
          elems.emplace_back(cols[c], rows[r], std::move(pairs),
                             e.at("circles").get<std::uint64_t>());
        }
        cells.emplace_back(cols[c], rows[r], std::move(elems));
      }
    }
    return CobMatrix(std::move(rows), std::move(cols), std::move(cells));
  } catch (const Json::exception& e) {
    throw CobError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string to_text(const MultiCob& m) {
  std::string out = "[";
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& c = m.elements()[k];
    if (k) out += ", ";
    out += "{pairs: [";
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
      if (p) out += ", ";
      out += "[" + std::to_string(c.pairs()[p].first) + "," +
             std::to_string(c.pairs()[p].second) + "]";
    }
    out += "], circles: " + std::to_string(c.circles()) + "}";
  }
  return out + "]";
}

std::string to_text(const CobMatrix& m) {
  std::ostringstream out;
  out << "shape: " << m.row_count() << "x" << m.col_count() << "\n";
  out << "rows: " << quoted_list(m.rows()) << "\n";
  out << "cols: " << quoted_list(m.cols()) << "\n";
  out << "entries:\n";
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j)
      out << "  (" << i << "," << j << "): " << to_text(m.at(i, j)) << "\n";
  return out.str();
}

}  // namespace cobcoh
