#include "cobcoh/dot.hpp"

#include <sstream>

namespace cobcoh {

std::string to_dot(const CobMatrix& m, const std::string& name) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j) {
      const MultiCob& entry = m.at(i, j);
      out << "digraph \"" << name << "_" << i << "_" << j << "\" {\n";
      out << "  label=\"(" << i << "," << j << ") " << to_string(entry.source()) << " -> "
          << to_string(entry.target()) << (entry.empty() ? " : 0" : "") << "\";\n";
      for (std::size_t k = 0; k < entry.size(); ++k) {
        const Cobordism& c = entry.elements()[k];
        std::string src = to_string(c.source()), tgt = to_string(c.target());
        std::string id = "c" + std::to_string(k) + "_";
        out << "  subgraph cluster_" << k << " {\n";
        out << "    label=\"circles: " << c.circles() << "\";\n";
        out << "    { rank=source;";
        for (std::size_t p = 0; p < src.size(); ++p)
          out << " " << id << p << " [label=\"" << src[p] << "\"];";
        out << " }\n    { rank=sink;";
        for (std::size_t p = 0; p < tgt.size(); ++p)
          out << " " << id << src.size() + p << " [label=\"" << tgt[p] << "\"];";
        out << " }\n";
        for (const auto& [a, b] : c.pairs())
          out << "    " << id << a << " -> " << id << b << " [dir=none];\n";
        out << "  }\n";
      }
      out << "}\n";
    }
  return out.str();
}

}  // namespace cobcoh
