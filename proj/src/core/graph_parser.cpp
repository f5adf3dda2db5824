#include <cctype>
#include <fstream>
#include <sstream>

#include "gca/errors.hpp"
#include "gca/graph.hpp"

namespace gca {

namespace {

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Splits a statement into name tokens and the punctuation ':', '->', '*'.
std::vector<std::string> tokenize(std::string_view stmt, int line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < stmt.size()) {
    const char c = stmt[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ':' || c == '*') {
      out.emplace_back(1, c);
      ++i;
    } else if (c == '-' && i + 1 < stmt.size() && stmt[i + 1] == '>') {
      out.emplace_back("->");
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[j])) || stmt[j] == '_')) ++j;
      out.emplace_back(stmt.substr(i, j - i));
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line);
    }
  }
  return out;
}

void parse_statement(Graph& g, std::string_view stmt, int line) {
  const auto tok = tokenize(stmt, line);
  if (tok.empty()) return;
  if (tok[0] == "vertex") {
    if (tok.size() != 2 || !is_name(tok[1])) throw ParseError("expected 'vertex <name>'", line);
    try {
      g.add_vertex(tok[1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    return;
  }
  if (tok[0] == "edge") {
    // edge name : o -> t [* k]
    if (tok.size() != 6 && tok.size() != 8) throw ParseError("expected 'edge <name> : <origin> -> <terminus>'", line);
    if (!is_name(tok[1]) || tok[2] != ":" || !is_name(tok[3]) || tok[4] != "->" || !is_name(tok[5]))
      throw ParseError("expected 'edge <name> : <origin> -> <terminus>'", line);
    Multiplicity m = Multiplicity::finite(1);
    if (tok.size() == 8) {
      if (tok[6] != "*") throw ParseError("expected '*' before multiplicity", line);
      if (tok[7] == "omega") {
        m = Multiplicity::omega();
      } else if (tok[7].find_first_not_of("0123456789") == std::string::npos) {
        const auto k = std::stoull(tok[7]);
        if (k == 0) throw ParseError("multiplicity must be at least 1", line);
        m = Multiplicity::finite(k);
      } else {
        throw ParseError("bad multiplicity '" + tok[7] + "'", line);
      }
    }
    auto o = g.find_vertex(tok[3]);
    auto t = g.find_vertex(tok[5]);
    if (!o) throw ParseError("undeclared endpoint '" + tok[3] + "'", line);
    if (!t) throw ParseError("undeclared endpoint '" + tok[5] + "'", line);
    try {
      g.add_bundle(tok[1], *o, *t, m);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    return;
  }
  throw ParseError("unknown statement '" + tok[0] + "'", line);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::size_t start = 0;
    while (start <= row.size()) {
      std::size_t semi = row.find(';', start);
      if (semi == std::string_view::npos) semi = row.size();
      parse_statement(g, row.substr(start, semi - start), line);
      start = semi + 1;
    }
    pos = end + 1;
  }
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << "vertex " << g.vertex_name(v) << "\n";
  for (std::uint32_t i = 0; i < g.bundle_count(); ++i) {
    const EdgeBundle& b = g.bundle(BundleId{i});
    out << "edge " << b.name << " : " << g.vertex_name(b.origin) << " -> " << g.vertex_name(b.terminus);
    if (b.multiplicity.is_omega() || b.multiplicity.count() != 1) out << " * " << b.multiplicity.to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace gca
