#include "cox/presentation.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cox {

namespace {

using nlohmann::json;

MatrixPtr parse_dsl(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<CoxeterMatrix::Entry>> orders;
  std::vector<std::vector<bool>> assigned;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;

    if (head == "gen") {
      if (!names.empty())
        throw ParseError("line " + std::to_string(lineno) + ": repeated gen line");
      std::string name;
      while (ls >> name) names.push_back(name);
      if (names.empty())
        throw ParseError("line " + std::to_string(lineno) + ": gen line names no generators");
      const std::size_t n = names.size();
      orders.assign(n, std::vector<CoxeterMatrix::Entry>(n, CoxeterMatrix::kInfinity));
      assigned.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) orders[i][i] = 1;
      continue;
    }

    if (head == "m") {
      if (names.empty())
        throw ParseError("line " + std::to_string(lineno) + ": m line before gen line");
      std::string a, b, eq;
      long k = 0;
      if (!(ls >> a >> b >> eq >> k) || eq != "=")
        throw ParseError("line " + std::to_string(lineno) + ": expected 'm <g> <g> = <k>'");
      auto idx = [&](const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
          if (names[i] == name) return static_cast<int>(i);
        throw ParseError("line " + std::to_string(lineno) + ": unknown generator '" + name + "'");
      };
      const int i = idx(a), j = idx(b);
      if (i == j)
        throw ParseError("line " + std::to_string(lineno) + ": m line names a generator twice");
      if (k < 2)
        throw ParseError("line " + std::to_string(lineno) + ": label must be >= 2");
      if (assigned[i][j])
        throw ParseError("line " + std::to_string(lineno) + ": pair listed twice");
      orders[i][j] = orders[j][i] = static_cast<CoxeterMatrix::Entry>(k);
      assigned[i][j] = assigned[j][i] = true;
      continue;
    }

    throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
  }

  if (names.empty()) throw ParseError("presentation has no gen line");
  return make_matrix(std::move(orders), std::move(names));
}

MatrixPtr parse_json_presentation(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j.contains("orders"))
    throw ParseError("JSON presentation needs \"generators\" and \"orders\"");

  std::vector<std::string> names;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<std::vector<CoxeterMatrix::Entry>> orders;
  for (const auto& row : j["orders"]) {
    std::vector<CoxeterMatrix::Entry> r;
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned())
        throw ParseError("order entries must be non-negative integers");
      const auto v = cell.get<std::uint64_t>();
      r.push_back(v == 0 ? CoxeterMatrix::kInfinity
                         : static_cast<CoxeterMatrix::Entry>(v));
    }
    orders.push_back(std::move(r));
  }
  return make_matrix(std::move(orders), std::move(names));
}

}  // namespace

MatrixPtr parse_presentation(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_presentation(text);
    break;
  }
  return parse_dsl(text);
}

MatrixPtr load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string to_dsl(const CoxeterMatrix& m) {
  std::string out = "gen";
  for (int i = 0; i < m.rank(); ++i) out += " " + m.label(i);
  out += "\n";
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.finite(i, j))
        out += "m " + m.label(i) + " " + m.label(j) + " = " +
               std::to_string(m.order(i, j)) + "\n";
  return out;
}

std::string to_json_presentation(const CoxeterMatrix& m) {
  json j;
  j["generators"] = m.labels();
  std::vector<std::vector<std::uint64_t>> orders(m.rank());
  for (int i = 0; i < m.rank(); ++i)
    for (int j2 = 0; j2 < m.rank(); ++j2)
      orders[i].push_back(m.finite(i, j2) ? m.order(i, j2) : 0);
  j["orders"] = orders;
  return j.dump(2);
}

Word parse_word(const CoxeterMatrix& m, std::string_view text) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view name = text.substr(pos, comma - pos);
    const int g = m.index_of(name);
    if (g < 0)
      throw ParseError("unknown generator '" + std::string(name) + "' in word");
    w.push_back(static_cast<char>(g));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return w;
}

std::string format_word(const CoxeterMatrix& m, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += ",";
    out += m.label(static_cast<unsigned char>(c));
  }
  return out;
}

}  // namespace cox
