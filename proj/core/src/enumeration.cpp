#include "cox/enumeration.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace cox {

GroupElement EnumerationTable::element(int ordinal) const {
  return reduce(matrix_, words_[ordinal]);
}

int EnumerationTable::ordinal_of(const Word& canonical) const {
  auto it = index_.find(canonical);
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> EnumerationTable::walk_from(int start, const Word& w) const {
  int cur = start;
  for (char c : w) {
    cur = edge(cur, static_cast<unsigned char>(c));
    if (cur == kOutside) return std::nullopt;
  }
  return cur;
}

EnumerationTable enumerate(const MatrixPtr& m, int radius_cap, int size_cap,
                           std::size_t word_cap) {
  if (radius_cap < 0 || size_cap < 1)
    throw std::invalid_argument("enumeration caps must be positive");

  EnumerationTable t;
  t.matrix_ = m;
  const int rank = m->rank();

  // BFS inputs are one letter longer than an already-reduced word, so the
  // word cap only needs to cover the ball radius.
  word_cap = std::max(word_cap, static_cast<std::size_t>(radius_cap) + 1);

  t.words_.push_back(Word{});
  t.index_.emplace(Word{}, 0);

  std::size_t layer_begin = 0;  // ordinals of the current length layer
  for (int length = 0;; ++length) {
    const std::size_t layer_end = t.words_.size();
    std::set<Word> next;  // sorted; same-length words so lex = shortlex
    for (std::size_t e = layer_begin; e < layer_end; ++e)
      for (int g = 0; g < rank; ++g) {
        Word w = t.words_[e];
        w.push_back(static_cast<char>(g));
        Word canon = canonical_word(*m, w, word_cap);
        if (canon.size() == static_cast<std::size_t>(length) + 1)
          next.insert(std::move(canon));
      }

    if (next.empty()) {
      t.complete_ = true;
      t.radius_ = length;
      break;
    }
    if (length == radius_cap) {  // ball of the requested radius is done
      t.radius_ = radius_cap;
      break;
    }
    bool truncated = false;
    for (auto& w : next) {
      if (static_cast<int>(t.words_.size()) >= size_cap) {
        truncated = true;
        break;
      }
      t.index_.emplace(w, static_cast<int>(t.words_.size()));
      t.words_.push_back(w);
    }
    t.radius_ = length + 1;
    layer_begin = layer_end;
    if (truncated) break;
  }

  // Resolve edges now that ordinals are final.
  t.edges_.assign(t.words_.size() * static_cast<std::size_t>(rank),
                  EnumerationTable::kOutside);
  for (std::size_t e = 0; e < t.words_.size(); ++e)
    for (int g = 0; g < rank; ++g) {
      Word w = t.words_[e];
      w.push_back(static_cast<char>(g));
      const int target = t.ordinal_of(canonical_word(*m, w, word_cap));
      t.edges_[e * rank + g] = target;  // -1 == kOutside when absent
    }

  return t;
}

std::optional<std::uint64_t> group_order(const MatrixPtr& m, int size_cap,
                                         int radius_cap) {
  const auto t = enumerate(m, radius_cap, size_cap);
  if (!t.complete()) return std::nullopt;
  return static_cast<std::uint64_t>(t.size());
}

std::vector<GroupElement> subgroup_elements(const EnumerationTable& table,
                                            const std::vector<GroupElement>& generators) {
  std::vector<int> gen_ordinals;
  for (const auto& g : generators) {
    const int o = table.ordinal_of(g.word());
    if (o < 0)
      throw BallEscape("subgroup generator lies outside the enumerated ball");
    gen_ordinals.push_back(o);
  }

  std::set<int> closure{0};
  std::vector<int> frontier{0};
  for (int o : gen_ordinals)
    if (closure.insert(o).second) frontier.push_back(o);

  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gen_ordinals) {
        const auto p = table.product(x, g);
        if (!p)
          throw BallEscape("closure left the enumerated ball; enlarge the radius");
        if (closure.insert(*p).second) next.push_back(*p);
      }
    frontier = std::move(next);
  }

  std::vector<GroupElement> out;
  out.reserve(closure.size());
  for (int o : closure) out.push_back(table.element(o));
  return out;
}

std::string EnumerationTable::to_dot() const {
  static const char* kColors[] = {"black",  "red",   "blue",  "green4",
                                  "orange", "purple", "brown", "cyan4"};
  std::string out = "graph cayley {\n";
  for (int i = 0; i < size(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"";
    out += words_[i].empty() ? "e" : std::string();
    for (char c : words_[i]) out += matrix_->label(static_cast<unsigned char>(c));
    out += "\"];\n";
  }
  for (int i = 0; i < size(); ++i)
    for (int g = 0; g < matrix_->rank(); ++g) {
      const int j = edge(i, g);
      if (j == kOutside || j < i) continue;  // each undirected edge once
      out += "  " + std::to_string(i) + " -- " + std::to_string(j) +
             " [label=\"" + matrix_->label(g) + "\", color=" +
             kColors[g % 8] + "];\n";
    }
  out += "}\n";
  return out;
}

std::string EnumerationTable::to_json() const {
  nlohmann::json j;
  j["complete"] = complete_;
  j["radius"] = radius_;
  std::vector<std::string> elems;
  for (const auto& w : words_) {
    std::string s;
    for (char c : w) {
      if (!s.empty()) s += ",";
      s += matrix_->label(static_cast<unsigned char>(c));
    }
    elems.push_back(s.empty() ? "e" : s);
  }
  j["elements"] = elems;
  std::vector<std::vector<nlohmann::json>> edges(size());
  for (int i = 0; i < size(); ++i)
    for (int g = 0; g < matrix_->rank(); ++g) {
      const int target = edge(i, g);
      if (target == kOutside)
        edges[i].push_back(nullptr);
      else
        edges[i].push_back(target);
    }
  j["edges"] = edges;
  j["generators"] = matrix_->labels();
  return j.dump(2);
}

}  // namespace cox
