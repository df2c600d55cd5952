#include "cox/davis.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace cox {

SphericalCoset canonical_coset(const GroupElement& w, ParabolicSubset t,
                               std::size_t cap) {
  const auto verdict = is_spherical(*w.matrix(), t);
  if (!verdict.finite)
    throw NotSpherical("coset subset {" + subset_names(*w.matrix(), t) +
                       "} is not spherical: " + verdict.describe());
  GroupElement rep = w;
  const auto gens = t.indices();
  for (bool descended = true; descended;) {
    descended = false;
    for (int g : gens) {
      GroupElement next = reduce(rep.matrix(), rep.word() + static_cast<char>(g), cap);
      if (next.length() < rep.length()) {
        rep = std::move(next);
        descended = true;
        break;
      }
    }
  }
  return SphericalCoset{std::move(rep), t};
}

SphericalCoset act(const GroupElement& g, const SphericalCoset& c,
                   std::size_t cap) {
  return canonical_coset(multiply(g, c.rep, cap), c.t, cap);
}

DavisComplexTruncation build_complex(const MatrixPtr& m, int radius,
                                     int size_cap, std::size_t cap) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  DavisComplexTruncation cx(enumerate(m, radius, size_cap, cap));
  cx.radius_ = radius;
  cx.complete_ = cx.table_.complete();

  const auto sphericals = spherical_subsets(*m);

  // A cell belongs to the truncation iff its whole coset lies inside the
  // ball.  The canonical representative is (right-)reduced against T, so the
  // farthest member is rep * w0(W_T) at length len(rep) + len(w0); the cell
  // test only needs the representative and the longest-element length.
  std::map<std::uint64_t, int> w0_length;
  for (const auto& t : sphericals)
    w0_length[t.bits()] = longest_element(m, t, cap).length();

  for (const auto& t : sphericals)
    for (int e = 0; e < cx.table_.size(); ++e) {
      if (static_cast<int>(cx.table_.word_of(e).size()) > radius) continue;
      auto c = canonical_coset(cx.table_.element(e), t, cap);
      if (c.rep.length() + w0_length[t.bits()] > radius) continue;
      auto key = std::make_pair(t.bits(), c.rep.word());
      if (cx.index_.emplace(std::move(key), 0).second)
        cx.cells_.push_back(std::move(c));
    }

  std::sort(cx.cells_.begin(), cx.cells_.end());
  for (int i = 0; i < static_cast<int>(cx.cells_.size()); ++i)
    cx.index_[{cx.cells_[i].t.bits(), cx.cells_[i].rep.word()}] = i;

  // Covering relations: extend T by one generator.
  for (int i = 0; i < static_cast<int>(cx.cells_.size()); ++i) {
    const auto& c = cx.cells_[i];
    for (int g = 0; g < m->rank(); ++g) {
      if (c.t.contains(g)) continue;
      const auto ext = c.t.with(g);
      if (!is_spherical(*m, ext).finite) continue;
      const auto parent = canonical_coset(c.rep, ext, cap);
      const int j = cx.cell_index(parent);
      if (j >= 0) cx.covers_.emplace_back(i, j);
    }
  }
  std::sort(cx.covers_.begin(), cx.covers_.end());
  cx.covers_.erase(std::unique(cx.covers_.begin(), cx.covers_.end()),
                   cx.covers_.end());
  return cx;
}

int DavisComplexTruncation::cell_index(const SphericalCoset& c) const {
  auto it = index_.find({c.t.bits(), c.rep.word()});
  return it == index_.end() ? -1 : it->second;
}

int DavisComplexTruncation::act_on_cell(const GroupElement& g, int cell) const {
  const auto image = act(g, cells_[cell]);
  const int j = cell_index(image);
  if (j < 0)
    throw BallEscape("cell image left the truncation; enlarge the radius");
  return j;
}

std::string DavisComplexTruncation::to_json() const {
  nlohmann::json j;
  j["radius"] = radius_;
  j["complete"] = complete_;
  const auto& m = *matrix();
  std::vector<nlohmann::json> cells;
  for (const auto& c : cells_) {
    nlohmann::json jc;
    std::string rep;
    for (char ch : c.rep.word()) {
      if (!rep.empty()) rep += ",";
      rep += m.label(static_cast<unsigned char>(ch));
    }
    jc["rep_word"] = rep.empty() ? "e" : rep;
    std::vector<std::string> t;
    for (int i : c.t.indices()) t.push_back(m.label(i));
    jc["T"] = t;
    jc["dim"] = c.dim();
    cells.push_back(std::move(jc));
  }
  j["cells"] = cells;
  j["covers"] = covers_;
  return j.dump(2);
}

namespace {

std::string cell_label(const CoxeterMatrix& m, const SphericalCoset& c) {
  std::string s;
  for (char ch : c.rep.word()) s += m.label(static_cast<unsigned char>(ch));
  if (s.empty()) s = "e";
  s += "|{";
  bool first = true;
  for (int i : c.t.indices()) {
    if (!first) s += ",";
    s += m.label(i);
    first = false;
  }
  s += "}";
  return s;
}

}  // namespace

std::string DavisComplexTruncation::hasse_dot() const {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < cells_.size(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" +
           cell_label(*matrix(), cells_[i]) + "\"];\n";
  for (const auto& [child, parent] : covers_)
    out += "  " + std::to_string(child) + " -> " + std::to_string(parent) + ";\n";
  out += "}\n";
  return out;
}

std::string DavisComplexTruncation::skeleton_dot() const {
  // Vertices = rank-0 cells, edges = rank-1 cells joining their two covers.
  std::string out = "graph skeleton {\n";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].dim() != 0) continue;
    out += "  " + std::to_string(i) + " [label=\"" +
           cell_label(*matrix(), cells_[i]) + "\"];\n";
  }
  // child lists per rank-1 cell
  std::map<int, std::vector<int>> edge_ends;
  for (const auto& [child, parent] : covers_)
    if (cells_[child].dim() == 0 && cells_[parent].dim() == 1)
      edge_ends[parent].push_back(child);
  for (const auto& [edge, ends] : edge_ends) {
    if (ends.size() != 2) continue;  // boundary edge of a truncation
    const int g = cells_[edge].t.indices()[0];
    out += "  " + std::to_string(ends[0]) + " -- " + std::to_string(ends[1]) +
           " [label=\"" + matrix()->label(g) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cox
