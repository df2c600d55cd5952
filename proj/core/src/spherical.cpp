#include "cox/spherical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cox {

namespace {

using Entry = CoxeterMatrix::Entry;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return ~std::uint64_t{0};
  return r;
}

// Tries to match one classification-graph component against the finite-type
// catalog.  `members` ascending, all pairwise labels finite.  Returns false
// when the component matches no finite type.
bool classify_component(const CoxeterMatrix& m, const std::vector<int>& members,
                        ComponentType& out) {
  const int n = static_cast<int>(members.size());
  out.members = members;

  if (n == 1) {
    out.name = "A1";
    out.order = 2;
    return true;
  }

  // Edges of the classification graph inside the component.
  struct Edge {
    int a, b;  // positions within `members`
    Entry label;
  };
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Entry ord = m.order(members[i], members[j]);
      if (ord >= 3) {
        edges.push_back({i, j, ord});
        ++degree[i];
        ++degree[j];
      }
    }

  // Every finite type is a tree.
  if (static_cast<int>(edges.size()) != n - 1) return false;

  if (n == 2) {
    const Entry k = edges[0].label;
    out.name = k == 3 ? "A2" : k == 4 ? "B2" : "I2(" + std::to_string(k) + ")";
    out.order = 2 * static_cast<std::uint64_t>(k);
    return true;
  }

  int n_label3 = 0, n_label4 = 0, n_label5 = 0;
  for (const Edge& e : edges) {
    if (e.label == 3) ++n_label3;
    else if (e.label == 4) ++n_label4;
    else if (e.label == 5) ++n_label5;
    else return false;  // label >= 6 in a rank >= 3 component
  }
  if (n_label4 + n_label5 > 1) return false;

  const int max_degree = *std::max_element(degree.begin(), degree.end());
  const bool is_path = max_degree <= 2;

  if (is_path) {
    // Walk the path from an endpoint to read off the label sequence.
    int start = 0;
    while (degree[start] != 1) ++start;
    std::vector<Entry> labels;
    int prev = -1, cur = start;
    for (int step = 0; step + 1 < n; ++step) {
      for (const Edge& e : edges) {
        const int other = e.a == cur ? e.b : e.b == cur ? e.a : -1;
        if (other >= 0 && other != prev) {
          labels.push_back(e.label);
          prev = cur;
          cur = other;
          break;
        }
      }
    }
    if (n_label4 == 1) {
      if (labels.front() == 4 || labels.back() == 4) {
        out.name = "B" + std::to_string(n);
        out.order = (std::uint64_t{1} << n) * factorial(n);
        return true;
      }
      if (n == 4 && labels[1] == 4) {
        out.name = "F4";
        out.order = 1152;
        return true;
      }
      return false;
    }
    if (n_label5 == 1) {
      if (labels.front() != 5 && labels.back() != 5) return false;
      if (n == 3) {
        out.name = "H3";
        out.order = 120;
        return true;
      }
      if (n == 4) {
        out.name = "H4";
        out.order = 14400;
        return true;
      }
      return false;
    }
    out.name = "A" + std::to_string(n);
    out.order = factorial(n + 1);
    return true;
  }

  // Branching: only one degree-3 node, all labels 3, arm profile from the
  // D/E series.
  if (n_label4 + n_label5 > 0) return false;
  if (max_degree > 3) return false;
  if (std::count(degree.begin(), degree.end(), 3) != 1) return false;

  const int hub = static_cast<int>(std::find(degree.begin(), degree.end(), 3) -
                                   degree.begin());
  std::vector<int> arms;
  for (const Edge& e : edges) {
    int next = e.a == hub ? e.b : e.b == hub ? e.a : -1;
    if (next < 0) continue;
    int len = 1, prev = hub, cur = next;
    for (bool extended = true; extended;) {
      extended = false;
      for (const Edge& f : edges) {
        const int other = f.a == cur ? f.b : f.b == cur ? f.a : -1;
        if (other >= 0 && other != prev) {
          prev = cur;
          cur = other;
          ++len;
          extended = true;
          break;
        }
      }
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());

  if (arms[0] == 1 && arms[1] == 1) {
    out.name = "D" + std::to_string(n);
    out.order = (std::uint64_t{1} << (n - 1)) * factorial(n);
    return true;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    if (arms[2] == 2) { out.name = "E6"; out.order = 51840; }
    else if (arms[2] == 3) { out.name = "E7"; out.order = 2903040; }
    else { out.name = "E8"; out.order = 696729600; }
    return true;
  }
  return false;
}

}  // namespace

bool triangle_criterion_finite(Entry p, Entry q, Entry r) {
  // 1/p + 1/q + 1/r > 1, in exact integer arithmetic: qr + pr + pq > pqr.
  const std::uint64_t P = p, Q = q, R = r;
  return Q * R + P * R + P * Q > P * Q * R;
}

SphericalVerdict is_spherical(const CoxeterMatrix& m, ParabolicSubset t) {
  SphericalVerdict v;
  const auto members = t.indices();

  // Any infinite label inside T settles it.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!m.finite(members[i], members[j])) {
        v.finite = false;
        v.reason = InfinitenessReason::InfinitePair;
        v.witness = {members[i], members[j]};
        return v;
      }

  // Components of the classification graph (edges = finite labels >= 3).
  std::vector<int> comp(members.size());
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (m.order(members[i], members[j]) >= 3 && comp[i] != comp[j]) {
          const int from = std::max(comp[i], comp[j]);
          const int to = std::min(comp[i], comp[j]);
          for (auto& c : comp)
            if (c == from) c = to;
          changed = true;
        }
  }

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < members.size(); ++i)
    groups[comp[i]].push_back(members[i]);

  v.finite = true;
  for (const auto& [id, group] : groups) {
    ComponentType ct;
    const bool ok = classify_component(m, group, ct);
    if (group.size() == 3) {
      // Cross-check the rank-3 catalog answer against the triangle criterion.
      const bool tri = triangle_criterion_finite(m.order(group[0], group[1]),
                                                 m.order(group[0], group[2]),
                                                 m.order(group[1], group[2]));
      if (tri != ok)
        throw Error("internal: triangle criterion disagrees with catalog on {" +
                    subset_names(m, ParabolicSubset::of({group[0], group[1],
                                                         group[2]})) + "}");
    }
    if (!ok) {
      v.finite = false;
      v.components.clear();
      v.order = 0;
      v.reason = group.size() == 3 ? InfinitenessReason::TriangleCriterion
                                   : InfinitenessReason::NonCatalogComponent;
      v.witness = group;
      return v;
    }
    v.order = saturating_mul(v.order, ct.order);
    v.components.push_back(std::move(ct));
  }
  return v;
}

std::vector<ParabolicSubset> spherical_subsets(const CoxeterMatrix& m) {
  std::vector<ParabolicSubset> result{ParabolicSubset{}};
  std::vector<ParabolicSubset> layer{ParabolicSubset{}};
  while (!layer.empty()) {
    std::vector<ParabolicSubset> next;
    for (const auto& t : layer)
      for (int g = 0; g < m.rank(); ++g) {
        if (t.contains(g)) continue;
        const auto ext = t.with(g);
        // Extend each set only by larger indices to visit each subset once.
        if ((ext.bits() >> g) != 1u) continue;
        if (is_spherical(m, ext).finite) next.push_back(ext);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    result.insert(result.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return result;
}

int davis_dimension(const CoxeterMatrix& m) {
  int dim = 0;
  for (const auto& t : spherical_subsets(m)) dim = std::max(dim, t.size());
  return dim;
}

bool is_two_dimensional(const CoxeterMatrix& m) {
  return davis_dimension(m) == 2;
}

MatrixPtr restrict_to(const CoxeterMatrix& m, ParabolicSubset t) {
  const auto idx = t.indices();
  const std::size_t n = idx.size();
  std::vector<std::vector<CoxeterMatrix::Entry>> orders(
      n, std::vector<CoxeterMatrix::Entry>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(m.label(idx[i]));
    for (std::size_t j = 0; j < n; ++j) orders[i][j] = m.order(idx[i], idx[j]);
  }
  return make_matrix(std::move(orders), std::move(labels));
}

std::string subset_names(const CoxeterMatrix& m, ParabolicSubset t) {
  std::string out;
  for (int i : t.indices()) {
    if (!out.empty()) out += ",";
    out += m.label(i);
  }
  return out;
}

std::string SphericalVerdict::describe() const {
  if (finite) {
    std::string s = "finite";
    if (!components.empty()) {
      s += ": ";
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += " x ";
        s += components[i].name;
      }
    }
    s += ", order " + std::to_string(order);
    return s;
  }
  switch (reason) {
    case InfinitenessReason::InfinitePair:
      return "infinite: pair has label infinity";
    case InfinitenessReason::TriangleCriterion:
      return "infinite: rank-3 component fails 1/p+1/q+1/r > 1";
    case InfinitenessReason::NonCatalogComponent:
      return "infinite: component matches no finite type";
    default:
      return "infinite";
  }
}

}  // namespace cox
