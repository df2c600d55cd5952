#include "cox/matrix.hpp"

#include <algorithm>

namespace cox {

CoxeterMatrix CoxeterMatrix::validated(std::vector<std::vector<Entry>> orders,
                                       std::vector<std::string> labels) {
  const std::size_t n = orders.size();
  if (n == 0)
    throw InvalidMatrix(InvalidMatrix::Kind::BadShape, "empty order matrix");
  if (n > static_cast<std::size_t>(kMaxRank))
    throw InvalidMatrix(InvalidMatrix::Kind::BadShape,
                        "rank " + std::to_string(n) + " exceeds supported maximum " +
                            std::to_string(kMaxRank));
  for (const auto& row : orders)
    if (row.size() != n)
      throw InvalidMatrix(InvalidMatrix::Kind::BadShape,
                          "order matrix is not square");

  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i][i] != 1)
      throw InvalidMatrix(InvalidMatrix::Kind::BadDiagonal,
                          "diagonal entry at (" + std::to_string(i) + "," +
                              std::to_string(i) + ") must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (orders[i][j] < 2)
        throw InvalidMatrix(InvalidMatrix::Kind::BadOffDiagonal,
                            "off-diagonal entry at (" + std::to_string(i) + "," +
                                std::to_string(j) + ") must be >= 2 or infinity");
      if (orders[i][j] != orders[j][i])
        throw InvalidMatrix(InvalidMatrix::Kind::NotSymmetric,
                            "entries at (" + std::to_string(i) + "," +
                                std::to_string(j) + ") and transpose differ");
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i + 1));
  } else if (labels.size() != n) {
    throw InvalidMatrix(InvalidMatrix::Kind::BadShape,
                        "label count does not match rank");
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels[i] == labels[j])
          throw InvalidMatrix(InvalidMatrix::Kind::BadShape,
                              "duplicate generator name '" + labels[i] + "'");
  }

  std::vector<Entry> flat;
  flat.reserve(n * n);
  for (const auto& row : orders) flat.insert(flat.end(), row.begin(), row.end());
  return CoxeterMatrix(static_cast<int>(n), std::move(flat), std::move(labels));
}

int CoxeterMatrix::index_of(std::string_view name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

MatrixPtr make_matrix(std::vector<std::vector<CoxeterMatrix::Entry>> orders,
                      std::vector<std::string> labels) {
  return std::make_shared<const CoxeterMatrix>(
      CoxeterMatrix::validated(std::move(orders), std::move(labels)));
}

MatrixPtr make_dihedral(CoxeterMatrix::Entry m) {
  return make_matrix({{1, m}, {m, 1}}, {"s", "t"});
}

}  // namespace cox
