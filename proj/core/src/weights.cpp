#include "lieelem/weights.hpp"

#include <algorithm>

#include "lieelem/generators.hpp"

namespace lieelem {

namespace {

// classification of every ordering of (1,2,3,4), keyed by its image array
const std::map<std::array<int, 4>, EtaClass>& eta_table() {
  static const std::map<std::array<int, 4>, EtaClass> table = [] {
    std::map<std::array<int, 4>, EtaClass> t;
    const QElement e0 = eta(4, 1, 2, 3, 4);
    const QElement e1 = eta(4, 1, 3, 4, 2);
    const QElement e2 = eta(4, 1, 4, 2, 3);
    std::array<int, 4> o{1, 2, 3, 4};
    do {
      const QElement x = eta(4, o[0], o[1], o[2], o[3]);
      EtaClass c;
      if (x == e0) {
        c = {0, 1};
      } else if (x == -e0) {
        c = {0, -1};
      } else if (x == e1) {
        c = {1, 1};
      } else if (x == -e1) {
        c = {1, -1};
      } else if (x == e2) {
        c = {2, 1};
      } else if (x == -e2) {
        c = {2, -1};
      } else {
        throw StructureError("eta ordering outside the expected classes");
      }
      t[o] = c;
    } while (std::next_permutation(o.begin(), o.end()));
    return t;
  }();
  return table;
}

}  // namespace

EtaClass classify_eta(const std::array<int, 4>& labels) {
  std::array<int, 4> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a + 1 < 4; ++a)
    if (sorted[a] == sorted[a + 1]) throw StructureError("eta needs four distinct labels");
  std::array<int, 4> rank{};
  for (std::size_t a = 0; a < 4; ++a)
    rank[a] = static_cast<int>(std::find(sorted.begin(), sorted.end(), labels[a]) - sorted.begin()) + 1;
  return eta_table().at(rank);
}

}  // namespace lieelem
