#pragma once
#include <vector>

namespace kg {

// A path in the category presented by a skeleton and its squares: edge
// indices in categorical order (range-side edge first). The empty word is
// the identity at `range`. Two words can name the same morphism; equality
// goes through KGraph::morphisms_equal.
struct Morphism {
  int range = -1;
  std::vector<int> word;

  bool is_identity() const { return word.empty(); }
};

}  // namespace kg
