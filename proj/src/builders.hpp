#pragma once
#include <functional>

#include "kgraph.hpp"

namespace kg {

// Standard small graphs, validated on return.

// Single vertex "v" with loops e1..en (rank 1).
KGraph bouquet(int n);

// Vertices "0".."n-1", two loops a<i>, b<i> at each, and chain edges c<i>
// with range i and source i+1 (rank 1).
KGraph loop_chain(int n);

// Single-vertex 2-graph with edges f1..fm (color 1), g1..gn (color 2) and
// squares f_i·g_j = g_j'·f_i' where theta(i, j) = (i', j'). theta must be a
// bijection of {1..m} x {1..n}.
KGraph two_graph_from_bijection(int m, int n,
                                const std::function<std::pair<int, int>(int, int)>& theta);

// The 3x3 single-vertex 2-graph whose bijection swaps f1 and f2 against g1
// and g3 and fixes everything touching f3 or g2. Every vertex (there is one)
// holds a (1,1)-aperiodic quartet (f1, f2, g1, g2).
KGraph twisted33();

}  // namespace kg
