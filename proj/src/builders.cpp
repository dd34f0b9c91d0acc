#include "builders.hpp"

namespace kg {

namespace {

KGraph finish(Skeleton sk, RuleSet rules) {
  KGraph g(std::move(sk), std::move(rules));
  ValidationReport rep = g.validate();
  if (!rep.ok()) fail(Errc::internal, "builder produced an invalid graph:\n" + rep.str());
  return g;
}

}  // namespace

KGraph bouquet(int n) {
  if (n < 1) fail(Errc::bad_argument, "a bouquet needs at least one loop");
  Skeleton sk(1);
  sk.add_vertex("v");
  for (int i = 1; i <= n; ++i) sk.add_edge("e" + std::to_string(i), 1, "v", "v");
  return finish(std::move(sk), RuleSet{});
}

KGraph loop_chain(int n) {
  if (n < 1) fail(Errc::bad_argument, "a loop chain needs at least one vertex");
  Skeleton sk(1);
  for (int i = 0; i < n; ++i) sk.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    sk.add_edge("a" + std::to_string(i), 1, std::to_string(i), std::to_string(i));
    sk.add_edge("b" + std::to_string(i), 1, std::to_string(i), std::to_string(i));
  }
  for (int i = 0; i + 1 < n; ++i)
    sk.add_edge("c" + std::to_string(i), 1, std::to_string(i), std::to_string(i + 1));
  return finish(std::move(sk), RuleSet{});
}

KGraph two_graph_from_bijection(int m, int n,
                                const std::function<std::pair<int, int>(int, int)>& theta) {
  if (m < 1 || n < 1) fail(Errc::bad_argument, "need at least one edge of each color");
  Skeleton sk(2);
  sk.add_vertex("v");
  std::vector<int> f(m + 1), g(n + 1);
  for (int i = 1; i <= m; ++i) f[i] = sk.add_edge("f" + std::to_string(i), 1, "v", "v");
  for (int j = 1; j <= n; ++j) g[j] = sk.add_edge("g" + std::to_string(j), 2, "v", "v");
  RuleSet rules;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      auto [i2, j2] = theta(i, j);
      if (i2 < 1 || i2 > m || j2 < 1 || j2 > n)
        fail(Errc::bad_argument, "bijection image out of range");
      rules.add({f[i], g[j], g[j2], f[i2]});
    }
  return finish(std::move(sk), std::move(rules));
}

KGraph twisted33() {
  return two_graph_from_bijection(3, 3, [](int i, int j) -> std::pair<int, int> {
    if (j == 2 || i == 3) return {i, j};
    return {i == 1 ? 2 : 1, j};  // j in {1,3}: swap f1 and f2
  });
}

}  // namespace kg
