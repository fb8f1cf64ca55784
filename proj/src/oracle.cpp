#include "cubecat/oracle.hpp"

#include <functional>

namespace cubecat {

std::vector<std::vector<Vertex>> brute_hamiltonian(const Graph& g) {
  const std::size_t size = g.size();
  if (size > 16) throw CapacityError("brute_hamiltonian is limited to 16 vertices");
  std::vector<std::vector<Vertex>> out;
  if (size == 0) return out;
  std::vector<std::size_t> path;
  std::vector<bool> used(size, false);
  std::function<void()> extend = [&] {
    if (path.size() == size) {
      auto& found = out.emplace_back();
      for (const auto i : path) found.push_back(g.vertex(i));
      return;
    }
    const std::size_t last = path.back();
    for (std::size_t next = 0; next < size; ++next) {
      if (used[next] || next == last || !g.has_edge(last, next)) continue;
      used[next] = true;
      path.push_back(next);
      extend();
      path.pop_back();
      used[next] = false;
    }
  };
  for (std::size_t start = 0; start < size; ++start) {
    used[start] = true;
    path.assign(1, start);
    extend();
    used[start] = false;
  }
  return out;
}

}  // namespace cubecat
