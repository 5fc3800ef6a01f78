#include "cmred/action.hpp"

#include <cmred/error.hpp>

#include <algorithm>
#include <string>

namespace cmred {

ActionTable::ActionTable(std::size_t points, std::vector<Point> table, std::vector<ElementId> generators)
    : points_(points), table_(std::move(table)), generators_(std::move(generators)) {}

ActionTable ActionTable::natural(const FiniteGroup& G) {
  std::vector<Point> table;
  table.reserve(G.order() * G.degree());
  for (ElementId g = 0; g < G.order(); ++g) {
    auto img = G.images(g);
    table.insert(table.end(), img.begin(), img.end());
  }
  auto gens = G.generators();
  return ActionTable(G.degree(), std::move(table), {gens.begin(), gens.end()});
}

Subset ActionTable::apply(ElementId g, Subset s) const {
  const Point* r = table_.data() + static_cast<std::size_t>(g) * points_;
  Subset out = 0;
  while (s) {
    out |= Subset{1} << r[std::countr_zero(s)];
    s &= s - 1;
  }
  return out;
}

ActionTable coset_action(const FiniteGroup& G, const CosetSpace& C) {
  const std::size_t n = C.index();
  if (n > kMaxDegree) {
    throw UnsupportedParameter("coset action on " + std::to_string(n) + " points exceeds " +
                               std::to_string(kMaxDegree));
  }
  auto gens = G.generators();
  std::vector<ElementId> gen_ids(gens.begin(), gens.end());

  // Generator rows directly, then every element through its recorded word.
  std::vector<Point> scratch;
  std::vector<Point> gen_rows(gen_ids.size() * n);
  for (std::size_t s = 0; s < gen_ids.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      gen_rows[s * n + i] = static_cast<Point>(C.coset_of[G.multiply(gen_ids[s], C.reps[i], scratch)]);
    }
  }
  std::vector<Point> table(G.order() * n);
  for (std::size_t i = 0; i < n; ++i) table[i] = static_cast<Point>(i);
  for (ElementId g = 1; g < G.order(); ++g) {
    const Point* parent = table.data() + static_cast<std::size_t>(G.word_parent(g)) * n;
    const Point* gen = gen_rows.data() + G.word_generator(g) * n;
    Point* row = table.data() + static_cast<std::size_t>(g) * n;
    for (std::size_t i = 0; i < n; ++i) row[i] = gen[parent[i]];
  }
  return ActionTable(n, std::move(table), std::move(gen_ids));
}

TransitivityResult is_k_transitive(const ActionTable& action, std::size_t k) {
  TransitivityResult res;
  const std::size_t n = action.points();
  if (k == 0 || k > n) return res;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    space *= n;
    if (space > (std::uint64_t{1} << 28)) {
      throw SubsetCapExceeded("k-tuple space too large for transitivity test");
    }
  }
  std::uint64_t distinct = 1;
  for (std::size_t i = 0; i < k; ++i) distinct *= (n - i);

  auto decode = [&](std::uint64_t code, std::vector<Point>& t) {
    for (std::size_t i = 0; i < k; ++i) {
      t[k - 1 - i] = static_cast<Point>(code % n);
      code /= n;
    }
  };
  auto encode = [&](const std::vector<Point>& t) {
    std::uint64_t code = 0;
    for (Point p : t) code = code * n + p;
    return code;
  };
  auto all_distinct = [&](const std::vector<Point>& t) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (t[i] == t[j]) return false;
    return true;
  };

  std::vector<bool> seen(space, false);
  std::vector<Point> t(k), u(k);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < space; ++start) {
    if (seen[start]) continue;
    decode(start, t);
    if (!all_distinct(t)) continue;
    ++res.orbit_count;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      decode(queue[q], t);
      for (ElementId g : action.generators()) {
        for (std::size_t i = 0; i < k; ++i) u[i] = action.image(g, t[i]);
        const std::uint64_t c = encode(u);
        if (!seen[c]) {
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
    if (res.orbit_count == 1) res.first_orbit_size = queue.size();
  }
  res.transitive = res.first_orbit_size == distinct;
  return res;
}

std::vector<SubsetOrbit> orbits_on_subsets(const ActionTable& action, std::size_t eps,
                                           std::uint64_t cap, bool include_complement) {
  const std::size_t n = action.points();
  if (eps > n) throw UnsupportedParameter("subset size exceeds point count");
  const std::vector<Subset> all = enumerate_subsets(n, eps, cap);
  const bool complement = include_complement && 2 * eps == n;

  std::vector<bool> seen(all.size(), false);
  std::vector<SubsetOrbit> orbits;
  for (Subset start : all) {
    if (seen[colex_rank(start)]) continue;
    SubsetOrbit orbit;
    orbit.representative = start;
    seen[colex_rank(start)] = true;
    orbit.members.push_back(start);
    for (std::size_t q = 0; q < orbit.members.size(); ++q) {
      const Subset s = orbit.members[q];
      auto visit = [&](Subset t) {
        const std::uint64_t r = colex_rank(t);
        if (!seen[r]) {
          seen[r] = true;
          orbit.members.push_back(t);
        }
      };
      for (ElementId g : action.generators()) visit(action.apply(g, s));
      if (complement) visit(subset_complement(s, n));
    }
    std::sort(orbit.members.begin(), orbit.members.end(), subset_lex_less);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace cmred
