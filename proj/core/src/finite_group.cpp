#include "cmred/finite_group.hpp"

#include <cmred/error.hpp>

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace cmred {

namespace {

void compose_into(std::span<const Point> a, std::span<const Point> b, std::vector<Point>& out) {
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
}

void check_degrees(std::size_t degree, std::span<const Permutation> gens) {
  if (degree == 0 || degree > kMaxDegree) {
    throw InvalidPermutation("unsupported degree " + std::to_string(degree));
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidPermutation("generator " + g.to_string() + " does not have degree " +
                               std::to_string(degree));
    }
  }
}

}  // namespace

FiniteGroup FiniteGroup::close_generators(std::size_t degree, std::span<const Permutation> gens,
                                          const GroupLimits& limits) {
  check_degrees(degree, gens);

  FiniteGroup G;
  G.degree_ = degree;
  G.store_ = detail::ImageStore(degree);
  const Permutation id = Permutation::identity(degree);
  G.store_.insert(id.images());
  G.parent_.push_back(0);
  G.word_gen_.push_back(0);

  std::vector<Point> buf(degree);
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t e = level_begin; e < level_end; ++e) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        compose_into(gens[s].images(), G.store_.images(static_cast<ElementId>(e)), buf);
        auto [nid, fresh] = G.store_.insert(buf);
        if (!fresh) continue;
        if (G.store_.size() > limits.element_cap) {
          throw ElementCapExceeded("group order exceeds element cap " +
                                   std::to_string(limits.element_cap));
        }
        G.parent_.push_back(static_cast<ElementId>(e));
        G.word_gen_.push_back(static_cast<std::uint32_t>(s));
      }
    }
    // Sort the new level by image array.
    const std::size_t next_end = G.store_.size();
    std::vector<std::uint32_t> order(next_end - level_end);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<std::uint32_t>(level_end + k);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::memcmp(G.store_.images(a).data(), G.store_.images(b).data(), degree) < 0;
    });
    std::vector<ElementId> parents(order.size());
    std::vector<std::uint32_t> wgens(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      parents[k] = G.parent_[order[k]];
      wgens[k] = G.word_gen_[order[k]];
    }
    G.store_.permute_block(level_end, order);
    std::copy(parents.begin(), parents.end(), G.parent_.begin() + static_cast<std::ptrdiff_t>(level_end));
    std::copy(wgens.begin(), wgens.end(), G.word_gen_.begin() + static_cast<std::ptrdiff_t>(level_end));
    level_begin = level_end;
    level_end = next_end;
  }

  for (const auto& g : gens) G.generators_.push_back(*G.store_.find(g.images()));

  const std::size_t n = G.order();
  G.inverse_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    auto img = G.images(a);
    for (std::size_t i = 0; i < degree; ++i) buf[img[i]] = static_cast<Point>(i);
    G.inverse_[a] = *G.store_.find(buf);
  }

  if (n <= limits.table_cap && !gens.empty()) {
    // Left multiplication by each generator, then table[a][b] follows the
    // word of a: a = gen * parent(a) gives a*b = gen * (parent(a)*b).
    std::vector<ElementId> left(gens.size() * n);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      for (ElementId b = 0; b < n; ++b) {
        compose_into(gens[s].images(), G.images(b), buf);
        left[s * n + b] = *G.store_.find(buf);
      }
    }
    G.table_.resize(n * n);
    for (ElementId b = 0; b < n; ++b) G.table_[b] = b;
    for (ElementId a = 1; a < n; ++a) {
      const std::size_t s = G.word_gen_[a];
      const ElementId* prow = G.table_.data() + static_cast<std::size_t>(G.parent_[a]) * n;
      ElementId* row = G.table_.data() + static_cast<std::size_t>(a) * n;
      const ElementId* lrow = left.data() + s * n;
      for (ElementId b = 0; b < n; ++b) row[b] = lrow[prow[b]];
    }
  } else if (n <= limits.table_cap) {
    G.table_.assign(1, 0);
  }
  return G;
}

Permutation FiniteGroup::element(ElementId id) const {
  auto img = images(id);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

std::optional<ElementId> FiniteGroup::find(std::span<const Point> images) const {
  return store_.find(images);
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  return store_.find(p.images());
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  std::vector<Point> buf;
  return multiply(a, b, buf);
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b, std::vector<Point>& scratch) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  scratch.resize(degree_);
  compose_into(images(a), images(b), scratch);
  auto r = store_.find(scratch);
  if (!r) throw std::logic_error("group not closed under multiplication");
  return *r;
}

ElementId FiniteGroup::conjugate(ElementId x, ElementId g) const {
  std::vector<Point> buf;
  return conjugate(x, g, buf);
}

ElementId FiniteGroup::conjugate(ElementId x, ElementId g, std::vector<Point>& scratch) const {
  if (!table_.empty()) return multiply(multiply(x, g), inverse_[x]);
  // (x g x^-1)(x(i)) = x(g(i))
  auto xi = images(x);
  auto gi = images(g);
  scratch.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) scratch[xi[i]] = xi[gi[i]];
  auto r = store_.find(scratch);
  if (!r) throw std::logic_error("group not closed under conjugation");
  return *r;
}

std::vector<Permutation> greedy_generators(std::size_t degree,
                                           std::span<const Permutation> candidates,
                                           const GroupLimits& limits) {
  check_degrees(degree, candidates);
  detail::ImageStore store(degree);
  store.insert(Permutation::identity(degree).images());
  std::vector<Permutation> chosen;
  std::vector<Point> buf(degree);
  // Elements [0, explored) have been multiplied by every chosen generator.
  std::size_t explored = 0;

  auto push_products = [&](const Permutation& gen, std::size_t upto) {
    for (std::size_t e = 0; e < upto; ++e) {
      compose_into(gen.images(), store.images(static_cast<std::uint32_t>(e)), buf);
      store.insert(buf);
      if (store.size() > limits.element_cap) {
        throw ElementCapExceeded("group order exceeds element cap " +
                                 std::to_string(limits.element_cap));
      }
    }
  };

  for (const auto& cand : candidates) {
    if (store.find(cand.images())) continue;
    chosen.push_back(cand);
    push_products(cand, explored);
    while (explored < store.size()) {
      const auto e = static_cast<std::uint32_t>(explored++);
      for (const auto& g : chosen) {
        compose_into(g.images(), store.images(e), buf);
        store.insert(buf);
        if (store.size() > limits.element_cap) {
          throw ElementCapExceeded("group order exceeds element cap " +
                                   std::to_string(limits.element_cap));
        }
      }
    }
  }
  return chosen;
}

}  // namespace cmred
