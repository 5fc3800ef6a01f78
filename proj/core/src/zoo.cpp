#include "cmred/zoo.hpp"

#include <cmred/classical.hpp>
#include <cmred/error.hpp>
#include <cmred/small_field.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmred {

namespace {

struct FamilyInfo {
  ZooFamily family;
  std::string_view name;
  bool signed_parameter;
};

constexpr FamilyInfo kFamilies[] = {
    {ZooFamily::Sym, "sym", false},       {ZooFamily::Alt, "alt", false},
    {ZooFamily::Cyclic, "cyclic", false}, {ZooFamily::Dihedral, "dihedral", false},
    {ZooFamily::Psl2, "psl2", false},     {ZooFamily::Pgl2, "pgl2", false},
    {ZooFamily::Psl3, "psl3", false},     {ZooFamily::Pgl3, "pgl3", false},
    {ZooFamily::Sp4f2, "sp4f2", true},    {ZooFamily::Sp6f2, "sp6f2", true},
    {ZooFamily::Psu3, "psu3", false},     {ZooFamily::Pgu3, "pgu3", false},
};

const FamilyInfo& info(ZooFamily f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw std::logic_error("unknown zoo family");
}

bool parameter_supported(ZooFamily f, int p) {
  switch (f) {
    case ZooFamily::Sym:
      return p >= 2 && p <= 9;
    case ZooFamily::Alt:
      return p >= 3 && p <= 9;
    case ZooFamily::Cyclic:
      return p >= 1 && p <= 64;
    case ZooFamily::Dihedral:
      return p >= 3 && p <= 64;
    case ZooFamily::Psl2:
    case ZooFamily::Pgl2:
      return SmallField::supported(p);
    case ZooFamily::Psl3:
    case ZooFamily::Pgl3:
      return p >= 2 && p <= 4;
    case ZooFamily::Sp4f2:
    case ZooFamily::Sp6f2:
      return p == 1 || p == -1;
    case ZooFamily::Psu3:
    case ZooFamily::Pgu3:
      return p == 2 || p == 3;
  }
  return false;
}

std::string range_hint(ZooFamily f) {
  switch (f) {
    case ZooFamily::Sym: return "2..9";
    case ZooFamily::Alt: return "3..9";
    case ZooFamily::Cyclic: return "1..64";
    case ZooFamily::Dihedral: return "3..64";
    case ZooFamily::Psl2:
    case ZooFamily::Pgl2: return "one of 2,3,4,5,7,8,9,11,13";
    case ZooFamily::Psl3:
    case ZooFamily::Pgl3: return "one of 2,3,4";
    case ZooFamily::Sp4f2:
    case ZooFamily::Sp6f2: return "+ or -";
    case ZooFamily::Psu3:
    case ZooFamily::Pgu3: return "2 or 3";
  }
  return "";
}

// --- helpers ---------------------------------------------------------------

std::vector<Permutation> point_stabilizer_gens(const FiniteGroup& G, const GroupLimits& limits) {
  std::vector<Permutation> fixing;
  for (ElementId id = 0; id < G.order(); ++id)
    if (G.images(id)[0] == 0) fixing.push_back(G.element(id));
  return greedy_generators(G.degree(), fixing, limits);
}

Permutation perm_from(std::size_t n, auto&& f) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(f(static_cast<int>(i)));
  return Permutation::from_images(img);
}

struct Built {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  std::uint64_t independent_order = 0;
  std::string description;
};

Built symmetric(int n, bool alternating) {
  Built b;
  b.degree = static_cast<std::size_t>(n);
  if (alternating) {
    for (int i = 2; i < n; ++i)
      b.gens.push_back(perm_from(b.degree, [i](int x) { return x == 0 ? 1 : x == 1 ? i : x == i ? 0 : x; }));
  } else {
    b.gens.push_back(perm_from(b.degree, [](int x) { return x == 0 ? 1 : x == 1 ? 0 : x; }));
    b.gens.push_back(perm_from(b.degree, [n](int x) { return (x + 1) % n; }));
  }
  std::vector<int> p(b.degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    if (!alternating || inversions % 2 == 0) ++b.independent_order;
  } while (std::next_permutation(p.begin(), p.end()));
  b.description = std::string(alternating ? "A_" : "S_") + std::to_string(n) + " on " +
                  std::to_string(n) + " points";
  return b;
}

Built affine_line(int n, bool dihedral) {
  Built b;
  b.degree = static_cast<std::size_t>(n);
  b.gens.push_back(perm_from(b.degree, [n](int x) { return (x + 1) % n; }));
  if (dihedral) b.gens.push_back(perm_from(b.degree, [n](int x) { return (n - x) % n; }));
  std::set<Permutation> maps;
  for (int k = 0; k < n; ++k) {
    maps.insert(perm_from(b.degree, [n, k](int x) { return (x + k) % n; }));
    if (dihedral) maps.insert(perm_from(b.degree, [n, k](int x) { return (n - x + k) % n; }));
  }
  b.independent_order = maps.size();
  b.description = (dihedral ? "dihedral group of order " + std::to_string(2 * n)
                            : "cyclic group of order " + std::to_string(n)) +
                  " on " + std::to_string(n) + " points";
  return b;
}

Built projective(std::size_t dim, int q, bool special) {
  using namespace classical;
  const SmallField F(q);
  const PointSet points = projective_space(F, dim);

  // SL is generated by the elementary transvections, GL additionally by
  // diag(w, 1, ..., 1).
  std::vector<Permutation> candidates;
  auto identity = [&] {
    Matrix A{dim, std::vector<SmallField::Elem>(dim * dim, 0)};
    for (std::size_t i = 0; i < dim; ++i) A.entries[i * dim + i] = 1;
    return A;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (int a = 1; a < q && i != j; ++a) {
        Matrix A = identity();
        A.entries[i * dim + j] = static_cast<SmallField::Elem>(a);
        candidates.push_back(points.permutation_of(A));
      }
  if (!special) {
    for (int w = 2; w < q; ++w) {
      Matrix A = identity();
      A.entries[0] = static_cast<SmallField::Elem>(w);
      candidates.push_back(points.permutation_of(A));
    }
  }

  const PermutationImage image = permutation_image(
      points, all_matrices(F, dim, [&](const Matrix& A) {
        const auto d = determinant(F, A);
        return special ? d == 1 : d != 0;
      }));
  if (image.kernel_size == 0 || image.matrix_count % image.kernel_size != 0 ||
      image.distinct.size() != image.matrix_count / image.kernel_size) {
    throw std::logic_error("inconsistent projective matrix count");
  }

  Built b;
  b.degree = points.size();
  b.gens = greedy_generators(b.degree, candidates);
  b.independent_order = image.matrix_count / image.kernel_size;
  b.description = std::string(special ? "PSL_" : "PGL_") + std::to_string(dim) + "(F_" +
                  std::to_string(q) + ") on P^" + std::to_string(dim - 1) + "(F_" +
                  std::to_string(q) + "), " + std::to_string(points.size()) + " points";
  return b;
}

Built unitary(int q, bool special) {
  using namespace classical;
  const SmallField F(q * q);
  const PointSet points = isotropic_points(F, q);
  if (points.size() != static_cast<std::size_t>(q * q * q + 1))
    throw std::logic_error("unexpected number of isotropic points");
  if (points.point(0) != Vec{1, 0, 0}) throw std::logic_error("point 0 is not [1:0:0]");

  std::vector<Matrix> matrices = unitary_group(F, q);
  if (special) {
    std::erase_if(matrices, [&](const Matrix& A) { return determinant(F, A) != 1; });
  }
  const PermutationImage image = permutation_image(points, matrices);
  if (image.kernel_size == 0 || image.matrix_count % image.kernel_size != 0 ||
      image.distinct.size() != image.matrix_count / image.kernel_size) {
    throw std::logic_error("inconsistent unitary matrix count");
  }

  Built b;
  b.degree = points.size();
  b.gens = greedy_generators(b.degree, image.distinct);
  b.independent_order = image.matrix_count / image.kernel_size;
  b.description = std::string(special ? "PSU_3(F_" : "PGU_3(F_") + std::to_string(q) + ") on " +
                  std::to_string(points.size()) + " isotropic points";
  return b;
}

Built symplectic(int m, int sign) {
  using namespace classical;
  const SymplecticSpace V(m);
  const FormTable base =
      sign > 0 ? V.table_of([&](BitVec v) { return V.q_plus(v); })
               : V.table_of([&](BitVec v) { return V.q_minus(v); });
  const std::vector<BitMatrix> trans = V.transvections();
  const std::vector<FormTable> points = V.form_orbit(base, trans);

  const std::vector<FormTable> polarizing = V.polarizing_forms();
  for (FormTable t : points)
    if (!std::binary_search(polarizing.begin(), polarizing.end(), t))
      throw std::logic_error("form orbit leaves the polarizing forms");

  std::vector<Permutation> candidates;
  for (const BitMatrix& t : trans) {
    if (!V.is_symplectic(t)) throw std::logic_error("transvection is not symplectic");
    candidates.push_back(V.permutation_of(t, points));
  }

  Built b;
  b.degree = points.size();
  b.gens = greedy_generators(b.degree, candidates);
  b.independent_order = V.count_symplectic();
  b.description = "Sp_" + std::to_string(2 * m) + "(F_2) on the " + std::to_string(points.size()) +
                  " quadratic forms of type " + (sign > 0 ? "+" : "-") + " polarizing to psi";
  return b;
}

}  // namespace

std::string ZooSpec::to_string() const {
  const FamilyInfo& i = info(family);
  std::string out(i.name);
  out += ':';
  if (i.signed_parameter) {
    out += parameter > 0 ? "+" : "-";
  } else {
    out += std::to_string(parameter);
  }
  return out;
}

ZooSpec parse_zoo_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("expected family:parameter in '" + std::string(text) + "'", text.size());
  const std::string_view name = text.substr(0, colon);
  const std::string_view param = text.substr(colon + 1);

  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies)
    if (i.name == name) found = &i;
  if (!found) throw ParseError("unknown group family '" + std::string(name) + "'", 0);

  ZooSpec spec;
  spec.family = found->family;
  const std::size_t at = colon + 1;
  auto bad = [&] {
    return ParseError("bad parameter '" + std::string(param) + "' for " + std::string(name) +
                          ", expected " + range_hint(found->family),
                      at);
  };
  if (found->signed_parameter) {
    // Accept the Unicode minus sign as well as '-'.
    if (param == "+") spec.parameter = 1;
    else if (param == "-" || param == "−") spec.parameter = -1;
    else throw bad();
  } else {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), value);
    if (param.empty() || ec != std::errc() || ptr != param.data() + param.size()) throw bad();
    spec.parameter = value;
  }
  if (!parameter_supported(spec.family, spec.parameter)) throw bad();
  return spec;
}

ZooGroup build_zoo_group(const ZooSpec& spec, const ZooOptions& options) {
  if (!parameter_supported(spec.family, spec.parameter))
    throw UnsupportedParameter("unsupported zoo parameter for " + std::string(info(spec.family).name));
  if (spec.family == ZooFamily::Sp6f2 && !options.allow_large)
    throw UnsupportedParameter(spec.to_string() + " is large; enable large groups explicitly");

  Built b;
  switch (spec.family) {
    case ZooFamily::Sym: b = symmetric(spec.parameter, false); break;
    case ZooFamily::Alt: b = symmetric(spec.parameter, true); break;
    case ZooFamily::Cyclic: b = affine_line(spec.parameter, false); break;
    case ZooFamily::Dihedral: b = affine_line(spec.parameter, true); break;
    case ZooFamily::Psl2: b = projective(2, spec.parameter, true); break;
    case ZooFamily::Pgl2: b = projective(2, spec.parameter, false); break;
    case ZooFamily::Psl3: b = projective(3, spec.parameter, true); break;
    case ZooFamily::Pgl3: b = projective(3, spec.parameter, false); break;
    case ZooFamily::Sp4f2: b = symplectic(2, spec.parameter); break;
    case ZooFamily::Sp6f2: b = symplectic(3, spec.parameter); break;
    case ZooFamily::Psu3: b = unitary(spec.parameter, true); break;
    case ZooFamily::Pgu3: b = unitary(spec.parameter, false); break;
  }

  FiniteGroup G = FiniteGroup::close_generators(b.degree, b.gens, options.limits);
  if (G.order() != b.independent_order) {
    throw std::logic_error(spec.to_string() + ": closure has order " + std::to_string(G.order()) +
                           " but the independent count is " +
                           std::to_string(b.independent_order));
  }
  std::vector<Permutation> H = point_stabilizer_gens(G, options.limits);
  return ZooGroup{spec, std::move(G), std::move(H), b.independent_order, std::move(b.description)};
}

std::vector<ZooEntry> zoo_catalog() {
  return {
      {"sym:n", "symmetric group S_n on n points, n in 2..9", false},
      {"alt:n", "alternating group A_n on n points, n in 3..9", false},
      {"cyclic:n", "cyclic group acting regularly on n points, n in 1..64", false},
      {"dihedral:n", "dihedral group of order 2n on the n-gon, n in 3..64", false},
      {"psl2:q", "PSL_2(F_q) on the q+1 points of P^1(F_q), q in 2,3,4,5,7,8,9,11,13", false},
      {"pgl2:q", "PGL_2(F_q) on the q+1 points of P^1(F_q), q in 2,3,4,5,7,8,9,11,13", false},
      {"psl3:q", "PSL_3(F_q) on the points of P^2(F_q), q in 2,3,4", false},
      {"pgl3:q", "PGL_3(F_q) on the points of P^2(F_q), q in 2,3,4", false},
      {"sp4f2:+", "Sp_4(F_2) on quadratic forms of + type, point stabilizer GO_4^+", false},
      {"sp4f2:-", "Sp_4(F_2) on quadratic forms of - type, point stabilizer GO_4^-", false},
      {"sp6f2:+", "Sp_6(F_2) on quadratic forms of + type, point stabilizer GO_6^+", true},
      {"sp6f2:-", "Sp_6(F_2) on quadratic forms of - type, point stabilizer GO_6^-", true},
      {"psu3:q", "PSU_3(F_q) on the q^3+1 isotropic points, q in 2,3", false},
      {"pgu3:q", "PGU_3(F_q) on the q^3+1 isotropic points, q in 2,3", false},
  };
}

}  // namespace cmred
