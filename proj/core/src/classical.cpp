#include "cmred/classical.hpp"

#include <cmred/error.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace cmred::classical {

using Elem = SmallField::Elem;

Vec apply(const SmallField& F, const Matrix& A, const Vec& v) {
  Vec out(A.dim, 0);
  for (std::size_t r = 0; r < A.dim; ++r) {
    Elem s = 0;
    for (std::size_t c = 0; c < A.dim; ++c) s = F.add(s, F.mul(A.at(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

Matrix multiply(const SmallField& F, const Matrix& A, const Matrix& B) {
  Matrix C{A.dim, std::vector<Elem>(A.dim * A.dim, 0)};
  for (std::size_t r = 0; r < A.dim; ++r)
    for (std::size_t c = 0; c < A.dim; ++c) {
      Elem s = 0;
      for (std::size_t k = 0; k < A.dim; ++k) s = F.add(s, F.mul(A.at(r, k), B.at(k, c)));
      C.entries[r * A.dim + c] = s;
    }
  return C;
}

Elem determinant(const SmallField& F, const Matrix& A) {
  switch (A.dim) {
    case 1:
      return A.at(0, 0);
    case 2:
      return F.sub(F.mul(A.at(0, 0), A.at(1, 1)), F.mul(A.at(0, 1), A.at(1, 0)));
    case 3: {
      auto minor = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        return F.sub(F.mul(A.at(r0, c0), A.at(r1, c1)), F.mul(A.at(r0, c1), A.at(r1, c0)));
      };
      Elem d = F.mul(A.at(0, 0), minor(1, 2, 1, 2));
      d = F.sub(d, F.mul(A.at(0, 1), minor(1, 2, 0, 2)));
      return F.add(d, F.mul(A.at(0, 2), minor(1, 2, 0, 1)));
    }
    default:
      throw UnsupportedParameter("determinant only for dimension <= 3");
  }
}

std::vector<Matrix> all_matrices(const SmallField& F, std::size_t dim,
                                 const std::function<bool(const Matrix&)>& keep) {
  const std::size_t cells = dim * dim;
  const auto q = static_cast<Elem>(F.order());
  std::vector<Matrix> out;
  Matrix A{dim, std::vector<Elem>(cells, 0)};
  while (true) {
    if (keep(A)) out.push_back(A);
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++A.entries[i] < q) break;
      A.entries[i] = 0;
      if (i == 0) return out;
    }
    if (cells == 0) return out;
  }
}

// --- PointSet -----------------------------------------------------------------

namespace {

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

PointSet::PointSet(const SmallField& F, std::size_t dim,
                   const std::function<bool(const Vec&)>& keep)
    : F_(&F), dim_(dim) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::size_t>(F.order());

  Vec v(dim, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<Elem>(c % F.order());
      c /= F.order();
    }
    const std::size_t lead = first_nonzero(v);
    if (lead == dim || v[lead] != 1) continue;
    if (keep(v)) points_.push_back(v);
  }
  std::sort(points_.begin(), points_.end(), [](const Vec& a, const Vec& b) {
    const std::size_t la = first_nonzero(a);
    const std::size_t lb = first_nonzero(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  if (points_.size() > kMaxDegree)
    throw UnsupportedParameter("point set of size " + std::to_string(points_.size()) +
                               " exceeds the supported degree");

  lookup_.assign(total, npos);
  for (std::size_t i = 0; i < points_.size(); ++i) lookup_[encode(points_[i])] = i;
}

std::size_t PointSet::encode(const Vec& v) const {
  std::size_t c = 0;
  for (Elem x : v) c = c * F_->order() + x;
  return c;
}

Vec PointSet::normalize(const Vec& v) const {
  const std::size_t lead = first_nonzero(v);
  if (lead == v.size()) return v;
  const Elem s = F_->inv(v[lead]);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F_->mul(s, v[i]);
  return out;
}

std::size_t PointSet::index_of(const Vec& v) const {
  if (v.size() != dim_ || first_nonzero(v) == dim_) return npos;
  return lookup_[encode(normalize(v))];
}

Permutation PointSet::permutation_of(const Matrix& A) const {
  std::vector<Point> images(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const std::size_t j = index_of(apply(*F_, A, points_[i]));
    if (j == npos) throw std::logic_error("matrix does not preserve the point set");
    images[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(images));
}

PointSet projective_space(const SmallField& F, std::size_t dim) {
  return PointSet(F, dim, [](const Vec&) { return true; });
}

PermutationImage permutation_image(const PointSet& points, const std::vector<Matrix>& matrices) {
  PermutationImage out;
  std::set<Permutation> seen;
  for (const Matrix& A : matrices) {
    Permutation p = points.permutation_of(A);
    if (p.is_identity()) ++out.kernel_size;
    seen.insert(std::move(p));
  }
  out.matrix_count = matrices.size();
  out.distinct.assign(seen.begin(), seen.end());
  return out;
}

// --- unitary -------------------------------------------------------------------

Elem hermitian(const SmallField& F, int q, const Vec& u, const Vec& v) {
  const auto e = static_cast<std::uint64_t>(q);
  Elem s = F.mul(u[0], F.pow(v[2], e));
  s = F.add(s, F.mul(u[1], F.pow(v[1], e)));
  return F.add(s, F.mul(u[2], F.pow(v[0], e)));
}

std::vector<Matrix> unitary_group(const SmallField& F, int q) {
  if (F.order() != q * q) throw UnsupportedParameter("field must have order q^2");
  const std::size_t Q = static_cast<std::size_t>(F.order());
  std::vector<Vec> vectors;
  for (std::size_t code = 0; code < Q * Q * Q; ++code)
    vectors.push_back({static_cast<Elem>(code / (Q * Q)), static_cast<Elem>((code / Q) % Q),
                       static_cast<Elem>(code % Q)});

  // Gram matrix of the standard basis: phi(e_a, e_b) = 1 iff a + b = 2.
  auto gram = [](std::size_t a, std::size_t b) -> Elem { return a + b == 2 ? 1 : 0; };

  std::vector<Matrix> out;
  std::vector<const Vec*> cols(3);
  auto recurse = [&](auto&& self, std::size_t a) -> void {
    if (a == 3) {
      Matrix M{3, std::vector<Elem>(9)};
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t r = 0; r < 3; ++r) M.entries[r * 3 + c] = (*cols[c])[r];
      out.push_back(std::move(M));
      return;
    }
    for (const Vec& v : vectors) {
      bool ok = hermitian(F, q, v, v) == gram(a, a);
      for (std::size_t b = 0; ok && b < a; ++b) {
        ok = hermitian(F, q, v, *cols[b]) == gram(a, b) && hermitian(F, q, *cols[b], v) == gram(b, a);
      }
      if (!ok) continue;
      cols[a] = &v;
      self(self, a + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet isotropic_points(const SmallField& F, int q) {
  return PointSet(F, 3, [&F, q](const Vec& v) { return hermitian(F, q, v, v) == 0; });
}

// --- symplectic over F_2 ------------------------------------------------------------

namespace {

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

}  // namespace

SymplecticSpace::SymplecticSpace(int m) : m_(m) {
  if (m != 2 && m != 3) throw UnsupportedParameter("symplectic rank must be 2 or 3");
}

int SymplecticSpace::psi(BitVec u, BitVec v) const {
  const BitVec lo = (BitVec{1} << m_) - 1;
  // Over F_2 the minus sign is a plus.
  return parity((u & lo) & (v >> m_)) ^ parity((u >> m_) & (v & lo));
}

int SymplecticSpace::q_plus(BitVec v) const {
  const BitVec lo = (BitVec{1} << m_) - 1;
  return parity((v & lo) & (v >> m_));
}

int SymplecticSpace::q_minus(BitVec v) const {
  return q_plus(v) ^ static_cast<int>((v >> (m_ - 1)) & 1) ^
         static_cast<int>((v >> (2 * m_ - 1)) & 1);
}

FormTable SymplecticSpace::table_of(const std::function<int(BitVec)>& q) const {
  FormTable t = 0;
  for (BitVec v = 0; v < vector_count(); ++v)
    if (q(v) & 1) t |= FormTable{1} << v;
  return t;
}

BitVec SymplecticSpace::apply(const BitMatrix& x, BitVec v) const {
  BitVec out = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    if ((v >> i) & 1) out ^= x[i];
  return out;
}

BitMatrix SymplecticSpace::multiply(const BitMatrix& a, const BitMatrix& b) const {
  BitMatrix c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = apply(a, b[i]);
  return c;
}

BitMatrix SymplecticSpace::identity() const {
  BitMatrix x(dim());
  for (std::size_t i = 0; i < dim(); ++i) x[i] = BitVec{1} << i;
  return x;
}

bool SymplecticSpace::is_symplectic(const BitMatrix& x) const {
  const std::size_t d = dim();
  const std::size_t m = static_cast<std::size_t>(m_);
  using Dense = std::vector<std::vector<int>>;
  Dense X(d, std::vector<int>(d)), J(d, std::vector<int>(d, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) X[r][c] = static_cast<int>((x[c] >> r) & 1);
  for (std::size_t i = 0; i < m; ++i) {
    J[i][m + i] = 1;
    J[m + i][i] = -1;
  }
  auto mul = [d](const Dense& A, const Dense& B) {
    Dense C(d, std::vector<int>(d, 0));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k) C[r][c] += A[r][k] * B[k][c];
    return C;
  };
  Dense Xt(d, std::vector<int>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) Xt[r][c] = X[c][r];
  const Dense P = mul(mul(Xt, J), X);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (((P[r][c] - J[r][c]) % 2) != 0) return false;
  return true;
}

bool SymplecticSpace::preserves(const BitMatrix& x, FormTable q) const {
  for (BitVec v = 0; v < vector_count(); ++v)
    if (((q >> apply(x, v)) & 1) != ((q >> v) & 1)) return false;
  return true;
}

bool SymplecticSpace::polarizes_to_psi(FormTable q) const {
  auto Q = [q](BitVec v) { return static_cast<int>((q >> v) & 1); };
  for (BitVec u = 0; u < vector_count(); ++u)
    for (BitVec v = 0; v < vector_count(); ++v)
      if ((Q(u ^ v) ^ Q(u) ^ Q(v)) != psi(u, v)) return false;
  return true;
}

FormTable SymplecticSpace::act(const BitMatrix& x, FormTable q) const {
  // (x.Q)(xv) = Q(v)
  FormTable out = 0;
  for (BitVec v = 0; v < vector_count(); ++v)
    if ((q >> v) & 1) out |= FormTable{1} << apply(x, v);
  return out;
}

std::vector<BitMatrix> SymplecticSpace::transvections() const {
  std::vector<BitMatrix> out;
  for (BitVec a = 1; a < vector_count(); ++a) {
    BitMatrix t(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      const BitVec e = BitVec{1} << i;
      t[i] = psi(e, a) ? (e ^ a) : e;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<FormTable> SymplecticSpace::polarizing_forms() const {
  std::vector<FormTable> out;
  for (BitVec a = 0; a < vector_count(); ++a) {
    const FormTable t = table_of([&](BitVec v) { return q_plus(v) ^ parity(a & v); });
    if (!polarizes_to_psi(t)) throw std::logic_error("Q+ plus a linear form fails to polarize");
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t SymplecticSpace::count_symplectic() const {
  const std::size_t d = dim();
  std::vector<BitVec> cols(d);
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, std::size_t a) -> void {
    if (a == d) {
      ++count;
      return;
    }
    const BitVec ea = BitVec{1} << a;
    for (BitVec v = 1; v < vector_count(); ++v) {
      bool ok = true;
      for (std::size_t b = 0; ok && b < a; ++b) ok = psi(v, cols[b]) == psi(ea, BitVec{1} << b);
      if (!ok) continue;
      cols[a] = v;
      self(self, a + 1);
    }
  };
  recurse(recurse, 0);
  return count;
}

std::vector<FormTable> SymplecticSpace::form_orbit(FormTable q,
                                                   const std::vector<BitMatrix>& gens) const {
  std::set<FormTable> seen{q};
  std::deque<FormTable> queue{q};
  while (!queue.empty()) {
    const FormTable cur = queue.front();
    queue.pop_front();
    for (const BitMatrix& g : gens) {
      const FormTable next = act(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<FormTable> out{q};
  for (FormTable t : seen)
    if (t != q) out.push_back(t);
  return out;
}

Permutation SymplecticSpace::permutation_of(const BitMatrix& x,
                                            const std::vector<FormTable>& points) const {
  std::vector<Point> images(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto it = std::find(points.begin(), points.end(), act(x, points[i]));
    if (it == points.end()) throw std::logic_error("matrix does not preserve the form orbit");
    images[i] = static_cast<Point>(it - points.begin());
  }
  return Permutation(std::move(images));
}

std::vector<BitMatrix> SymplecticSpace::matrix_closure(const std::vector<BitMatrix>& gens) const {
  std::set<BitMatrix> seen{identity()};
  std::deque<BitMatrix> queue{identity()};
  while (!queue.empty()) {
    const BitMatrix cur = queue.front();
    queue.pop_front();
    for (const BitMatrix& g : gens) {
      BitMatrix next = multiply(g, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cmred::classical
