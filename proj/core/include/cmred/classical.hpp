#pragma once

#include <cmred/finite_group.hpp>
#include <cmred/permutation.hpp>
#include <cmred/small_field.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cmred::classical {

using Vec = std::vector<SmallField::Elem>;

/// Square matrix over a SmallField, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<SmallField::Elem> entries;

  SmallField::Elem at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

Vec apply(const SmallField& F, const Matrix& A, const Vec& v);
Matrix multiply(const SmallField& F, const Matrix& A, const Matrix& B);
SmallField::Elem determinant(const SmallField& F, const Matrix& A);  // dim <= 3

/// Every dim x dim matrix satisfying `keep`, in lexicographic order of entries.
std::vector<Matrix> all_matrices(const SmallField& F, std::size_t dim,
                                 const std::function<bool(const Matrix&)>& keep);

/// A set of projective points: nonzero vectors normalized so that the first
/// nonzero coordinate is 1, ordered by the position of that coordinate and
/// then lexicographically. [1:0:...:0] comes first.
class PointSet {
 public:
  PointSet(const SmallField& F, std::size_t dim, const std::function<bool(const Vec&)>& keep);

  const SmallField& field() const { return *F_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }

  Vec normalize(const Vec& v) const;
  /// Index of the point spanned by v, or npos if v is zero or outside the set.
  std::size_t index_of(const Vec& v) const;

  /// Permutation of the points induced by A; throws if A does not preserve
  /// the set.
  Permutation permutation_of(const Matrix& A) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t encode(const Vec& v) const;

  const SmallField* F_;
  std::size_t dim_;
  std::vector<Vec> points_;
  std::vector<std::size_t> lookup_;  // encoded normalized vector -> index
};

/// All of P^{dim-1}(F_q).
PointSet projective_space(const SmallField& F, std::size_t dim);

/// A matrix group mapped into the symmetric group of a point set.
struct PermutationImage {
  std::vector<Permutation> distinct;  // sorted
  std::uint64_t matrix_count = 0;
  std::uint64_t kernel_size = 0;      // matrices acting trivially
};

PermutationImage permutation_image(const PointSet& points, const std::vector<Matrix>& matrices);

// --- unitary ---------------------------------------------------------------

/// phi(u, v) = u1 v3^q + u2 v2^q + u3 v1^q on F_{q^2}^3, F of order q^2.
SmallField::Elem hermitian(const SmallField& F, int q, const Vec& u, const Vec& v);

/// GU_3(q): matrices whose columns c_a satisfy phi(c_a, c_b) = phi(e_a, e_b),
/// enumerated column by column. `F` has order q^2.
std::vector<Matrix> unitary_group(const SmallField& F, int q);

/// Isotropic 1-dimensional subspaces, phi(v, v) = 0.
PointSet isotropic_points(const SmallField& F, int q);

// --- symplectic over F_2 -----------------------------------------------------

/// Vectors of F_2^{2m} are bit masks, coordinate v_{i+1} in bit i.
/// Matrices are lists of 2m column masks.
using BitVec = std::uint32_t;
using BitMatrix = std::vector<BitVec>;

/// Quadratic form on F_2^{2m} as its value table (bit v = Q(v)); m <= 3.
using FormTable = std::uint64_t;

class SymplecticSpace {
 public:
  /// Throws UnsupportedParameter unless m is 2 or 3.
  explicit SymplecticSpace(int m);

  int m() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * m_); }
  std::size_t vector_count() const { return std::size_t{1} << dim(); }

  /// psi(u, v) = u_1 . v_2 - u_2 . v_1 with u = (u_1, u_2) split in halves.
  int psi(BitVec u, BitVec v) const;
  /// Q+(v) = v_1 v_{m+1} + ... + v_m v_{2m}
  int q_plus(BitVec v) const;
  /// Q-(v) = Q+(v) + v_m + v_{2m}
  int q_minus(BitVec v) const;
  FormTable table_of(const std::function<int(BitVec)>& q) const;

  BitVec apply(const BitMatrix& x, BitVec v) const;
  BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) const;
  BitMatrix identity() const;
  /// x^T J x == J with J = [[0, 1], [-1, 0]], by explicit matrix products.
  bool is_symplectic(const BitMatrix& x) const;
  bool preserves(const BitMatrix& x, FormTable q) const;  // Q(xv) == Q(v) for all v

  /// The symmetric bilinear form f(u,v) = q(u+v) - q(u) - q(v) equals psi.
  bool polarizes_to_psi(FormTable q) const;

  /// (x . Q)(v) = Q(x^-1 v)
  FormTable act(const BitMatrix& x, FormTable q) const;

  /// v -> v + psi(v, a) a for every nonzero a.
  std::vector<BitMatrix> transvections() const;

  /// The 2^{2m} forms Q+ + l with l linear, each checked to polarize to psi.
  std::vector<FormTable> polarizing_forms() const;

  /// Number of symplectic matrices, by backtracking over the images of the
  /// standard basis.
  std::uint64_t count_symplectic() const;

  /// Orbit of `q` under the group generated by `gens`, q first, the rest
  /// in increasing table order.
  std::vector<FormTable> form_orbit(FormTable q, const std::vector<BitMatrix>& gens) const;

  Permutation permutation_of(const BitMatrix& x, const std::vector<FormTable>& points) const;

  /// Every product of `gens`, as matrices. Meant for small groups in tests.
  std::vector<BitMatrix> matrix_closure(const std::vector<BitMatrix>& gens) const;

 private:
  int m_;
};

}  // namespace cmred::classical
