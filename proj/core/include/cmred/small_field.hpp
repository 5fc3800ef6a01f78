#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cmred {

/// Finite field F_q for q in {2, 3, 4, 5, 7, 8, 9, 11, 13}, by table lookup.
///
/// Elements are 0..q-1 with 0 and 1 the additive and multiplicative
/// identities. For q = p^d with d > 1 element a stands for the polynomial
/// sum_i digit_i(a) x^i (base-p digits) modulo a fixed irreducible:
/// x^2+x+1 for F_4, x^3+x+1 for F_8, x^2+1 for F_9.
///
/// The constructor checks the field axioms exhaustively.
class SmallField {
 public:
  using Elem = std::uint8_t;

  /// Throws UnsupportedParameter for other q.
  explicit SmallField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  static bool supported(int q);

 private:
  void verify_axioms() const;

  int q_;
  int p_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

}  // namespace cmred
