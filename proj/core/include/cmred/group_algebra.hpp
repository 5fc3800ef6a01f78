#pragma once

#include <cmred/conjugacy.hpp>
#include <cmred/finite_group.hpp>
#include <cmred/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace cmred {

/// Element (g, b) of G x Z/2; b = 1 is the rho component.
struct GammaElement {
  ElementId g = 0;
  std::uint8_t b = 0;

  auto operator<=>(const GammaElement&) const = default;
};

inline std::size_t gamma_index(GammaElement x) { return 2 * static_cast<std::size_t>(x.g) + x.b; }
inline GammaElement gamma_from_index(std::size_t i) {
  return {static_cast<ElementId>(i / 2), static_cast<std::uint8_t>(i % 2)};
}

GammaElement gamma_multiply(const FiniteGroup& G, GammaElement x, GammaElement y);
GammaElement gamma_inverse(const FiniteGroup& G, GammaElement x);

/// Largest |G x Z/2| stored densely.
inline constexpr std::size_t kDenseGammaCap = 8192;

/// Finitely supported Q-valued function on G x Z/2 (an element of the group
/// algebra). Dense when |G x Z/2| <= kDenseGammaCap, a sorted map otherwise.
class AlgebraElement {
 public:
  explicit AlgebraElement(std::size_t group_order);

  std::size_t group_order() const { return order_; }
  std::size_t gamma_order() const { return 2 * order_; }
  bool is_dense() const { return !dense_.empty(); }

  Rational coefficient(GammaElement x) const;
  void set(GammaElement x, Rational value);
  void add(GammaElement x, const Rational& value);

  /// Calls f(GammaElement, const Rational&) on nonzero entries in index order.
  template <class F>
  void for_each(F&& f) const {
    if (is_dense()) {
      for (std::size_t i = 0; i < dense_.size(); ++i)
        if (!dense_[i].is_zero()) f(gamma_from_index(i), dense_[i]);
    } else {
      for (const auto& [i, v] : sparse_) f(gamma_from_index(i), v);
    }
  }

  std::size_t support_size() const;
  Rational mass() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  std::size_t order_;
  std::vector<Rational> dense_;
  std::map<std::uint64_t, Rational> sparse_;
};

/// (a * b)(x) = sum_y a(y) b(y^-1 x).
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b, const FiniteGroup& G);

/// x -> coefficient of x^-1.
AlgebraElement reflex(const AlgebraElement& a, const FiniteGroup& G);

/// Rational-valued function on G x Z/2 constant on the classes (C, b).
class ClassFunction {
 public:
  explicit ClassFunction(std::shared_ptr<const ConjugacyPartition> classes);

  const ConjugacyPartition& classes() const { return *classes_; }
  std::shared_ptr<const ConjugacyPartition> shared_classes() const { return classes_; }
  std::size_t class_count() const { return classes_->count(); }

  const Rational& value(std::size_t cls, int bit) const { return values_[2 * cls + bit]; }
  void set(std::size_t cls, int bit, Rational v) { values_[2 * cls + bit] = std::move(v); }
  Rational evaluate(GammaElement x) const { return value(classes_->class_of[x.g], x.b); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }

  bool is_zero() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const ConjugacyPartition> classes_;
  std::vector<Rational> values_;
};

/// Average of `a` over conjugation: value on (C, b) is the mean of a(y, b)
/// over y in C.
ClassFunction class_project(const AlgebraElement& a,
                            std::shared_ptr<const ConjugacyPartition> classes);

/// Embeds a class function back into the group algebra.
AlgebraElement to_algebra(const ClassFunction& f);

}  // namespace cmred
