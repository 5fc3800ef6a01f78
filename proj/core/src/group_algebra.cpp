#include "cmred/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmred {

GammaElement gamma_multiply(const FiniteGroup& G, GammaElement x, GammaElement y) {
  return {G.multiply(x.g, y.g), static_cast<std::uint8_t>(x.b ^ y.b)};
}

GammaElement gamma_inverse(const FiniteGroup& G, GammaElement x) {
  return {G.inverse(x.g), x.b};
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(std::size_t group_order) : order_(group_order) {
  if (gamma_order() <= kDenseGammaCap) dense_.assign(gamma_order(), Rational(0));
}

Rational AlgebraElement::coefficient(GammaElement x) const {
  const std::size_t i = gamma_index(x);
  if (is_dense()) return dense_.at(i);
  auto it = sparse_.find(i);
  return it == sparse_.end() ? Rational(0) : it->second;
}

void AlgebraElement::set(GammaElement x, Rational value) {
  const std::size_t i = gamma_index(x);
  if (i >= gamma_order()) throw std::out_of_range("gamma element outside G x Z/2");
  if (is_dense()) {
    dense_[i] = std::move(value);
  } else if (value.is_zero()) {
    sparse_.erase(i);
  } else {
    sparse_[i] = std::move(value);
  }
}

void AlgebraElement::add(GammaElement x, const Rational& value) {
  set(x, coefficient(x) + value);
}

std::size_t AlgebraElement::support_size() const {
  std::size_t n = 0;
  for_each([&](GammaElement, const Rational&) { ++n; });
  return n;
}

Rational AlgebraElement::mass() const {
  Rational m(0);
  for_each([&](GammaElement, const Rational& v) { m += v; });
  return m;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.order_ != order_) throw std::invalid_argument("group order mismatch");
  o.for_each([&](GammaElement x, const Rational& v) { add(x, v); });
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.order_ != order_) throw std::invalid_argument("group order mismatch");
  o.for_each([&](GammaElement x, const Rational& v) { add(x, -v); });
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (is_dense()) {
    for (auto& v : dense_) v *= c;
  } else if (c.is_zero()) {
    sparse_.clear();
  } else {
    for (auto& [i, v] : sparse_) v *= c;
  }
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.order_ != b.order_) return false;
  bool equal = true;
  a.for_each([&](GammaElement x, const Rational& v) {
    if (equal && b.coefficient(x) != v) equal = false;
  });
  b.for_each([&](GammaElement x, const Rational& v) {
    if (equal && a.coefficient(x) != v) equal = false;
  });
  return equal;
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

struct ScaledSupport {
  std::vector<GammaElement> at;
  std::vector<mpz_class> value;  // coefficient * common_den
  mpz_class common_den = 1;
  mpz_class max_abs = 0;
};

ScaledSupport scale(const AlgebraElement& a) {
  ScaledSupport s;
  a.for_each([&](GammaElement x, const Rational& v) {
    s.at.push_back(x);
    mpz_lcm(s.common_den.get_mpz_t(), s.common_den.get_mpz_t(), v.raw().get_den_mpz_t());
  });
  a.for_each([&](GammaElement, const Rational& v) {
    mpz_class q = v.numerator() * (s.common_den / v.denominator());
    mpz_class m = abs(q);
    if (m > s.max_abs) s.max_abs = m;
    s.value.push_back(std::move(q));
  });
  return s;
}

std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

mpz_class from_int128(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b, const FiniteGroup& G) {
  if (a.group_order() != G.order() || b.group_order() != G.order()) {
    throw std::invalid_argument("convolution operands do not live on this group");
  }
  const ScaledSupport sa = scale(a);
  const ScaledSupport sb = scale(b);
  const std::size_t terms = std::min(sa.at.size(), sb.at.size());
  const mpz_class den = sa.common_den * sb.common_den;
  AlgebraElement out(G.order());
  if (terms == 0) return out;

  const bool small = sa.max_abs.fits_slong_p() && sb.max_abs.fits_slong_p() &&
                     bit_length(sa.max_abs) + bit_length(sb.max_abs) +
                             bit_length(mpz_class(static_cast<unsigned long>(terms))) <= 125;
  std::vector<Point> scratch;
  if (small) {
    std::vector<i128> acc(out.gamma_order(), 0);
    std::vector<long> vb(sb.value.size());
    for (std::size_t j = 0; j < vb.size(); ++j) vb[j] = sb.value[j].get_si();
    for (std::size_t i = 0; i < sa.at.size(); ++i) {
      const GammaElement y = sa.at[i];
      const i128 va = sa.value[i].get_si();
      for (std::size_t j = 0; j < sb.at.size(); ++j) {
        const GammaElement z = sb.at[j];
        const std::size_t x = 2 * static_cast<std::size_t>(G.multiply(y.g, z.g, scratch)) + (y.b ^ z.b);
        acc[x] += va * vb[j];
      }
    }
    for (std::size_t x = 0; x < acc.size(); ++x) {
      if (acc[x] != 0) out.set(gamma_from_index(x), Rational(from_int128(acc[x]), den));
    }
  } else {
    std::vector<mpz_class> acc(out.gamma_order(), 0);
    for (std::size_t i = 0; i < sa.at.size(); ++i) {
      const GammaElement y = sa.at[i];
      for (std::size_t j = 0; j < sb.at.size(); ++j) {
        const GammaElement z = sb.at[j];
        const std::size_t x = 2 * static_cast<std::size_t>(G.multiply(y.g, z.g, scratch)) + (y.b ^ z.b);
        acc[x] += sa.value[i] * sb.value[j];
      }
    }
    for (std::size_t x = 0; x < acc.size(); ++x) {
      if (acc[x] != 0) out.set(gamma_from_index(x), Rational(acc[x], den));
    }
  }
  return out;
}

AlgebraElement reflex(const AlgebraElement& a, const FiniteGroup& G) {
  AlgebraElement out(a.group_order());
  a.for_each([&](GammaElement x, const Rational& v) { out.set(gamma_inverse(G, x), v); });
  return out;
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyPartition> classes)
    : classes_(std::move(classes)), values_(2 * classes_->count(), Rational(0)) {}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (o.values_.size() != values_.size()) throw std::invalid_argument("class count mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (o.values_.size() != values_.size()) throw std::invalid_argument("class count mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

ClassFunction class_project(const AlgebraElement& a,
                            std::shared_ptr<const ConjugacyPartition> classes) {
  if (classes->class_of.size() != a.group_order()) {
    throw std::invalid_argument("conjugacy partition does not match the group");
  }
  ClassFunction f(classes);
  std::vector<Rational> sums(2 * classes->count(), Rational(0));
  a.for_each([&](GammaElement x, const Rational& v) {
    sums[2 * classes->class_of[x.g] + x.b] += v;
  });
  for (std::size_t c = 0; c < classes->count(); ++c) {
    const Rational size(static_cast<long>(classes->class_sizes[c]));
    for (int b = 0; b < 2; ++b) f.set(c, b, sums[2 * c + b] / size);
  }
  return f;
}

AlgebraElement to_algebra(const ClassFunction& f) {
  const auto& P = f.classes();
  AlgebraElement out(P.class_of.size());
  for (ElementId g = 0; g < P.class_of.size(); ++g) {
    for (std::uint8_t b = 0; b < 2; ++b) {
      const Rational& v = f.value(P.class_of[g], b);
      if (!v.is_zero()) out.set({g, b}, v);
    }
  }
  return out;
}

}  // namespace cmred
