#include "cmred/small_field.hpp"

#include <cmred/error.hpp>

#include <stdexcept>
#include <string>

namespace cmred {

namespace {

struct FieldShape {
  int p;
  int d;
  std::vector<int> modulus;  // monic, low degree first, length d + 1
};

FieldShape shape_of(int q) {
  switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13:
      return {q, 1, {0, 1}};
    case 4:
      return {2, 2, {1, 1, 1}};
    case 8:
      return {2, 3, {1, 1, 0, 1}};
    case 9:
      return {3, 2, {1, 0, 1}};
    default:
      throw UnsupportedParameter("field order " + std::to_string(q) + " is not supported");
  }
}

}  // namespace

bool SmallField::supported(int q) {
  switch (q) {
    case 2: case 3: case 4: case 5: case 7: case 8: case 9: case 11: case 13:
      return true;
    default:
      return false;
  }
}

SmallField::SmallField(int q) : q_(q) {
  const FieldShape shape = shape_of(q);
  p_ = shape.p;
  const int d = shape.d;

  auto digits = [&](int a) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int a = 0;
    for (int i = d - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const auto ca = digits(a);
    for (int b = 0; b < q; ++b) {
      const auto cb = digits(b);
      std::vector<int> s(d);
      for (int i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = static_cast<Elem>(encode(s));

      std::vector<int> prod(2 * d - 1, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      // Reduce modulo the monic modulus, highest degree first.
      for (int k = 2 * d - 2; k >= d; --k) {
        const int lead = prod[k];
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i) {
          prod[k - d + i] = ((prod[k - d + i] - lead * shape.modulus[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(d);
      mul_[a * q + b] = static_cast<Elem>(encode(prod));
    }
  }

  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
  verify_axioms();
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

SmallField::Elem SmallField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void SmallField::verify_axioms() const {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("F_") + std::to_string(q_) + " violates " + what);
  };
  for (int a = 0; a < q_; ++a) {
    const auto x = static_cast<Elem>(a);
    if (add(x, 0) != x || mul(x, 1) != x) fail("identities");
    if (add(x, neg(x)) != 0) fail("additive inverses");
    if (a != 0 && mul(x, inv_[a]) != 1) fail("multiplicative inverses");
    for (int b = 0; b < q_; ++b) {
      const auto y = static_cast<Elem>(b);
      if (add(x, y) != add(y, x) || mul(x, y) != mul(y, x)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        const auto z = static_cast<Elem>(c);
        if (add(add(x, y), z) != add(x, add(y, z))) fail("additive associativity");
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail("multiplicative associativity");
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) fail("distributivity");
      }
    }
  }
}

}  // namespace cmred
