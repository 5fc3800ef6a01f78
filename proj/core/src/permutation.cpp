#include "cmred/permutation.hpp"

#include <cmred/error.hpp>

#include <sstream>

namespace cmred {

namespace {

void check_bijection(std::span<const Point> images) {
  if (images.size() > kMaxDegree) {
    throw InvalidPermutation("permutation degree " + std::to_string(images.size()) +
                             " exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw InvalidPermutation("image array is not a bijection");
    }
    seen[p] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation Permutation::from_images(std::span<const int> images) {
  if (images.size() > kMaxDegree) {
    throw InvalidPermutation("permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<Point> pts;
  pts.reserve(images.size());
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size()) {
      throw InvalidPermutation("image " + std::to_string(v) + " out of range");
    }
    pts.push_back(static_cast<Point>(v));
  }
  return Permutation(std::move(pts));
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> pts(degree);
  for (std::size_t i = 0; i < degree; ++i) pts[i] = static_cast<Point>(i);
  return Permutation(std::move(pts));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<int>(i);
  for (const auto& cycle : cycles) {
    std::vector<int> c(cycle);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || static_cast<std::size_t>(c[k]) >= degree) {
        throw InvalidPermutation("cycle point out of range");
      }
      img[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return from_images(img);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidPermutation("degree mismatch in product");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(images_[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace cmred
