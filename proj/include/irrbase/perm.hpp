// perm.hpp
// Permutations on {0, ..., n-1} as image arrays; composition is
// left-to-right: (a.then(b))[i] = b[a[i]], matching p^(gh) = (p^g)^h.
#pragma once

#include <stdexcept>
#include <vector>

namespace irrbase {

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}
  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
  }

  int degree() const { return (int)img.size(); }
  int operator[](int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  Perm then(const Perm& b) const {
    Perm c;
    c.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) c.img[i] = b.img[img[i]];
    return c;
  }

  Perm inverse() const {
    Perm c;
    c.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) c.img[img[i]] = (int)i;
    return c;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  // Validates that images form a bijection on [0, n).
  static Perm checked(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || v >= (int)images.size() || seen[v])
        throw std::invalid_argument("perm: images are not a bijection");
      seen[v] = true;
    }
    return Perm(std::move(images));
  }
};

}  // namespace irrbase
