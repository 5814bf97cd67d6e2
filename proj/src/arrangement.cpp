#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hyparr/combinatorics.hpp"

namespace hyparr {

namespace {

RationalVector augmented(const Hyperplane& h) {
  RationalVector v = h.normal;
  v.push_back(-h.offset);
  return v;
}

// Orientation-free key of the point set of h.
RationalVector geometric_key(const Hyperplane& h) {
  RationalVector p = primitive_form(augmented(h));
  auto first = std::find_if(p.begin(), p.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (first != p.end() && sgn(*first) < 0) {
    for (auto& x : p) x = -x;
  }
  return p;
}

struct VectorLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes,
                         ArrangementKind kind)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), kind_(kind) {
  if (dim_ == 0) throw std::invalid_argument("arrangement dimension must be at least 1");
  std::map<RationalVector, std::size_t, VectorLess> seen;
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    auto& h = hyperplanes_[i];
    if (h.normal.size() != dim_) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has normal of length " +
                                  std::to_string(h.normal.size()) + ", expected " +
                                  std::to_string(dim_));
    }
    if (is_zero_vector(h.normal)) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has zero normal");
    }
    if (kind_ == ArrangementKind::central && sgn(h.offset) != 0) {
      throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                  " has nonzero offset in a central arrangement");
    }
    for (auto& x : h.normal) x.canonicalize();
    h.offset.canonicalize();
    auto [it, inserted] = seen.emplace(geometric_key(h), i);
    if (!inserted) {
      throw std::invalid_argument("hyperplanes " + std::to_string(it->second) + " and " +
                                  std::to_string(i) + " coincide");
    }
  }
}

Arrangement Arrangement::central(std::size_t dim, const RationalMatrix& normals) {
  std::vector<Hyperplane> hs;
  hs.reserve(normals.size());
  for (const auto& n : normals) hs.push_back({n, 0});
  return Arrangement(dim, std::move(hs), ArrangementKind::central);
}

// ---------------------------------------------------------------------------
// SignVector
// ---------------------------------------------------------------------------

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +1 or -1");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
      signs.push_back(-1);
      i += 2;
    } else {
      throw std::invalid_argument("bad sign character in '" + std::string(text) + "'");
    }
  }
  return SignVector(std::move(signs));
}

SignVector SignVector::constant(std::size_t n, int sign) {
  return SignVector(std::vector<std::int8_t>(n, static_cast<std::int8_t>(sign > 0 ? 1 : -1)));
}

std::size_t SignVector::plus_count() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), 1));
}

SignVector SignVector::flipped(std::size_t i) const {
  SignVector out = *this;
  out.signs_.at(i) = static_cast<std::int8_t>(-out.signs_[i]);
  return out;
}

SignVector SignVector::negated() const {
  SignVector out = *this;
  for (auto& s : out.signs_) s = static_cast<std::int8_t>(-s);
  return out;
}

SignVector SignVector::without(std::size_t i) const {
  SignVector out = *this;
  out.signs_.erase(out.signs_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::size_t SignVector::hamming_distance(const SignVector& other) const {
  if (size() != other.size()) throw std::invalid_argument("sign vectors differ in length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < size(); ++i) d += signs_[i] != other.signs_[i];
  return d;
}

std::string SignVector::str() const {
  std::string s;
  s.reserve(signs_.size());
  for (auto x : signs_) s.push_back(x > 0 ? '+' : '-');
  return s;
}

bool SignVector::operator<(const SignVector& other) const {
  // +1 sorts first, so compare the negated entries.
  return std::lexicographical_compare(
      signs_.begin(), signs_.end(), other.signs_.begin(), other.signs_.end(),
      [](std::int8_t a, std::int8_t b) { return a > b; });
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Arrangement deletion(const Arrangement& arr, std::size_t index) {
  if (index >= arr.size()) throw std::out_of_range("deletion: hyperplane index out of range");
  auto hs = arr.hyperplanes();
  hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(index));
  return Arrangement(arr.dim(), std::move(hs), arr.kind());
}

Restriction restrict_to(const Arrangement& arr, std::size_t index) {
  if (index >= arr.size()) throw std::out_of_range("restriction: hyperplane index out of range");
  if (arr.dim() < 2) throw std::invalid_argument("restriction needs dimension at least 2");
  const std::size_t d = arr.dim();
  const Hyperplane& h = arr[index];

  std::size_t pivot = 0;
  while (sgn(h.normal[pivot]) == 0) ++pivot;

  // Points of h are base + sum_k z_k dirs[k].
  RationalVector base(d, 0);
  base[pivot] = h.offset / h.normal[pivot];
  RationalMatrix dirs;
  for (std::size_t k = 0; k < d; ++k) {
    if (k == pivot) continue;
    RationalVector v(d, 0);
    v[k] = 1;
    v[pivot] = -h.normal[k] / h.normal[pivot];
    dirs.push_back(std::move(v));
  }

  std::vector<Hyperplane> images;
  std::vector<std::optional<std::size_t>> image_of(arr.size());
  std::map<RationalVector, std::size_t, VectorLess> merged;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == index) continue;
    const Hyperplane& g = arr[j];
    Hyperplane img;
    img.normal.reserve(d - 1);
    for (const auto& v : dirs) img.normal.push_back(dot(g.normal, v));
    if (is_zero_vector(img.normal)) continue;  // parallel: empty intersection
    img.offset = g.offset - dot(g.normal, base);
    auto [it, inserted] = merged.emplace(geometric_key(img), images.size());
    if (inserted) images.push_back(std::move(img));
    image_of[j] = it->second;
  }
  return {Arrangement(d - 1, std::move(images), arr.kind()), std::move(image_of)};
}

Arrangement homogenize(const Arrangement& arr) {
  std::vector<Hyperplane> hs;
  hs.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) {
    Hyperplane c{h.normal, 0};
    c.normal.push_back(-h.offset);
    hs.push_back(std::move(c));
  }
  return Arrangement(arr.dim() + 1, std::move(hs), ArrangementKind::central);
}

Arrangement dehomogenize(const Arrangement& arr) {
  if (arr.dim() < 2) throw std::invalid_argument("dehomogenize needs dimension at least 2");
  std::vector<Hyperplane> hs;
  hs.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& h = arr[i];
    Hyperplane a{RationalVector(h.normal.begin(), h.normal.end() - 1), 0};
    if (is_zero_vector(a.normal)) {
      throw std::invalid_argument("dehomogenize: hyperplane " + std::to_string(i) +
                                  " is parallel to the slice x_d = 1");
    }
    a.offset = h.offset - h.normal.back();
    hs.push_back(std::move(a));
  }
  return Arrangement(arr.dim() - 1, std::move(hs), ArrangementKind::affine);
}

Arrangement direction_arrangement(const Arrangement& arr) {
  std::vector<Hyperplane> hs;
  hs.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) hs.push_back({h.normal, 0});
  return Arrangement(arr.dim(), std::move(hs), ArrangementKind::central);
}

bool is_centrally_simple(const Arrangement& arr) {
  const std::size_t k = std::min(arr.size(), arr.dim());
  bool ok = true;
  for_each_subset(arr.size(), k, [&](const std::vector<std::size_t>& subset) {
    RationalMatrix rows;
    for (auto i : subset) rows.push_back(arr[i].normal);
    if (rank_of(std::move(rows)) != k) ok = false;
    return ok;
  });
  return ok;
}

bool is_simple(const Arrangement& arr) {
  if (!is_centrally_simple(arr)) return false;
  bool ok = true;
  for_each_subset(arr.size(), arr.dim() + 1, [&](const std::vector<std::size_t>& subset) {
    RationalMatrix rows;
    for (auto i : subset) rows.push_back(augmented(arr[i]));
    if (rank_of(std::move(rows)) != arr.dim() + 1) ok = false;
    return ok;
  });
  return ok;
}

std::vector<IntersectionPoint> intersection_points(const Arrangement& arr) {
  if (arr.dim() != 2) throw std::invalid_argument("intersection_points needs a planar arrangement");
  std::map<RationalVector, std::set<std::size_t>, VectorLess> points;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const auto& a = arr[i];
      const auto& b = arr[j];
      Rational det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (sgn(det) == 0) continue;
      RationalVector p{(a.offset * b.normal[1] - a.normal[1] * b.offset) / det,
                       (a.normal[0] * b.offset - a.offset * b.normal[0]) / det};
      auto& lines = points[p];
      lines.insert(i);
      lines.insert(j);
    }
  }
  std::vector<IntersectionPoint> out;
  out.reserve(points.size());
  for (auto& [p, lines] : points) {
    out.push_back({p, lines.size(), std::vector<std::size_t>(lines.begin(), lines.end())});
  }
  return out;
}

}  // namespace hyparr
