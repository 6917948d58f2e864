#include "galcomp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "galcomp/error.hpp"

namespace galcomp {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidInput("permutation images are not a bijection on [0, " +
                         std::to_string(images_.size()) + ")");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view cycles) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && (std::isspace(static_cast<unsigned char>(cycles[pos])) != 0)) ++pos;
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw InvalidInput("cycle notation: expected '(' in \"" + std::string(cycles) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos < cycles.size() && cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= cycles.size()) throw InvalidInput("cycle notation: unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(cycles[pos])) == 0) {
        throw InvalidInput("cycle notation: unexpected character in \"" + std::string(cycles) + "\"");
      }
      std::size_t value = 0;
      while (pos < cycles.size() && (std::isdigit(static_cast<unsigned char>(cycles[pos])) != 0)) {
        value = value * 10 + static_cast<std::size_t>(cycles[pos] - '0');
        if (value >= degree) throw InvalidInput("cycle notation: point out of range");
        ++pos;
      }
      if (used[value]) throw InvalidInput("cycle notation: point repeated");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out << ' ';
      out << i;
      first = false;
      i = images_[i];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(), b.images_.begin(),
                                                b.images_.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  }
  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<Permutation::Point>(i)));
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto x : p.images()) h = h * 1000003u ^ x;
  return h;
}

}  // namespace galcomp
