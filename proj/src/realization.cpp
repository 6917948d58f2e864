#include "galcomp/realization.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "galcomp/error.hpp"

namespace galcomp::nf {

Realization::Realization(std::string name, const RatPoly& min_poly, std::vector<Permutation> root_action,
                         std::vector<RatPoly> generator_images, std::vector<RatPoly> roots,
                         std::optional<RealizationRef> ref)
    : name_(std::move(name)),
      omega_(min_poly, "g"),
      generators_(std::move(root_action)),
      generator_images_(std::move(generator_images)),
      roots_(std::move(roots)) {
  if (generators_.empty()) throw InvalidInput("realization " + name_ + ": no root action given");
  if (generators_.size() != generator_images_.size()) {
    throw InvalidInput("realization " + name_ + ": one generator image per root action permutation is required");
  }
  const std::size_t points = generators_.front().degree();
  for (auto& img : generator_images_) {
    img = omega_.reduce(img);
    if (!omega_.is_root(omega_.min_poly(), img)) {
      throw InvalidInput("realization " + name_ + ": " + img.to_string("g") + " is not a conjugate of the generator");
    }
  }

  const Permutation one = Permutation::identity(points);
  images_.emplace(one, omega_.reduce(RatPoly::x()));
  std::vector<Permutation> queue{one};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation p = queue[head];
    const RatPoly img_p = images_.at(p);
    for (std::size_t t = 0; t < generators_.size(); ++t) {
      const Permutation q = generators_[t] * p;
      // sigma_g(sigma_p(g)) = (sigma_p(g))(sigma_g(g)).
      RatPoly img_q = omega_.evaluate(img_p, generator_images_[t]);
      auto [it, fresh] = images_.emplace(q, img_q);
      if (fresh) {
        queue.push_back(q);
      } else if (!(it->second == img_q)) {
        throw InvalidInput("realization " + name_ + ": automorphism table is not a homomorphism at " + q.to_string());
      }
    }
  }
  if (static_cast<int>(images_.size()) != omega_.degree()) {
    throw InvalidInput("realization " + name_ + ": group of order " + std::to_string(images_.size()) +
                       " for a field of degree " + std::to_string(omega_.degree()));
  }
  std::set<std::vector<mpq_class>> distinct;
  for (const auto& [p, img] : images_) distinct.insert(img.coeffs());
  if (distinct.size() != images_.size()) throw InvalidInput("realization " + name_ + ": automorphisms are not distinct");

  if (!roots_.empty()) {
    if (roots_.size() != points) throw InvalidInput("realization " + name_ + ": one root per point is required");
    for (auto& r : roots_) r = omega_.reduce(r);
    for (std::size_t t = 0; t < generators_.size(); ++t) {
      for (std::size_t j = 0; j < points; ++j) {
        if (!(apply(generators_[t], roots_[j]) == roots_[generators_[t](static_cast<Permutation::Point>(j))])) {
          throw InvalidInput("realization " + name_ + ": root action disagrees with automorphism " +
                             generators_[t].to_string());
        }
      }
    }
  }

  ctx_ = GaloisContext(Subgroup::generate(points, generators_), name_, std::move(ref));
}

const RatPoly& Realization::image_of_generator(const Permutation& p) const {
  auto it = images_.find(p);
  if (it == images_.end()) throw InvalidInput("realization " + name_ + ": " + p.to_string() + " is not in the group");
  return it->second;
}

RatPoly Realization::apply(const Permutation& p, const RatPoly& a) const {
  return omega_.evaluate(a, image_of_generator(p));
}

RatPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic_polynomial: n must be positive");
  RatPoly f = RatPoly::monomial(1, n) - RatPoly::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) f = f / cyclotomic_polynomial(d);
  }
  return f;
}

Realization cyclotomic_realization(int n) {
  if (n < 1 || n > 30) throw InvalidInput("cyclotomic realization needs 1 <= n <= 30, got " + std::to_string(n));
  const RatPoly phi = cyclotomic_polynomial(n);
  std::vector<int> units;
  for (int u = 0; u < n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u);
  }
  auto position = [&](int u) {
    return static_cast<Permutation::Point>(std::lower_bound(units.begin(), units.end(), u) - units.begin());
  };
  std::vector<Permutation> action;
  std::vector<RatPoly> images;
  std::vector<RatPoly> roots;
  for (int k : units) {
    std::vector<Permutation::Point> img;
    for (int u : units) img.push_back(position(k * u % n));
    action.emplace_back(std::move(img));
    images.push_back(RatPoly::monomial(1, k) % phi);
    roots.push_back(RatPoly::monomial(1, k) % phi);
  }
  return Realization("cyclotomic_" + std::to_string(n), phi, std::move(action), std::move(images), std::move(roots),
                     RealizationRef{"cyclotomic", n});
}

Realization s3_x3m2_realization() {
  // g = cbrt2 + omega has minimal polynomial x^6 + 3x^5 + 6x^4 + 3x^3 + 9x + 9.
  const RatPoly f{9, 9, 0, 3, 6, 3, 1};
  const RatPoly cbrt2(std::vector<mpq_class>{2, 1, mpq_class(-2, 3), mpq_class(2, 3), mpq_class(1, 3), mpq_class(2, 9)});
  const RatPoly omega(
      std::vector<mpq_class>{-2, 0, mpq_class(2, 3), mpq_class(-2, 3), mpq_class(-1, 3), mpq_class(-2, 9)});
  auto mul = [&](const RatPoly& a, const RatPoly& b) { return (a * b) % f; };
  if (!(mul(mul(cbrt2, cbrt2), cbrt2) == RatPoly::constant(2)) ||
      !(mul(omega, omega) + omega + RatPoly::constant(1)).is_zero() || !(cbrt2 + omega == RatPoly::x())) {
    throw InternalInconsistency("s3_x3m2: stored expressions for cbrt2 and omega are wrong");
  }
  const RatPoly omega2 = mul(omega, omega);
  // Roots r_j = cbrt2 * omega^j. (0 1 2): cbrt2 -> cbrt2 * omega, omega fixed.
  // (1 2): cbrt2 fixed, omega -> omega^2.
  std::vector<Permutation> action{Permutation({1, 2, 0}), Permutation({0, 2, 1})};
  std::vector<RatPoly> images{mul(cbrt2, omega) + omega, cbrt2 + omega2};
  std::vector<RatPoly> roots{cbrt2, mul(cbrt2, omega), mul(cbrt2, omega2)};
  return Realization("s3_x3m2", f, std::move(action), std::move(images), std::move(roots), RealizationRef{"s3_x3m2", 0});
}

Realization realize_context(const RealizationRef& ref) {
  if (ref.name == "cyclotomic") return cyclotomic_realization(ref.n);
  if (ref.name == "s3_x3m2") return s3_x3m2_realization();
  throw InvalidInput("unsupported realization '" + ref.name + "'");
}

std::optional<RatPoly> Subfield::express(const RatPoly& a) const {
  auto c = powers_.solve(embedding_.codomain().coordinates(a));
  if (!c) return std::nullopt;
  return RatPoly(std::move(*c));
}

Subfield fixed_field(const Realization& r, const Subgroup& h, std::uint64_t seed) {
  const Subgroup& g = r.context().ambient();
  if (h.degree() != g.degree() || !h.is_subgroup_of(g)) {
    throw InvalidInput("fixed_field: subgroup is not contained in the ambient group");
  }
  const NumberField& omega = r.omega();
  const auto d = static_cast<std::size_t>(omega.degree());

  QMatrix avg(d, d);
  const mpq_class w(1, static_cast<long>(h.order()));
  for (std::size_t k = 0; k < d; ++k) {
    const RatPoly xk = RatPoly::monomial(1, static_cast<int>(k));
    for (const auto& p : h.elements()) {
      QVector c = omega.coordinates(r.apply(p, xk));
      for (std::size_t i = 0; i < d; ++i) avg(i, k) += w * c[i];
    }
  }
  const std::vector<QVector> fixed = (QMatrix::identity(d) - avg).kernel();
  const std::size_t m = g.order() / h.order();
  if (fixed.size() != m) {
    throw InternalInconsistency("fixed_field: fixed space of dimension " + std::to_string(fixed.size()) +
                                ", expected " + std::to_string(m));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    QVector t(d, mpq_class(0));
    if (attempt < static_cast<int>(m)) {
      t = fixed[static_cast<std::size_t>(attempt)];
    } else {
      for (const auto& v : fixed) {
        const long c = coeff(rng);
        for (std::size_t i = 0; i < d; ++i) t[i] += c * v[i];
      }
    }
    const RatPoly theta = omega.from_coordinates(t);
    const RatPoly mp = omega.min_poly_of(theta);
    if (static_cast<std::size_t>(mp.degree()) != m) continue;

    std::vector<QVector> columns;
    RatPoly power = RatPoly::constant(1);
    for (std::size_t k = 0; k < m; ++k) {
      columns.push_back(omega.coordinates(power));
      power = omega.mul(power, theta);
    }
    return Subfield(h, FieldEmbedding(NumberField(mp, "t"), omega, theta), QMatrix::from_columns(columns, d));
  }
  throw InternalInconsistency("fixed_field: no primitive element found");
}

}  // namespace galcomp::nf
