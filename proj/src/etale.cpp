#include "galcomp/etale.hpp"

#include <map>
#include <random>
#include <string>

#include "galcomp/error.hpp"

namespace galcomp::nf {

namespace {

void axpy(QVector& y, const mpq_class& a, const QVector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

QVector zero_vector(std::size_t n) { return QVector(n, mpq_class(0)); }

}  // namespace

EtaleAlgebra::EtaleAlgebra(std::size_t dimension, std::vector<QVector> structure, QVector unit, std::string note)
    : n_(dimension), c_(std::move(structure)), unit_(std::move(unit)), note_(std::move(note)) {
  if (c_.size() != n_ * n_ || unit_.size() != n_) throw InvalidInput("EtaleAlgebra: structure constants have wrong shape");
  for (const auto& v : c_) {
    if (v.size() != n_) throw InvalidInput("EtaleAlgebra: structure constants have wrong shape");
  }
}

EtaleAlgebra EtaleAlgebra::from_polynomial(const RatPoly& f) {
  if (f.degree() < 1) throw InvalidInput("EtaleAlgebra::from_polynomial: need positive degree");
  const RatPoly m = f.monic();
  const auto n = static_cast<std::size_t>(m.degree());
  std::vector<QVector> powers;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    RatPoly r = RatPoly::monomial(1, static_cast<int>(k)) % m;
    QVector v = zero_vector(n);
    for (int i = 0; i <= r.degree(); ++i) v[static_cast<std::size_t>(i)] = r.coeff(i);
    powers.push_back(std::move(v));
  }
  std::vector<QVector> c;
  c.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c.push_back(powers[i + j]);
  }
  return EtaleAlgebra(n, std::move(c), powers[0], "Q[x]/(" + m.to_string() + ")");
}

QVector EtaleAlgebra::basis(std::size_t i) const {
  QVector v = zero_vector(n_);
  v[i] = 1;
  return v;
}

QVector EtaleAlgebra::mul(const QVector& a, const QVector& b) const {
  QVector out = zero_vector(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(b[j]) == 0) continue;
      axpy(out, a[i] * b[j], c_[i * n_ + j]);
    }
  }
  return out;
}

QMatrix EtaleAlgebra::left_multiplication(const QVector& a) const {
  QMatrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    QVector col = zero_vector(n_);
    for (std::size_t i = 0; i < n_; ++i) axpy(col, a[i], c_[i * n_ + j]);
    for (std::size_t r = 0; r < n_; ++r) m(r, j) = col[r];
  }
  return m;
}

mpq_class EtaleAlgebra::trace(const QVector& a) const {
  mpq_class t = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpq_class ti = 0;
    for (std::size_t j = 0; j < n_; ++j) ti += c_[i * n_ + j][j];
    t += a[i] * ti;
  }
  return t;
}

bool EtaleAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (c_[i * n_ + j] != c_[j * n_ + i]) return false;
    }
  }
  return true;
}

bool EtaleAlgebra::is_associative() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (mul(c_[i * n_ + j], basis(k)) != mul(basis(i), c_[j * n_ + k])) return false;
      }
    }
  }
  return true;
}

bool EtaleAlgebra::is_unital() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (mul(unit_, basis(i)) != basis(i)) return false;
  }
  return true;
}

RatPoly EtaleAlgebra::min_poly_of(const QVector& a) const { return min_poly_in_summand(a, unit_); }

RatPoly EtaleAlgebra::min_poly_in_summand(const QVector& a, const QVector& e) const {
  const QMatrix l = left_multiplication(a);
  QVector p = e;
  int last = 0;
  return min_poly_from_powers(
      [&](int k) {
        while (last < k) {
          p = l * p;
          ++last;
        }
        return p;
      },
      static_cast<int>(n_));
}

QVector EtaleAlgebra::evaluate(const RatPoly& p, const QVector& a) const {
  const QMatrix l = left_multiplication(a);
  QVector acc = zero_vector(n_);
  for (int i = p.degree(); i >= 0; --i) {
    acc = l * acc;
    axpy(acc, p.coeff(i), unit_);
  }
  return acc;
}

TensorProduct::TensorProduct(const FieldEmbedding& ev, const FieldEmbedding& ew)
    : kv_(ev.codomain()),
      kw_(ew.codomain()),
      dv_(static_cast<std::size_t>(kv_.degree())),
      dw_(static_cast<std::size_t>(kw_.degree())),
      algebra_(0, {}, {}, {}) {
  if (!(ev.domain() == ew.domain())) throw InvalidInput("tensor_over: embeddings start from different fields");
  const std::size_t n = dv_ * dw_;

  auto powers = [](const NumberField& k, std::size_t count) {
    std::vector<QVector> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(k.coordinates(RatPoly::monomial(1, static_cast<int>(i))));
    return out;
  };
  const std::vector<QVector> xp = powers(kv_, 2 * dv_ - 1);
  const std::vector<QVector> yp = powers(kw_, 2 * dw_ - 1);

  // Rows span the ideal generated by delta = e_V(b) (x) 1 - 1 (x) e_W(b).
  // Columns run from the highest monomial down so that pivots land on high
  // monomials and 1 stays a basis element of the quotient.
  QMatrix ideal(n, n);
  for (std::size_t i = 0; i < dv_; ++i) {
    QVector xv = kv_.coordinates(ev.image() * RatPoly::monomial(1, static_cast<int>(i)));
    for (std::size_t j = 0; j < dw_; ++j) {
      QVector yw = kw_.coordinates(ew.image() * RatPoly::monomial(1, static_cast<int>(j)));
      const std::size_t row = i * dw_ + j;
      for (std::size_t a = 0; a < dv_; ++a) ideal(row, n - 1 - (a * dw_ + j)) += xv[a];
      for (std::size_t b = 0; b < dw_; ++b) ideal(row, n - 1 - (i * dw_ + b)) -= yw[b];
    }
  }
  const std::vector<std::size_t> pivots = ideal.rref();
  std::vector<long> pivot_row(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[n - 1 - pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> position(n, 0);
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k) {
    if (pivot_row[k] < 0) {
      position[k] = free.size();
      free.push_back(k);
    }
  }
  const std::size_t q = free.size();
  if (q * static_cast<std::size_t>(ev.domain().degree()) != n) {
    throw InternalInconsistency("tensor_over: quotient has dimension " + std::to_string(q) + ", expected " +
                                std::to_string(n / static_cast<std::size_t>(ev.domain().degree())));
  }

  reduction_.assign(n, zero_vector(q));
  for (std::size_t k = 0; k < n; ++k) {
    if (pivot_row[k] < 0) {
      reduction_[k][position[k]] = 1;
      continue;
    }
    const auto r = static_cast<std::size_t>(pivot_row[k]);
    for (std::size_t f : free) reduction_[k][position[f]] = -ideal(r, n - 1 - f);
  }

  std::map<std::pair<std::size_t, std::size_t>, QVector> cache;
  std::vector<QVector> structure;
  structure.reserve(q * q);
  for (std::size_t a : free) {
    for (std::size_t b : free) {
      const std::size_t s = a / dw_ + b / dw_;
      const std::size_t t = a % dw_ + b % dw_;
      auto it = cache.find({s, t});
      if (it == cache.end()) {
        std::vector<QVector> grid(dv_, zero_vector(dw_));
        for (std::size_t i = 0; i < dv_; ++i) {
          for (std::size_t j = 0; j < dw_; ++j) {
            if (sgn(xp[s][i]) != 0 && sgn(yp[t][j]) != 0) grid[i][j] = xp[s][i] * yp[t][j];
          }
        }
        it = cache.emplace(std::make_pair(s, t), reduce_grid(grid)).first;
      }
      structure.push_back(it->second);
    }
  }
  std::string note = "Q[v]/(" + kv_.min_poly().to_string("v") + ") (x) Q[w]/(" + kw_.min_poly().to_string("w") +
                     ") over Q[b]/(" + ev.domain().min_poly().to_string("b") + ")";
  algebra_ = EtaleAlgebra(q, std::move(structure), reduction_[0], std::move(note));
}

QVector TensorProduct::reduce_grid(const std::vector<QVector>& grid) const {
  QVector out = zero_vector(reduction_.empty() ? 0 : reduction_[0].size());
  for (std::size_t i = 0; i < dv_; ++i) {
    for (std::size_t j = 0; j < dw_; ++j) axpy(out, grid[i][j], reduction_[i * dw_ + j]);
  }
  return out;
}

QVector TensorProduct::image(const RatPoly& p, const RatPoly& q) const {
  const QVector x = kv_.coordinates(p);
  const QVector y = kw_.coordinates(q);
  std::vector<QVector> grid(dv_, zero_vector(dw_));
  for (std::size_t i = 0; i < dv_; ++i) {
    for (std::size_t j = 0; j < dw_; ++j) grid[i][j] = x[i] * y[j];
  }
  return reduce_grid(grid);
}

EtaleAlgebra tensor_over(const FieldEmbedding& ev, const FieldEmbedding& ew) { return TensorProduct(ev, ew).algebra(); }

std::size_t radical_dim(const EtaleAlgebra& a) {
  const std::size_t n = a.dimension();
  std::vector<mpq_class> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = a.trace(a.basis(i));
  QMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class s = 0;
      const QVector& c = a.product_of_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) != 0) s += c[k] * t[k];
      }
      form(i, j) = s;
    }
  }
  return n - form.rank();
}

EtaleDecomposition decompose_etale(const EtaleAlgebra& a, const DecomposeOptions& options) {
  if (std::size_t r = radical_dim(a); r != 0) {
    throw SemisimplicityFailure("decompose_etale: radical of dimension " + std::to_string(r) + " in " + a.note());
  }
  const std::size_t n = a.dimension();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coeff(-3, 3);

  for (int attempt = 1; attempt <= options.max_retries; ++attempt) {
    QVector theta = zero_vector(n);
    for (auto& c : theta) c = coeff(rng);

    const QMatrix l = a.left_multiplication(theta);
    std::vector<QVector> powers{a.unit()};
    LinearSpan span(n);
    span.add(powers[0]);
    bool primitive = true;
    for (std::size_t k = 1; k < n; ++k) {
      powers.push_back(l * powers.back());
      if (span.add(powers.back())) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    auto rel = span.add(l * powers.back());
    if (!rel) throw InternalInconsistency("decompose_etale: powers of theta exceed the dimension");
    std::vector<mpq_class> fc(n + 1);
    for (std::size_t i = 0; i < n; ++i) fc[i] = -(*rel)[i];
    fc[n] = 1;
    RatPoly f(std::move(fc));

    EtaleDecomposition out;
    out.theta = theta;
    out.theta_min_poly = f;
    out.attempts = attempt;
    for (const auto& [fi, mult] : factor_rat_poly(f, options.factor)) {
      if (mult != 1) throw InternalInconsistency("decompose_etale: repeated factor in a separable minimal polynomial");
      RatPoly g = f / fi;
      RatPoly e = (g * inverse_mod(g % fi, fi)) % f;
      QVector p = zero_vector(n);
      for (int k = 0; k <= e.degree(); ++k) axpy(p, e.coeff(k), powers[static_cast<std::size_t>(k)]);
      out.summands.push_back(EtaleSummand{std::move(p), fi, fi.degree()});
    }

    QVector sum = zero_vector(n);
    for (std::size_t i = 0; i < out.summands.size(); ++i) {
      const QVector& pi = out.summands[i].idempotent;
      axpy(sum, 1, pi);
      if (a.mul(pi, pi) != pi) throw InternalInconsistency("decompose_etale: P^2 != P");
      for (std::size_t j = i + 1; j < out.summands.size(); ++j) {
        if (!is_zero(a.mul(pi, out.summands[j].idempotent))) {
          throw InternalInconsistency("decompose_etale: P_i P_j != 0");
        }
      }
    }
    if (sum != a.unit()) throw InternalInconsistency("decompose_etale: idempotents do not sum to 1");
    return out;
  }
  throw InternalInconsistency("decompose_etale: no primitive element found in " + std::to_string(options.max_retries) +
                              " attempts");
}

}  // namespace galcomp::nf
