#include "solvcohom/exact/polynomial.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace solvcohom {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::linear_root(const GaussianRational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = GaussianRational(1) / leading();
  auto c = coeffs_;
  for (auto& z : c) z *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = GaussianRational(static_cast<long>(k)) * coeffs_[k];
  return Polynomial(std::move(c));
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactMatrix Polynomial::operator()(const ExactMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
  const auto id = ExactMatrix::identity(m.rows());
  ExactMatrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& z = coeffs_[static_cast<std::size_t>(k)];
    if (z.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coeff = z.to_string();
    bool compound = !z.is_real() && sgn(z.re()) != 0;
    std::string term;
    if (mono.empty()) {
      term = compound ? "(" + coeff + ")" : coeff;
    } else if (z.is_one()) {
      term = mono;
    } else if (z == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  GaussianRational lead_inv = GaussianRational(1) / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational q = rem[k + db] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial characteristic_polynomial(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = 1;
  const auto id = ExactMatrix::identity(n);
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    ExactMatrix am = a * m;
    GaussianRational trace;
    for (std::size_t d = 0; d < n; ++d) trace += am(d, d);
    c[n - k] = -trace / GaussianRational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

using Complex = std::complex<long double>;

Complex to_complex(const GaussianRational& z) {
  return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

// Durand-Kerner iteration on a monic polynomial of degree >= 1.
std::vector<Complex> numeric_roots(const Polynomial& monic) {
  const int d = monic.degree();
  std::vector<Complex> a;
  for (const auto& z : monic.coeffs()) a.push_back(to_complex(z));
  auto eval = [&](Complex x) {
    Complex acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  if (d == 1) return {-a[0]};

  long double radius = 1;
  for (int k = 0; k < d; ++k) radius = std::max(radius, 1 + std::abs(a[static_cast<std::size_t>(k)]));
  std::vector<Complex> z(static_cast<std::size_t>(d));
  const Complex seed(0.4L, 0.9L);
  Complex power = 1;
  for (auto& zk : z) {
    power *= seed;
    zk = power * radius / std::abs(seed);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) == 0) denom = Complex(1e-30L, 0);
      Complex step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

mpz_class common_denominator(const Polynomial& p) {
  mpz_class d = 1;
  for (const auto& z : p.coeffs()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.im().get_den_mpz_t());
  }
  return d;
}

mpz_class round_to_integer(long double x) { return mpz_class(static_cast<double>(std::round(x))); }

}  // namespace

RootSplit roots_in_gaussian_rationals(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  RootSplit out;
  Polynomial rest = p.monic();
  Polynomial sqfree = squarefree_part(p);
  if (sqfree.degree() <= 0) {
    out.remainder = rest;
    return out;
  }

  // A monic q with common denominator D has D^deg * q(t/D) monic over Z[i],
  // so every root of q in Q(i) lies in (1/D) Z[i].
  const mpz_class den = common_denominator(sqfree);
  const long double scale = static_cast<long double>(den.get_d());

  Polynomial pending = sqfree;
  for (const Complex& approx : numeric_roots(sqfree)) {
    mpz_class re0 = round_to_integer(approx.real() * scale);
    mpz_class im0 = round_to_integer(approx.imag() * scale);
    bool found = false;
    for (int dr = 0; dr <= 2 && !found; ++dr) {
      for (int di = 0; di <= 2 && !found; ++di) {
        // probe 0, +1, -1 around the rounded point
        mpz_class re = re0 + (dr == 2 ? -1 : dr);
        mpz_class im = im0 + (di == 2 ? -1 : di);
        GaussianRational candidate(mpq_class(re, den), mpq_class(im, den));
        if (!pending(candidate).is_zero()) continue;
        pending = divmod(pending, Polynomial::linear_root(candidate)).first;
        std::size_t multiplicity = 0;
        while (true) {
          auto [q, r] = divmod(rest, Polynomial::linear_root(candidate));
          if (!r.is_zero()) break;
          rest = std::move(q);
          ++multiplicity;
        }
        out.roots.emplace_back(candidate, multiplicity);
        found = true;
      }
    }
  }
  out.remainder = rest.monic();
  return out;
}

}  // namespace solvcohom
