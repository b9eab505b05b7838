#include "poly_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

polynomial polynomial::constant(std::size_t dim, double c) {
  polynomial p(dim);
  p.add(exponents(dim, 0), c);
  return p;
}

void polynomial::add(const exponents& e, double c) {
  if (c == 0.0) return;
  terms_[e] += c;
}

polynomial polynomial::operator*(const polynomial& o) const {
  polynomial out(dim_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      exponents e(dim_);
      for (std::size_t i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

polynomial& polynomial::operator+=(const polynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

double double_factorial(int k) {
  double r = 1.0;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

double polynomial::gaussian_expectation() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (unsigned k : e) {
      if (k % 2 == 1) {
        m = 0.0;
        break;
      }
      m *= double_factorial(static_cast<int>(k) - 1);
    }
    s += m;
  }
  return s;
}

double polynomial::evaluate(const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (std::size_t i = 0; i < dim_; ++i) m *= std::pow(x[i], e[i]);
    s += m;
  }
  return s;
}

std::vector<double> he_coefficients(unsigned n) {
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= (k - 1) * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

polynomial to_polynomial(const chaoskit::gaussian::symmetric_kernel& f) {
  const std::size_t d = f.dim();
  polynomial out(d);
  for (const auto& [idx, v] : f.entries()) {
    // Count ordered tuples in the orbit by enumerating permutations.
    auto perm = idx;
    double orbit = 0.0;
    do {
      orbit += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<unsigned> occ(d, 0);
    for (auto i : idx) ++occ[i];
    polynomial term = polynomial::constant(d, v * orbit);
    for (std::size_t i = 0; i < d; ++i) {
      if (occ[i] == 0) continue;
      polynomial h(d);
      const auto c = he_coefficients(occ[i]);
      for (std::size_t p = 0; p < c.size(); ++p) {
        exponents e(d, 0);
        e[i] = static_cast<unsigned>(p);
        h.add(e, c[p]);
      }
      term = term * h;
    }
    out += term;
  }
  return out;
}

polynomial to_polynomial(const chaoskit::gaussian::chaos_vector& F) {
  polynomial out(F.dim());
  for (const auto& [k, f] : F.levels()) out += to_polynomial(f);
  return out;
}

double expect_product(const polynomial& a, const polynomial& b) {
  double s = 0.0;
  const std::size_t d = a.dim();
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      double m = ca * cb;
      for (std::size_t i = 0; i < d && m != 0.0; ++i) {
        const unsigned k = ea[i] + eb[i];
        m = k % 2 ? 0.0 : m * double_factorial(static_cast<int>(k) - 1);
      }
      s += m;
    }
  }
  return s;
}

double moment(const std::vector<chaoskit::gaussian::chaos_vector>& factors, const std::vector<unsigned>& powers) {
  std::vector<polynomial> flat;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const polynomial p = to_polynomial(factors[i]);
    for (unsigned r = 0; r < powers[i]; ++r) flat.push_back(p);
  }
  const std::size_t d = factors.front().dim();
  if (flat.empty()) return 1.0;
  // Split the factors in two halves and pair the halves in expectation.
  polynomial left = polynomial::constant(d, 1.0);
  polynomial right = polynomial::constant(d, 1.0);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (2 * i < flat.size()) {
      left = left * flat[i];
    } else {
      right = right * flat[i];
    }
  }
  return expect_product(left, right);
}

}  // namespace oracle
