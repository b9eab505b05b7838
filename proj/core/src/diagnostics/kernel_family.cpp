#include "chaoskit/diagnostics/kernel_family.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "chaoskit/error.hpp"

namespace chaoskit::diagnostics {

kernel_family kernel_family::gaussian_clt() {
  kernel_family fam;
  fam.name_ = "gaussian_clt";
  fam.order_ = 2;
  fam.gen_ = [](unsigned m) {
    symmetric_kernel f(m, 2);
    const double v = 1.0 / std::sqrt(2.0 * m);
    for (gaussian::index_t i = 0; i < m; ++i) f.add({i, i}, v);
    return f;
  };
  return fam;
}

kernel_family kernel_family::gamma_fixed(unsigned k, double scale) {
  if (k == 0) throw validation_error("gamma_fixed family needs k >= 1");
  if (!(scale != 0.0 && std::isfinite(scale))) throw validation_error("gamma_fixed family needs a finite non-zero scale");
  kernel_family fam;
  fam.name_ = "gamma_fixed";
  fam.order_ = 2;
  symmetric_kernel f(k, 2);
  for (gaussian::index_t i = 0; i < k; ++i) f.add({i, i}, scale);
  fam.gen_ = [f](unsigned) { return f; };
  return fam;
}

kernel_family kernel_family::explicit_list(std::vector<symmetric_kernel> members, std::string name) {
  if (members.empty()) throw validation_error("explicit kernel family is empty");
  const unsigned n = members.front().order();
  if (n == 0) throw validation_error("kernel family members need order >= 1");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].order() != n) {
      throw validation_error("kernel family member " + std::to_string(i + 1) + " has order " +
                             std::to_string(members[i].order()) + ", expected " + std::to_string(n));
    }
  }
  kernel_family fam;
  fam.name_ = std::move(name);
  fam.order_ = n;
  fam.size_ = static_cast<unsigned>(members.size());
  auto list = std::make_shared<const std::vector<symmetric_kernel>>(std::move(members));
  fam.gen_ = [list](unsigned m) { return (*list)[m - 1]; };
  return fam;
}

symmetric_kernel kernel_family::member(unsigned m) const {
  if (m == 0 || (size_ != 0 && m > size_)) {
    throw validation_error("family '" + name_ + "' has no member m = " + std::to_string(m));
  }
  return gen_(m);
}

}  // namespace chaoskit::diagnostics
