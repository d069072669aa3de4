#include "gw/decomposition.hpp"

#include <algorithm>

#include "gw/exact_linalg.hpp"

namespace gw {

const char* to_string(Part p) {
  switch (p) {
    case Part::k: return "k";
    case Part::m: return "m";
    case Part::m1: return "m1";
    case Part::m2: return "m2";
    case Part::m3: return "m3";
  }
  return "?";
}

SpaceDescriptor::SpaceDescriptor(std::string name, AlgebraPtr algebra, std::vector<std::size_t> k,
                                 std::vector<std::size_t> m1, std::vector<std::size_t> m2,
                                 std::vector<std::size_t> m3, bool user_supplied)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      k_(std::move(k)),
      modules_{std::move(m1), std::move(m2), std::move(m3)},
      user_supplied_(user_supplied) {
  if (!algebra_) throw Error(ErrorCode::InvalidDescriptor, "descriptor without algebra");
  const std::size_t n = algebra_->dim();
  module_of_.assign(n, -1);
  auto claim = [&](std::vector<std::size_t>& set, int module) {
    std::sort(set.begin(), set.end());
    for (std::size_t i : set) {
      if (i >= n) throw Error(ErrorCode::InvalidDescriptor, "basis index " + std::to_string(i) + " out of range");
      if (module_of_[i] != -1) {
        throw Error(ErrorCode::InvalidDescriptor, "basis vector " + algebra_->label(i) + " assigned twice");
      }
      module_of_[i] = module;
    }
  };
  claim(k_, 0);
  for (int i = 0; i < 3; ++i) {
    if (modules_[static_cast<std::size_t>(i)].empty()) {
      throw Error(ErrorCode::InvalidDescriptor, "module m" + std::to_string(i + 1) + " is empty");
    }
    claim(modules_[static_cast<std::size_t>(i)], i + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (module_of_[i] == -1) {
      throw Error(ErrorCode::InvalidDescriptor, "basis vector " + algebra_->label(i) + " not assigned to any part");
    }
  }
  for (const auto& mod : modules_) m_.insert(m_.end(), mod.begin(), mod.end());
}

const std::vector<std::size_t>& SpaceDescriptor::indices(Part p) const {
  switch (p) {
    case Part::k: return k_;
    case Part::m: return m_;
    case Part::m1: return modules_[0];
    case Part::m2: return modules_[1];
    case Part::m3: return modules_[2];
  }
  throw Error(ErrorCode::Internal, "bad part");
}

namespace {

std::string part_name(int module) { return module == 0 ? "k" : "m" + std::to_string(module); }

}  // namespace

VerificationReport verify_space(const SpaceDescriptor& d) {
  VerificationReport report;
  report.irreducibility_warning = d.user_supplied();
  const LieAlgebra& alg = d.algebra();
  const std::size_t n = alg.dim();
  const auto& gram = alg.gram();
  auto add = [&](std::string cond, std::size_t a, std::size_t b, std::string detail) {
    report.violations.push_back({std::move(cond), a, b, std::move(detail)});
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d.module_of(a) != d.module_of(b) && sgn(gram(a, b)) != 0) {
        add("b_orthogonality", a, b,
            "B(" + alg.label(a) + ", " + alg.label(b) + ") = " + to_string(gram(a, b)) + " across " +
                part_name(d.module_of(a)) + " and " + part_name(d.module_of(b)));
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int ma = d.module_of(a);
      const int mb = d.module_of(b);
      if (ma != 0 && mb != 0 && ma != mb) continue;  // [mi, mj], i != j: unconstrained
      if (ma != 0 && mb == 0) continue;              // covered by (b, a)
      if (ma == 0 && mb == 0 && b <= a) continue;
      if (ma != 0 && b < a) continue;                // [mi, mi] is antisymmetric
      for (const auto& t : alg.terms<Rational>(a, b)) {
        const int mg = d.module_of(t.index);
        const std::string what =
            "[" + alg.label(a) + ", " + alg.label(b) + "] has component on " + alg.label(t.index) + " in " + part_name(mg);
        if (ma == 0 && mb == 0) {
          if (mg != 0) add("subalgebra", a, b, what);
        } else if (ma == 0) {
          if (mg == 0) {
            add("reductivity", a, b, what);
          } else if (mg != mb) {
            add("module_invariance", a, b, what);
          }
        } else if (mg != 0) {
          add("wallach", a, b, what);
        }
      }
    }
  }
  return report;
}

TripleSymbolTable triple_symbols(const SpaceDescriptor& d) {
  const LieAlgebra& alg = d.algebra();
  const auto& gram = alg.gram();
  const Part parts[3] = {Part::m1, Part::m2, Part::m3};

  std::array<Matrix<Rational>, 3> inv_gram;
  for (int i = 0; i < 3; ++i) {
    const auto& idx = d.indices(parts[i]);
    Matrix<Rational> g(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) g(r, c) = gram(idx[r], idx[c]);
    }
    inv_gram[static_cast<std::size_t>(i)] = inverse(g);
  }

  // B([e_a, e_b], e_c)
  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    Rational v = 0;
    for (const auto& t : alg.terms<Rational>(a, b)) {
      if (sgn(gram(t.index, c)) != 0) v += t.value * gram(t.index, c);
    }
    return v;
  };

  TripleSymbolTable table;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const auto& I = d.indices(parts[i - 1]);
        const auto& J = d.indices(parts[j - 1]);
        const auto& K = d.indices(parts[k - 1]);
        const auto& gi = inv_gram[static_cast<std::size_t>(i - 1)];
        const auto& gj = inv_gram[static_cast<std::size_t>(j - 1)];
        const auto& gk = inv_gram[static_cast<std::size_t>(k - 1)];
        const std::size_t di = I.size(), dj = J.size(), dk = K.size();
        std::vector<Rational> t(di * dj * dk);
        for (std::size_t x = 0; x < di; ++x)
          for (std::size_t y = 0; y < dj; ++y)
            for (std::size_t z = 0; z < dk; ++z) t[(x * dj + y) * dk + z] = triple(I[x], J[y], K[z]);

        // Raise all three indices with the inverse Gram blocks, then pair.
        std::vector<Rational> u(t.size()), w(t.size());
        for (std::size_t x = 0; x < di; ++x)
          for (std::size_t y = 0; y < dj; ++y)
            for (std::size_t z = 0; z < dk; ++z) {
              Rational s = 0;
              for (std::size_t x2 = 0; x2 < di; ++x2) {
                const auto& tv = t[(x2 * dj + y) * dk + z];
                if (sgn(tv) != 0 && sgn(gi(x, x2)) != 0) s += gi(x, x2) * tv;
              }
              u[(x * dj + y) * dk + z] = s;
            }
        for (std::size_t x = 0; x < di; ++x)
          for (std::size_t y = 0; y < dj; ++y)
            for (std::size_t z = 0; z < dk; ++z) {
              Rational s = 0;
              for (std::size_t y2 = 0; y2 < dj; ++y2) {
                const auto& uv = u[(x * dj + y2) * dk + z];
                if (sgn(uv) != 0 && sgn(gj(y, y2)) != 0) s += gj(y, y2) * uv;
              }
              w[(x * dj + y) * dk + z] = s;
            }
        Rational total = 0;
        for (std::size_t x = 0; x < di; ++x)
          for (std::size_t y = 0; y < dj; ++y)
            for (std::size_t z = 0; z < dk; ++z) {
              Rational s = 0;
              for (std::size_t z2 = 0; z2 < dk; ++z2) {
                const auto& wv = w[(x * dj + y) * dk + z2];
                if (sgn(wv) != 0 && sgn(gk(z, z2)) != 0) s += gk(z, z2) * wv;
              }
              total += s * t[(x * dj + y) * dk + z];
            }
        table(i, j, k) = total;
      }
    }
  }
  return table;
}

}  // namespace gw
