#include "jetvir/brackets.hpp"

namespace jetvir {

StructureConstants StructureConstants::abelian(int dim) {
  if (dim < 1) throw std::invalid_argument("structure constants: dimension must be >= 1");
  return {dim, std::vector<Rational>(static_cast<std::size_t>(dim * dim * dim))};
}

StructureConstants StructureConstants::so3() {
  StructureConstants s = abelian(3);
  auto set = [&](int a, int b, int c, int v) { s.f[(a * 3 + b) * 3 + c] = v; };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  set(1, 0, 2, -1);
  set(2, 1, 0, -1);
  set(0, 2, 1, -1);
  return s;
}

bool StructureConstants::totally_antisymmetric() const {
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        const Rational& v = (*this)(a, b, c);
        if (v != -(*this)(b, a, c) || v != -(*this)(a, c, b)) return false;
      }
  return true;
}

bool StructureConstants::satisfies_jacobi() const {
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int g = 0; g < dim; ++g) {
          Rational s = 0;
          for (int e = 0; e < dim; ++e) {
            s += (*this)(a, b, e) * (*this)(e, c, g);
            s += (*this)(b, c, e) * (*this)(e, a, g);
            s += (*this)(c, a, e) * (*this)(e, b, g);
          }
          if (sgn(s) != 0) return false;
        }
  return true;
}

}  // namespace jetvir
