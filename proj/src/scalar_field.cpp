#include "mixtrans/scalar_field.hpp"

namespace mixtrans {

Vec2 fd_gradient(const std::function<double(Vec2)>& f, Vec2 p, double h) {
  auto central = [&](double step) -> Vec2 {
    return {(f({p.x + step, p.y}) - f({p.x - step, p.y})) / (2.0 * step),
            (f({p.x, p.y + step}) - f({p.x, p.y - step})) / (2.0 * step)};
  };
  Vec2 d1 = central(h);
  Vec2 d2 = central(h / 2.0);
  return (1.0 / 3.0) * (4.0 * d2 - d1);
}

ScalarField ScalarField::zero() { return constant(0.0); }

ScalarField ScalarField::constant(double c) {
  return {[c](Vec2) { return c; }, [](Vec2) { return Vec2{0.0, 0.0}; }, true};
}

ScalarField ScalarField::from_poly(const Poly2& p) {
  Poly2 px = p.dx();
  Poly2 py = p.dy();
  return {[p](Vec2 q) { return p.eval(q); },
          [px, py](Vec2 q) { return Vec2{px.eval(q), py.eval(q)}; }, true};
}

ScalarField ScalarField::from_function(std::function<double(Vec2)> f) {
  auto g = [f](Vec2 p) { return fd_gradient(f, p); };
  return {std::move(f), std::move(g), false};
}

}  // namespace mixtrans
