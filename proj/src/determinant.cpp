#include "hankel/determinant.hpp"

namespace hankel {

UniPoly char_poly(const RatMatrix& m) { return UniPoly(char_poly_coeffs<Rational>(m), "X"); }

}  // namespace hankel
