#include "sdirac/matrix4.hpp"

namespace sdirac {

double spectral_norm(const Matrix4c& m) {
    const Matrix4c g = m.adjoint() * m; // Hermitian positive semi-definite
    Vec4c v{c64(1.0), c64(0.61803398875), c64(0.41421356237), c64(0.2360679775)};
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        Vec4c w = g * v;
        const double n = norm(w);
        if (n == 0.0) return 0.0;
        v = (1.0 / n) * w;
        lambda = std::real(inner(v, g * v));
    }
    return std::sqrt(std::max(lambda, 0.0));
}

} // namespace sdirac
