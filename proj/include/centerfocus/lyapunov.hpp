#ifndef CENTERFOCUS_LYAPUNOV_HPP
#define CENTERFOCUS_LYAPUNOV_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <centerfocus/matrix.hpp>
#include <centerfocus/poly.hpp>
#include <centerfocus/system.hpp>

namespace cf {

// How the one-dimensional kernel at even degree 2m is fixed. `orthogonal` puts
// F_2m in the image of the rotation operator (zero component along
// (x^2+y^2)^m); `monomial` zeroes the coefficient of x^(2m-i) y^i, with i
// chosen per degree.
struct KernelNormalization {
    enum class Kind { orthogonal, monomial } kind = Kind::orthogonal;
    std::map<unsigned, unsigned> index_by_degree;  // degree -> i, for `monomial`

    static KernelNormalization orthogonal() { return {}; }
    static KernelNormalization monomial(std::map<unsigned, unsigned> idx) { return {Kind::monomial, std::move(idx)}; }

    std::string describe() const {
        if (kind == Kind::orthogonal) return "F_2m has zero component along (x^2+y^2)^m";
        std::string s = "coefficient zeroed per even degree:";
        if (index_by_degree.empty()) return s + " x^(2m-i)y^i, i = m for even m, m-1 for odd m";
        for (auto [d, i] : index_by_degree) s += " deg" + std::to_string(d) + ":x^" + std::to_string(d - i) + "y^" + std::to_string(i);
        return s;
    }
};

// Default free index at even degree 2m: m when m is even, m - 1 otherwise
// (the monomial must occur in (x^2+y^2)^m).
inline unsigned default_free_index(unsigned degree) {
    const unsigned m = degree / 2;
    return m % 2 == 0 ? m : m - 1;
}

struct FocalSequence {
    std::vector<Poly> L;  // L[0] = L_1
    std::string convention_note;
    std::vector<Poly> F;  // F[r] for r = 0..2K+2 (F[2] = x^2 + y^2)
};

namespace detail {

// Raw-coefficient matrix of R = y d/dx - x d/dy on forms of degree j:
// column i is the image of x^(j-i) y^i, row i' the coefficient of x^(j-i') y^i'.
inline RationalMatrix rotation_matrix(unsigned j) {
    RationalMatrix m(j + 1, j + 1);
    for (unsigned i = 0; i <= j; ++i) {
        // y * d/dx x^(j-i) y^i = (j-i) x^(j-i-1) y^(i+1)
        if (i < j) m(i + 1, i) += Rational(j - i);
        // -x * d/dy x^(j-i) y^i = -i x^(j-i+1) y^(i-1)
        if (i > 0) m(i - 1, i) -= Rational(i);
    }
    return m;
}

}  // namespace detail

// Focal quantities on the center-focus variety: solves dU/dt = sum L_k (x^2+y^2)^(k+1)
// degree by degree for U = x^2 + y^2 + F_3 + F_4 + ...
inline FocalSequence focal_quantities(const SystemSpec& spec, unsigned K,
                                      const KernelNormalization& norm = KernelNormalization::monomial({})) {
    if (K < 1) throw std::invalid_argument("order K must be at least 1");
    if (spec.signature().has_constant_part()) throw signature_error("focal quantities need a system without constant terms");
    if (!on_variety(spec)) throw variety_conflict("focal quantities require the linear part on the variety chart (apply V)");
    const auto& degs = spec.signature().degrees();
    std::vector<VectorField> nonlinear;
    for (std::size_t c = 1; c < degs.size(); ++c) nonlinear.push_back(component_field(spec, c));

    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    const Poly rho = x * x + y * y;
    const unsigned top = 2 * K + 2;
    FocalSequence out;
    out.convention_note = norm.describe();
    out.F.assign(top + 1, Poly{});
    out.F[2] = rho;

    for (unsigned j = 3; j <= top; ++j) {
        Budget::check();
        // rhs = -sum_m (P_m dF_r/dx + Q_m dF_r/dy), r = j - m + 1
        Poly rhs;
        for (std::size_t c = 0; c < nonlinear.size(); ++c) {
            const unsigned m = degs[c + 1];
            if (j + 1 < m + 2) continue;
            const unsigned r = j + 1 - m;
            const Poly& fr = out.F[r];
            rhs -= nonlinear[c].P * fr.derivative(var_x) + nonlinear[c].Q * fr.derivative(var_y);
        }
        const bool even = j % 2 == 0;
        const std::size_t nu = j + 1 + (even ? 1 : 0);
        RationalMatrix m(nu, nu);
        RationalMatrix rot = detail::rotation_matrix(j);
        for (unsigned r = 0; r <= j; ++r) {
            for (unsigned c = 0; c <= j; ++c) m(r, c) = rot(r, c);
        }
        if (even) {
            const unsigned half = j / 2;
            // -L * (x^2+y^2)^half on the left
            for (unsigned t = 0; t <= half; ++t) m(2 * t, j + 1) = -Rational(binomial(half, t));
            if (norm.kind == KernelNormalization::Kind::orthogonal) {
                for (unsigned t = 0; t <= half; ++t) {
                    m(j + 1, 2 * t) = Rational(binomial(half, t)) / Rational(binomial(j, 2 * t));
                }
            } else {
                auto it = norm.index_by_degree.find(j);
                const unsigned idx = it == norm.index_by_degree.end() ? default_free_index(j) : it->second;
                if (idx > j) throw std::invalid_argument("free index out of range");
                m(j + 1, idx) = 1;
            }
        }
        auto inv = inverse(m);
        if (!inv) throw std::logic_error("degenerate normalization at degree " + std::to_string(j));
        std::vector<Poly> b(nu);
        for (unsigned i = 0; i <= j; ++i) b[i] = rhs.phase_coefficient(j - i, i);
        std::vector<Poly> sol(nu);
        for (std::size_t r = 0; r < nu; ++r) {
            for (std::size_t c = 0; c < nu; ++c) {
                if ((*inv)(r, c) != 0 && !b[c].is_zero()) sol[r] += b[c] * (*inv)(r, c);
            }
        }
        Poly fj;
        for (unsigned i = 0; i <= j; ++i) {
            fj += sol[i] * Poly::term(Monomial::of(var_x, j - i) * Monomial::of(var_y, i), 1);
        }
        out.F[j] = std::move(fj);
        if (even) out.L.push_back(std::move(sol[j + 1]));
    }
    return out;
}

}  // namespace cf

#endif  // CENTERFOCUS_LYAPUNOV_HPP
