#ifndef CENTERFOCUS_MATCHING_HPP
#define CENTERFOCUS_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <centerfocus/lie.hpp>
#include <centerfocus/lyapunov.hpp>
#include <centerfocus/matrix.hpp>
#include <centerfocus/poly.hpp>
#include <centerfocus/system.hpp>

namespace cf {

class degenerate_point : public std::domain_error {
public:
    degenerate_point(const std::string& what, std::optional<std::size_t> failing_row)
        : std::domain_error(what), failing_row_(failing_row) {}
    // Row of the extended system that is inconsistent, when there is one.
    std::optional<std::size_t> failing_row() const noexcept { return failing_row_; }

private:
    std::optional<std::size_t> failing_row_;
};

// Unknown of the extended system: a coefficient of F_r (binomially scaled, so
// F_r = sum binom(r,i) u_{r,i} x^(r-i) y^i) or one of G_1..G_k.
struct Unknown {
    enum class Kind { ansatz, focal } kind = Kind::ansatz;
    unsigned degree = 0;  // r for ansatz; k' for focal
    unsigned index = 0;

    // a0..a3, b0..b4, c0..c5, ... then g0, h0, ... beyond degree 8; G1, G2, ...
    std::string name() const {
        if (kind == Kind::focal) return "G" + std::to_string(degree);
        return std::string(1, static_cast<char>('a' + (degree - 3))) + std::to_string(index);
    }

    friend bool operator==(const Unknown&, const Unknown&) = default;
};

// Equation for the coefficient of x^(degree-index) y^index.
struct RowLabel {
    unsigned degree = 0;
    unsigned index = 0;
    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

struct MatchingDimensions {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
};

// Counts rows and columns of the system that determines G_k (degrees 3..2k+2).
inline MatchingDimensions matching_dimensions(unsigned k) {
    MatchingDimensions d;
    for (unsigned j = 3; j <= 2 * k + 2; ++j) {
        d.equations += j + 1;
        d.unknowns += j + 1;
        if (j % 2 == 0) d.unknowns += 1;
    }
    return d;
}

// The linear system A u = C obtained by splitting the matching identity
// L(U) = sum_k G_k k2^(k+1) by powers of x and y, for degrees 3..2k+2.
struct MatchingSystem {
    unsigned k = 0;
    std::vector<RowLabel> rows;
    std::vector<Unknown> cols;
    PolyMatrix A;
    std::vector<Poly> C;

    std::size_t column_of(const Unknown& u) const {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i] == u) return i;
        }
        throw std::out_of_range("unknown not in system: " + u.name());
    }

    std::size_t column_of(std::string_view name) const {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i].name() == name) return i;
        }
        throw std::out_of_range("unknown not in system: " + std::string(name));
    }

    std::size_t row_of(RowLabel r) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] == r) return i;
        }
        throw std::out_of_range("row not in system");
    }
};

inline MatchingSystem build_matching_system(const SystemSpec& spec, unsigned k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (spec.signature().has_constant_part()) throw signature_error("matching system needs a system without constant terms");
    const unsigned top = 2 * k + 2;
    MatchingSystem sys;
    sys.k = k;
    for (unsigned j = 3; j <= top; ++j) {
        for (unsigned i = 0; i <= j; ++i) sys.rows.push_back({j, i});
    }
    for (unsigned r = 3; r <= top; ++r) {
        for (unsigned i = 0; i <= r; ++i) sys.cols.push_back({Unknown::Kind::ansatz, r, i});
    }
    for (unsigned kk = 1; kk <= k; ++kk) sys.cols.push_back({Unknown::Kind::focal, kk, 0});

    std::vector<std::size_t> row_start(top + 2, 0);
    for (unsigned j = 3; j <= top; ++j) row_start[j + 1] = row_start[j] + j + 1;
    auto row_index = [&](unsigned j, unsigned i) { return row_start[j] + i; };

    const VectorField field = vector_field(spec);
    const Poly k2 = linear_generators(spec).k2;
    sys.A = PolyMatrix(sys.rows.size(), sys.cols.size());
    sys.C.assign(sys.rows.size(), Poly{});

    auto scatter = [&](const Poly& p, auto&& sink) {
        for (unsigned j = 3; j <= top; ++j) {
            Poly comp = p.phase_component(j);
            if (comp.is_zero()) continue;
            for (unsigned i = 0; i <= j; ++i) {
                Poly c = comp.phase_coefficient(j - i, i);
                if (!c.is_zero()) sink(row_index(j, i), c);
            }
        }
    };

    for (std::size_t col = 0; col < sys.cols.size(); ++col) {
        const Unknown& u = sys.cols[col];
        if (u.kind == Unknown::Kind::ansatz) {
            Poly basis = Poly::term(Monomial::of(var_x, u.degree - u.index) * Monomial::of(var_y, u.index),
                                    Rational(binomial(u.degree, u.index)));
            Poly image = field.P * basis.derivative(var_x) + field.Q * basis.derivative(var_y);
            scatter(image, [&](std::size_t r, const Poly& c) { sys.A(r, col) += c; });
        } else {
            Poly power = -k2.pow(u.degree + 1);
            scatter(power, [&](std::size_t r, const Poly& c) { sys.A(r, col) += c; });
        }
    }
    Poly known = -(field.P * k2.derivative(var_x) + field.Q * k2.derivative(var_y));
    scatter(known, [&](std::size_t r, const Poly& c) { sys.C[r] += c; });
    return sys;
}

// The same system with rows reordered: row i of the result is row perm[i].
inline MatchingSystem permute_rows(const MatchingSystem& sys, const std::vector<std::size_t>& perm) {
    if (perm.size() != sys.rows.size()) throw std::invalid_argument("permutation size mismatch");
    MatchingSystem out = sys;
    out.A = sys.A.select_rows(perm);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.rows[i] = sys.rows[perm[i]];
        out.C[i] = sys.C[perm[i]];
    }
    return out;
}

// Coefficients of x^2, xy, y^2 in L(k2): the equations that force c + f = 0.
inline std::vector<Poly> degree_two_block(const SystemSpec& spec) {
    const VectorField lin = component_field(spec, spec.signature().linear_index());
    const Poly k2 = linear_generators(spec).k2;
    const Poly img = lin.P * k2.derivative(var_x) + lin.Q * k2.derivative(var_y);
    return {img.phase_coefficient(2, 0), img.phase_coefficient(1, 1), img.phase_coefficient(0, 2)};
}

// Free unknown per even degree 4..2k+2, as indices into that degree's F block.
struct FreeChoice {
    std::map<unsigned, unsigned> index_by_degree;

    static FreeChoice defaults(unsigned k) {
        FreeChoice f;
        for (unsigned j = 4; j <= 2 * k + 2; j += 2) f.index_by_degree[j] = default_free_index(j);
        return f;
    }

    // Parses "b2,d3" (letter = degree - 3 + 'a'); unspecified degrees keep defaults.
    static FreeChoice parse(std::string_view text, unsigned k) {
        FreeChoice f = defaults(k);
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string item(text.substr(pos, end - pos));
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
            if (item.size() < 2 || !std::isalpha(static_cast<unsigned char>(item[0]))) {
                throw std::invalid_argument("bad free parameter '" + item + "'");
            }
            const unsigned degree = static_cast<unsigned>(item[0] - 'a') + 3;
            unsigned idx = 0;
            try {
                idx = static_cast<unsigned>(std::stoul(item.substr(1)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad free parameter '" + item + "'");
            }
            if (degree % 2 != 0 || degree < 4 || degree > 2 * k + 2 || idx > degree) {
                throw std::invalid_argument("free parameter '" + item + "' is not an even-degree unknown of this system");
            }
            f.index_by_degree[degree] = idx;
            pos = end + 1;
        }
        return f;
    }

    std::vector<Unknown> unknowns() const {
        std::vector<Unknown> out;
        for (auto [d, i] : index_by_degree) out.push_back({Unknown::Kind::ansatz, d, i});
        return out;
    }

    KernelNormalization as_normalization() const { return KernelNormalization::monomial(index_by_degree); }
};

// G_k = (numerator_core + sum_f free_terms[f] * f) / sigma.
struct PseudoQuantitySolution {
    unsigned k = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    Poly numerator_core;
    std::map<std::string, Poly> free_terms;
    Poly sigma;
    std::vector<std::string> chosen_free;

    // G_k with every free parameter set to zero; requires sigma constant.
    Rational value_at_zero_free() const {
        const Rational s = sigma.constant_value();
        if (s == 0) throw degenerate_point("sigma vanishes", std::nullopt);
        return numerator_core.constant_value() / s;
    }
};

namespace detail {

template <class T>
struct CramerParts {
    std::vector<std::size_t> kept;  // columns of the square system
    std::size_t gk_position = 0;    // position of G_k among kept
    std::vector<std::size_t> free_cols;
};

inline CramerParts<Poly> cramer_layout(const MatchingSystem& sys, const FreeChoice& free) {
    if (free.index_by_degree.size() != sys.k) throw std::invalid_argument("need one free unknown per even degree 4..2k+2");
    CramerParts<Poly> parts;
    std::vector<bool> is_free(sys.cols.size(), false);
    for (const Unknown& u : free.unknowns()) {
        std::size_t c = sys.column_of(u);
        is_free[c] = true;
        parts.free_cols.push_back(c);
    }
    const std::size_t gk = sys.column_of(Unknown{Unknown::Kind::focal, sys.k, 0});
    for (std::size_t c = 0; c < sys.cols.size(); ++c) {
        if (is_free[c]) continue;
        if (c == gk) parts.gk_position = parts.kept.size();
        parts.kept.push_back(c);
    }
    return parts;
}

template <class M, class Vec, class Det>
auto cramer(const MatchingSystem& sys, const M& a, const Vec& c, const FreeChoice& free, Det det) {
    auto parts = cramer_layout(sys, free);
    M square = a.select_cols(parts.kept);
    auto sigma = det(square);
    M num = square;
    num.set_col(parts.gk_position, c);
    auto core = det(num);
    std::vector<decltype(sigma)> free_terms;
    for (std::size_t fc : parts.free_cols) {
        M t = square;
        t.set_col(parts.gk_position, a.col(fc));
        free_terms.push_back(-det(t));
    }
    return std::make_tuple(std::move(core), std::move(free_terms), std::move(sigma));
}

inline std::vector<Rational> evaluate(const std::vector<Poly>& v, std::span<const Rational> pt) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.evaluate(pt));
    return out;
}

inline std::vector<Rational> point_of(const SystemSpec& spec) {
    if (!spec.fully_concrete()) throw std::invalid_argument("point mode needs every coefficient concrete");
    std::vector<Rational> pt(spec.vars().size());
    for (std::size_t i = 0; i < spec.slots().size(); ++i) pt[spec.slots()[i].var.index] = *spec.value(i);
    return pt;
}

}  // namespace detail

namespace detail {

// Adjugate of a square polynomial matrix, by cofactors.
inline PolyMatrix adjugate(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t i = 0, ii = 0; i < n; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0, jj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(ii, jj++) = m(i, j);
                }
                ++ii;
            }
            Poly d = determinant(std::move(minor));
            adj(c, r) = (r + c) % 2 ? -d : d;
        }
    }
    return adj;
}

inline unsigned home_degree(const Unknown& u) { return u.kind == Unknown::Kind::ansatz ? u.degree : 2 * u.degree + 2; }

// The square Cramer matrix is block lower triangular by degree: the diagonal
// block of degree j holds the degree-j rows and the unknowns living in that
// degree, and depends on the linear part only. Solving block by block with
// adjugates yields the same Cramer numerators as full elimination.
class BlockSolver {
public:
    BlockSolver(const MatchingSystem& sys, const std::vector<std::size_t>& kept) : sys_(sys), kept_(kept) {
        for (std::size_t r = 0; r < sys.rows.size(); ++r) row_block_[sys.rows[r].degree].push_back(r);
        for (std::size_t p = 0; p < kept.size(); ++p) col_block_[home_degree(sys.cols[kept[p]])].push_back(p);
        for (const auto& [deg, rows] : row_block_) {
            const auto& cols = col_block_[deg];
            if (cols.size() != rows.size()) throw std::logic_error("matching system is not block square");
            PolyMatrix m(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = sys.A(rows[i], kept[cols[j]]);
            }
            for (std::size_t i : rows) {
                for (std::size_t p = 0; p < kept.size(); ++p) {
                    if (home_degree(sys.cols[kept[p]]) > deg && !sys.A(i, kept[p]).is_zero()) {
                        throw std::logic_error("matching system is not block lower triangular");
                    }
                }
            }
            det_[deg] = determinant(m);
            adj_[deg] = adjugate(m);
        }
    }

    // sigma = det of the square system = product of the block determinants.
    Poly sigma() const {
        Poly s = 1;
        for (const auto& [deg, d] : det_) s *= d;
        return s;
    }

    // sigma * (A'^{-1} b)[p] for the kept position p.
    Poly scaled_solution(const std::vector<Poly>& b, std::size_t position) const {
        std::map<std::size_t, Poly> w;  // kept position -> P_{deg} * u
        std::map<unsigned, Poly> prefix;  // deg -> product of block dets up to deg
        Poly running = 1;
        for (const auto& [deg, rows] : row_block_) {
            std::vector<Poly> v(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Budget::check();
                const std::size_t r = rows[i];
                Poly acc = b[r] * running;
                for (const auto& [p, wp] : w) {
                    const Poly& a = sys_.A(r, kept_[p]);
                    if (a.is_zero() || wp.is_zero()) continue;
                    // u_p = wp / prefix[home(p)]; rescale to the running product.
                    const unsigned hd = home_degree(sys_.cols[kept_[p]]);
                    auto q = divide_exact(running, prefix.at(hd));
                    acc -= a * wp * *q;
                }
                v[i] = std::move(acc);
            }
            const PolyMatrix& adj = adj_.at(deg);
            const auto& cols = col_block_.at(deg);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                Poly s;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (!adj(j, i).is_zero() && !v[i].is_zero()) s += adj(j, i) * v[i];
                }
                w[cols[j]] = std::move(s);
            }
            running *= det_.at(deg);
            prefix[deg] = running;
        }
        Poly out = w.at(position);
        const unsigned hd = home_degree(sys_.cols[kept_[position]]);
        return out * *divide_exact(running, prefix.at(hd));
    }

private:
    const MatchingSystem& sys_;
    std::vector<std::size_t> kept_;
    std::map<unsigned, std::vector<std::size_t>> row_block_;
    std::map<unsigned, std::vector<std::size_t>> col_block_;
    std::map<unsigned, Poly> det_;
    std::map<unsigned, PolyMatrix> adj_;
};

inline PseudoQuantitySolution make_solution(const MatchingSystem& sys, const FreeChoice& free, Poly core,
                                            std::vector<Poly> free_terms, Poly sigma) {
    PseudoQuantitySolution sol;
    sol.k = sys.k;
    sol.m = sys.rows.size();
    sol.n = sys.cols.size();
    sol.numerator_core = std::move(core);
    sol.sigma = std::move(sigma);
    auto fu = free.unknowns();
    for (std::size_t i = 0; i < fu.size(); ++i) {
        sol.chosen_free.push_back(fu[i].name());
        sol.free_terms.emplace(fu[i].name(), std::move(free_terms[i]));
    }
    return sol;
}

}  // namespace detail

// Symbolic solution for G_k over the coefficient ring, by block forward
// substitution.
inline PseudoQuantitySolution pseudo_symbolic(const MatchingSystem& sys, const FreeChoice& free) {
    auto parts = detail::cramer_layout(sys, free);
    detail::BlockSolver solver(sys, parts.kept);
    Poly core = solver.scaled_solution(sys.C, parts.gk_position);
    std::vector<Poly> free_terms;
    for (std::size_t fc : parts.free_cols) {
        std::vector<Poly> b = sys.A.col(fc);
        for (auto& e : b) e = -e;
        free_terms.push_back(solver.scaled_solution(b, parts.gk_position));
    }
    return detail::make_solution(sys, free, std::move(core), std::move(free_terms), solver.sigma());
}

inline PseudoQuantitySolution pseudo_symbolic(const SystemSpec& spec, unsigned k, const FreeChoice& free) {
    return pseudo_symbolic(build_matching_system(spec, k), free);
}

// Verbatim Cramer's rule with fraction-free determinants of the full square
// system. Same result as pseudo_symbolic; only practical for k = 1.
inline PseudoQuantitySolution pseudo_symbolic_cramer(const MatchingSystem& sys, const FreeChoice& free) {
    auto [core, free_terms, sigma] =
        detail::cramer(sys, sys.A, sys.C, free, [](const PolyMatrix& m) { return determinant(m); });
    return detail::make_solution(sys, free, std::move(core), std::move(free_terms), std::move(sigma));
}

// The same Cramer determinants evaluated at a concrete system; values come
// back as constant polynomials.
inline PseudoQuantitySolution pseudo_point(const MatchingSystem& sys, std::span<const Rational> point,
                                           const FreeChoice& free) {
    RationalMatrix a = evaluate(sys.A, point);
    std::vector<Rational> c = detail::evaluate(sys.C, point);
    auto [core, free_terms, sigma] =
        detail::cramer(sys, a, c, free, [](const RationalMatrix& m) { return determinant(m); });
    std::vector<Poly> ft(free_terms.begin(), free_terms.end());
    return detail::make_solution(sys, free, Poly(core), std::move(ft), Poly(sigma));
}

inline PseudoQuantitySolution pseudo_point(const SystemSpec& concrete, unsigned k, const FreeChoice& free) {
    // Build over the symbolic ring once, then evaluate.
    const SystemSpec generic = build_generic(concrete.signature());
    MatchingSystem sys = build_matching_system(generic, k);
    const auto pt = detail::point_of(concrete);
    PseudoQuantitySolution sol = pseudo_point(sys, pt, free);
    if (sol.sigma.is_zero()) {
        // Locate an inconsistent row, if any, with the free unknowns at zero.
        RationalMatrix a = evaluate(sys.A, pt);
        auto parts = detail::cramer_layout(sys, free);
        RationalMatrix aug(a.rows(), parts.kept.size() + 1);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t j = 0; j < parts.kept.size(); ++j) aug(r, j) = a(r, parts.kept[j]);
            aug(r, parts.kept.size()) = sys.C[r].evaluate(pt);
        }
        RationalMatrix red = aug;
        auto piv = row_reduce(red);
        std::optional<std::size_t> bad;
        if (!piv.empty() && piv.back() == parts.kept.size()) bad = piv.size() - 1;
        throw degenerate_point("sigma vanishes at this point (degenerate linear part or free choice); resample", bad);
    }
    return sol;
}

// Scalar G_k at a concrete system with the free unknowns at zero.
inline Rational pseudo_value(const MatchingSystem& sys, std::span<const Rational> point, const FreeChoice& free) {
    return pseudo_point(sys, point, free).value_at_zero_free();
}

inline Poly null_pseudo_quantity(const SystemSpec& spec) { return linear_generators(spec).i1; }

struct StructureReport {
    unsigned k = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    unsigned N = 0;
    std::vector<ComitantType> types;
};

// Closed forms for s(1,2) and s(1,2,3); m and n come from the row builder's count.
inline StructureReport structure(const Signature& sig, unsigned k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const auto& d = sig.degrees();
    const bool s12 = d == std::vector<unsigned>{1, 2};
    const bool s123 = d == std::vector<unsigned>{1, 2, 3};
    if (!s12 && !s123) throw signature_error("closed-form structure is only available for s(1,2) and s(1,2,3)");
    StructureReport r;
    r.k = k;
    auto dims = matching_dimensions(k);
    r.m = dims.equations;
    r.n = dims.unknowns;
    r.N = (5 * k * k + 13 * k + 2) / 2;
    const unsigned lin = (5 * k * k + 9 * k + 2) / 2;
    if (s12) {
        r.types.push_back({2 * (k + 1), {lin, 2 * k}});
    } else {
        for (unsigned i = 0; i <= k; ++i) r.types.push_back({2 * (k + 1), {lin + i, 2 * (k - i), i}});
    }
    return r;
}

// Splits p into parts homogeneous in the phase variables and in each
// coefficient block.
inline std::map<ComitantType, Poly> grade_split(const Poly& p, const SystemSpec& spec) {
    const auto groups = spec.type_groups();
    std::map<ComitantType, std::vector<Poly::Term>> parts;
    for (const auto& t : p.terms()) {
        ComitantType ty;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            unsigned deg = 0;
            for (VarId v : groups[g]) deg += t.first.exponent(v);
            if (g == 0) {
                ty.delta = deg;
            } else {
                ty.d.push_back(deg);
            }
        }
        parts[ty].push_back(t);
    }
    std::map<ComitantType, Poly> out;
    for (auto& [ty, ts] : parts) out.emplace(ty, Poly::from_terms(std::move(ts)));
    return out;
}

// Cramer numerator divided by its positive integer content, with the free
// companion terms scaled alike.
struct NormalizedQuantity {
    Poly numerator;
    std::map<std::string, Poly> free_terms;
    Rational scale;
};

inline NormalizedQuantity normalize(const PseudoQuantitySolution& sol) {
    if (sol.numerator_core.is_zero()) throw std::domain_error("numerator vanishes identically");
    NormalizedQuantity out;
    out.scale = abs(sol.numerator_core.content());
    out.numerator = sol.numerator_core / out.scale;
    for (const auto& [name, p] : sol.free_terms) out.free_terms.emplace(name, p / out.scale);
    return out;
}

struct RestrictionReport {
    Rational ratio;  // numerator|V = ratio * L_k
    bool numerator_vanishes = false;
};

// Restricts a normalized numerator to the variety chart (free parameters 0)
// and divides by L_k; a non-constant quotient is an engine failure.
inline RestrictionReport restrict_check(const NormalizedQuantity& q, const SystemSpec& spec, const Poly& lk) {
    std::map<VarId, Poly> sub;
    for (const auto& [name, v] : variety_point()) sub.emplace(spec.slot(name).var, Poly(v));
    const Poly restricted = q.numerator.substitute(sub);
    RestrictionReport r;
    if (restricted.is_zero()) {
        r.numerator_vanishes = true;
        r.ratio = 0;
        return r;
    }
    if (lk.is_zero()) throw std::logic_error("restricted numerator is nonzero while L_k vanishes");
    auto quot = divide_exact(restricted, lk);
    if (!quot || !quot->is_constant()) throw std::logic_error("restricted numerator is not a constant multiple of L_k");
    r.ratio = quot->constant_value();
    return r;
}

// The five k = 1 numerators G_{1,0..4} (free unknown b_i in turn), their D3
// chain, and the degree-4 comitant rebuilt from G_{1,0}.
struct ChainReport {
    std::vector<NormalizedQuantity> G;
    std::vector<Rational> link;     // D3(G_i) = link[i] * G_{i+1}
    std::vector<Rational> weights;  // comitant = sum weights[i] G_i x^(4-i) y^i
    Poly comitant;
    ComitantVerdict verdict;
};

inline ChainReport semi_invariant_chain(const SystemSpec& spec, const Operators& ops) {
    if (spec.signature().degrees() != std::vector<unsigned>{1, 2}) throw signature_error("chain check is defined for s(1,2)");
    if (!spec.fully_symbolic()) throw std::invalid_argument("chain check needs the symbolic system");
    const MatchingSystem sys = build_matching_system(spec, 1);
    ChainReport rep;
    for (unsigned i = 0; i <= 4; ++i) {
        FreeChoice f;
        f.index_by_degree[4] = i;
        rep.G.push_back(normalize(pseudo_symbolic(sys, f)));
    }
    for (unsigned i = 0; i < 4; ++i) {
        const Poly d = ops.D[2](rep.G[i].numerator);
        const Poly& next = rep.G[i + 1].numerator;
        const Rational lambda = d.is_zero() ? Rational(0) : d.leading_term().second / next.leading_term().second;
        if (d != next * lambda) throw std::logic_error("D3 does not map G_" + std::to_string(i) + " onto a multiple of the next numerator");
        rep.link.push_back(lambda);
    }
    rep.comitant = reconstruct_from_semi_invariant(rep.G[0].numerator, 4, ops);
    for (unsigned i = 0; i <= 4; ++i) {
        const Poly c = rep.comitant.phase_coefficient(4 - i, i);
        const Poly& g = rep.G[i].numerator;
        const Rational w = c.is_zero() ? Rational(0) : c.leading_term().second / g.leading_term().second;
        if (c != g * w) throw std::logic_error("rebuilt comitant coefficient is not a multiple of G_{1," + std::to_string(i) + "}");
        rep.weights.push_back(w);
    }
    rep.verdict = is_comitant(rep.comitant, spec, ops);
    return rep;
}

// den * sum weights[i] (G_i + B_i b_i) x^(4-i) y^i for free values b_i =
// b_numerators[i] / den, the chain weights taken from the b = 0 solution.
inline Poly comitant_with_free_values(const ChainReport& chain, const std::vector<Poly>& b_numerators, const Poly& den) {
    if (b_numerators.size() != 5) throw std::invalid_argument("need five free values");
    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    Poly f;
    for (unsigned i = 0; i <= 4; ++i) {
        const auto& g = chain.G[i];
        const Poly& companion = g.free_terms.begin()->second;
        Poly coeff = g.numerator * den + companion * b_numerators[i];
        f += coeff * chain.weights[i] * x.pow(4 - i) * y.pow(i);
    }
    return f;
}

// --- scaling probes -------------------------------------------------------

// Cramer numerator at a concrete point (free unknowns zero).
inline Rational numerator_at(const MatchingSystem& sys, std::span<const Rational> point, const FreeChoice& free) {
    Budget::check();
    return pseudo_point(sys, point, free).numerator_core.constant_value();
}

// Multiplies the coefficients of component b by t^weights[b].
inline std::vector<Rational> scale_components(const SystemSpec& spec, std::vector<Rational> point,
                                              const std::vector<unsigned>& weights, const Rational& t) {
    for (const auto& s : spec.slots()) point[s.var.index] *= rational_pow(t, static_cast<int>(weights.at(s.component)));
    return point;
}

// Upper bound on the t-degree of the numerator under the scaling above: the
// sum over the columns of the largest entry degree.
inline unsigned numerator_degree_bound(const MatchingSystem& sys, const SystemSpec& spec, const FreeChoice& free,
                                       const std::vector<unsigned>& weights) {
    std::vector<unsigned> w_of(spec.vars().size(), 0);
    for (const auto& s : spec.slots()) w_of[s.var.index] = weights.at(s.component);
    auto deg = [&](const Poly& p) {
        unsigned best = 0;
        for (const auto& [m, c] : p.terms()) {
            unsigned d = 0;
            auto ex = m.exponents();
            for (std::size_t i = 0; i < ex.size(); ++i) d += ex[i] * w_of[i];
            best = std::max(best, d);
        }
        return best;
    };
    auto parts = detail::cramer_layout(sys, free);
    unsigned total = 0;
    for (std::size_t p = 0; p < parts.kept.size(); ++p) {
        unsigned best = 0;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            best = std::max(best, deg(p == parts.gk_position ? sys.C[r] : sys.A(r, parts.kept[p])));
        }
        total += best;
    }
    return total;
}

// Exponents e (with nonzero coefficient) of t in t -> numerator(point scaled
// by t^weights), recovered exactly by interpolation at t = 1..bound+1.
inline std::map<unsigned, Rational> scaling_profile(const MatchingSystem& sys, const SystemSpec& spec,
                                                    const std::vector<Rational>& point, const FreeChoice& free,
                                                    const std::vector<unsigned>& weights) {
    const unsigned bound = numerator_degree_bound(sys, spec, free, weights);
    const std::size_t n = bound + 1;
    RationalMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational t(static_cast<long>(i + 1));
        Rational p = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = p;
            p *= t;
        }
        m(i, n) = numerator_at(sys, scale_components(spec, point, weights, t), free);
    }
    row_reduce(m);
    std::map<unsigned, Rational> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, n) != 0) out.emplace(static_cast<unsigned>(i), m(i, n));
    }
    return out;
}

// Torus probe: numerator(s^{w1(v)} t^{w2(v)} v) / numerator(v) at (s, t) =
// (2, 1) and (1, 2) must be exact powers of two; returns the isobarity pair
// in the convention of isobarity_of, or nullopt when either ratio is not a
// power of two (not isobaric at this point).
inline std::optional<IsobarityPair> torus_probe(const MatchingSystem& sys, const SystemSpec& spec,
                                                const std::vector<Rational>& point, const FreeChoice& free,
                                                const Operators& ops) {
    const auto tw = torus_weights(spec, ops);
    const Rational base = numerator_at(sys, point, free);
    if (base == 0) return std::nullopt;
    auto exponent = [&](bool first) -> std::optional<int> {
        std::vector<Rational> pt = point;
        for (const auto& [v, w] : tw) {
            const int e = first ? w.first : w.second;
            pt[v.index] *= rational_pow(Rational(2), e);
        }
        Rational r = numerator_at(sys, pt, free) / base;
        int e = 0;
        if (r <= 0) return std::nullopt;
        while (r.get_den() != 1) {
            r *= 2;
            --e;
        }
        while (r.get_num() % 2 == 0 && r != 1) {
            r /= 2;
            ++e;
        }
        if (r != 1) return std::nullopt;
        return e;
    };
    auto a = exponent(true);
    auto b = exponent(false);
    if (!a || !b) return std::nullopt;
    return IsobarityPair{-*a, -*b};
}

// A generic concrete point of the signature (every slot a seeded random rational).
inline std::vector<Rational> random_point(const SystemSpec& spec, RationalSampler& rng) {
    std::vector<Rational> pt(spec.vars().size());
    for (const auto& s : spec.slots()) pt[s.var.index] = rng.next_nonzero();
    return pt;
}

}  // namespace cf

#endif  // CENTERFOCUS_MATCHING_HPP
