#pragma once

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ricci {

using Exponents = std::vector<int>;

/// Graded-lexicographic term order: lower total degree first, ties broken
/// lexicographically. Gives every polynomial one canonical serialization.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Exponents may be negative during construction (the flow right-hand sides
/// are Laurent before the clearing factor is applied); is_polynomial()
/// reports whether all stored exponents are nonnegative.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    explicit MultiPoly(int vars = 0) : vars_(vars) {}

    static MultiPoly constant(int vars, const Rational& c);
    static MultiPoly variable(int vars, int index);
    static MultiPoly monomial(int vars, Exponents exps, const Rational& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Max total degree over terms; 0 for the zero polynomial.
    int total_degree() const;
    bool is_polynomial() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    bool operator==(const MultiPoly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }

    MultiPoly derivative(int var) const;

    /// Multiply by c * x^exps (exps may be negative).
    MultiPoly shifted(const Exponents& exps, const Rational& c) const;

    /// Substitute x_i -> c_i * prod_j y_j^{sub[i][j]}; each source monomial
    /// maps to a single target monomial, so the result stays sparse.
    MultiPoly substitute_monomials(int target_vars,
                                   const std::vector<std::pair<Rational, Exponents>>& subs) const;

    /// Set variable `var` to zero: drop terms with positive exponent, reject
    /// negative ones, and delete the variable slot from the remaining terms.
    MultiPoly eliminate_variable(int var) const;

    /// Exact coefficient-wise max |.|; 0 for the zero polynomial.
    Rational max_abs_coefficient() const;

    void add_term(const Exponents& exps, const Rational& c);

    template <typename Real>
    Real evaluate(std::span<const Real> x) const
    {
        Real acc = 0;
        for (const auto& [e, c] : terms_) {
            Real t = static_cast<Real>(c.template convert_to<long double>());
            for (int i = 0; i < vars_; ++i) {
                int p = e[i];
                if (p == 0) continue;
                Real b = x[static_cast<std::size_t>(i)];
                Real pw = 1;
                int ap = p < 0 ? -p : p;
                while (ap-- > 0) pw *= b;
                t = p < 0 ? t / pw : t * pw;
            }
            acc += t;
        }
        return acc;
    }

private:
    int vars_;
    TermMap terms_;
};

/// One polynomial per coordinate; the right-hand side of an autonomous system.
struct PolyVectorField {
    int vars = 0;
    std::vector<MultiPoly> components;

    PolyVectorField() = default;
    PolyVectorField(int v, std::vector<MultiPoly> comps);

    int degree() const;
    bool homogeneous() const;

    template <typename Real>
    std::vector<Real> evaluate(std::span<const Real> x) const
    {
        std::vector<Real> out;
        out.reserve(components.size());
        for (const auto& p : components) out.push_back(p.evaluate<Real>(x));
        return out;
    }

    /// Divide every component by its own max |coefficient| (exact).
    PolyVectorField normalized() const;

    /// Reorder variables and components by `perm` (new index i holds old perm[i]).
    PolyVectorField permuted(const std::vector<int>& perm) const;
};

/// The single rational c with a == c*b, if it exists (exact comparison).
std::optional<Rational> proportionality_constant(const MultiPoly& a, const MultiPoly& b);

/// One global constant across all components.
std::optional<Rational> proportionality_constant(const PolyVectorField& a, const PolyVectorField& b);

void to_json(nlohmann::json& j, const MultiPoly& p);
void from_json(const nlohmann::json& j, MultiPoly& p);
void to_json(nlohmann::json& j, const PolyVectorField& f);
void from_json(const nlohmann::json& j, PolyVectorField& f);

/// Flattened coefficient list for fast repeated evaluation.
template <typename Real>
struct CompiledPoly {
    struct Term {
        Real coeff;
        std::vector<int> exps;
    };
    int vars = 0;
    std::vector<Term> terms;

    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p)
        : vars(p.vars())
    {
        terms.reserve(p.term_count());
        for (const auto& [e, c] : p.terms())
            terms.push_back({static_cast<Real>(c.template convert_to<long double>()), e});
    }

    Real evaluate(std::span<const Real> x) const
    {
        Real acc = 0;
        for (const auto& t : terms) {
            Real v = t.coeff;
            for (int i = 0; i < vars; ++i) {
                int p = t.exps[i];
                Real pw = 1;
                int ap = p < 0 ? -p : p;
                while (ap-- > 0) pw *= x[static_cast<std::size_t>(i)];
                if (p < 0) v /= pw; else v *= pw;
            }
            acc += v;
        }
        return acc;
    }
};

}  // namespace ricci
