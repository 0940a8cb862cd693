#include "ricci/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace ricci {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int vars, const Rational& c)
{
    MultiPoly p(vars);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int vars, int index)
{
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(vars, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int vars, Exponents exps, const Rational& c)
{
    MultiPoly p(vars);
    p.add_term(exps, c);
    return p;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const
{
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0L)));
    return d;
}

bool MultiPoly::is_polynomial() const
{
    for (const auto& [e, c] : terms_)
        for (int p : e)
            if (p < 0) return false;
    return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const
{
    MultiPoly out(vars_);
    Exponents e(static_cast<std::size_t>(vars_), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::derivative(int var) const
{
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        const int p = e[static_cast<std::size_t>(var)];
        if (p == 0) continue;
        Exponents ne = e;
        ne[static_cast<std::size_t>(var)] = p - 1;
        out.add_term(ne, c * p);
    }
    return out;
}

MultiPoly MultiPoly::shifted(const Exponents& exps, const Rational& c) const
{
    MultiPoly out(vars_);
    for (const auto& [e, v] : terms_) {
        Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += exps[i];
        out.add_term(ne, v * c);
    }
    return out;
}

MultiPoly MultiPoly::substitute_monomials(int target_vars,
                                          const std::vector<std::pair<Rational, Exponents>>& subs) const
{
    MultiPoly out(target_vars);
    for (const auto& [e, v] : terms_) {
        Exponents ne(static_cast<std::size_t>(target_vars), 0);
        Rational nc = v;
        for (int i = 0; i < vars_; ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            const auto& [sc, se] = subs[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < ne.size(); ++j) ne[j] += p * se[j];
            Rational pw = 1;
            for (int a = 0; a < (p < 0 ? -p : p); ++a) pw *= sc;
            if (p < 0)
                nc /= pw;
            else
                nc *= pw;
        }
        out.add_term(ne, nc);
    }
    return out;
}

MultiPoly MultiPoly::eliminate_variable(int var) const
{
    MultiPoly out(vars_ - 1);
    for (const auto& [e, c] : terms_) {
        const int p = e[static_cast<std::size_t>(var)];
        if (p > 0) continue;
        if (p < 0) throw NonPolynomialResult("eliminate_variable: negative exponent at the deleted slot");
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (int i = 0; i < vars_; ++i)
            if (i != var) ne.push_back(e[static_cast<std::size_t>(i)]);
        out.add_term(ne, c);
    }
    return out;
}

Rational MultiPoly::max_abs_coefficient() const
{
    Rational m = 0;
    for (const auto& [e, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

PolyVectorField::PolyVectorField(int v, std::vector<MultiPoly> comps)
    : vars(v), components(std::move(comps))
{
    for (const auto& c : components)
        if (c.vars() != vars)
            throw DegreeMismatch("PolyVectorField: component variable count mismatch");
}

int PolyVectorField::degree() const
{
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.total_degree());
    return d;
}

bool PolyVectorField::homogeneous() const
{
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        long d0 = -1;
        for (const auto& [e, v] : c.terms()) {
            const long d = std::accumulate(e.begin(), e.end(), 0L);
            if (d0 < 0) d0 = d;
            else if (d != d0) return false;
        }
    }
    return true;
}

PolyVectorField PolyVectorField::normalized() const
{
    PolyVectorField out;
    out.vars = vars;
    for (const auto& c : components) {
        const Rational m = c.max_abs_coefficient();
        MultiPoly p = c;
        if (m != 0) p *= Rational(1) / m;
        out.components.push_back(std::move(p));
    }
    return out;
}

PolyVectorField PolyVectorField::permuted(const std::vector<int>& perm) const
{
    // new variable i corresponds to old variable perm[i]
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<std::pair<Rational, Exponents>> subs;
    for (int old = 0; old < vars; ++old) {
        Exponents e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(inv[static_cast<std::size_t>(old)])] = 1;
        subs.emplace_back(Rational(1), std::move(e));
    }
    PolyVectorField out;
    out.vars = vars;
    out.components.resize(static_cast<std::size_t>(vars), MultiPoly(vars));
    for (int i = 0; i < vars; ++i)
        out.components[static_cast<std::size_t>(i)] =
            components[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].substitute_monomials(vars, subs);
    return out;
}

std::optional<Rational> proportionality_constant(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars() != b.vars()) return std::nullopt;
    if (a.is_zero() && b.is_zero()) return Rational(1);
    if (a.term_count() != b.term_count()) return std::nullopt;
    std::optional<Rational> c;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        const Rational r = ia->second / ib->second;
        if (!c)
            c = r;
        else if (*c != r)
            return std::nullopt;
    }
    return c;
}

std::optional<Rational> proportionality_constant(const PolyVectorField& a, const PolyVectorField& b)
{
    if (a.components.size() != b.components.size()) return std::nullopt;
    std::optional<Rational> c;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        auto ci = proportionality_constant(a.components[i], b.components[i]);
        if (!ci) return std::nullopt;
        if (a.components[i].is_zero()) continue;
        if (!c)
            c = *ci;
        else if (*c != *ci)
            return std::nullopt;
    }
    return c ? c : std::optional<Rational>(Rational(1));
}

void to_json(nlohmann::json& j, const MultiPoly& p)
{
    j = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        j.push_back({{"exponents", e},
                     {"numerator", numerator(c).str()},
                     {"denominator", denominator(c).str()}});
    }
}

void from_json(const nlohmann::json& j, MultiPoly& p)
{
    int vars = 0;
    if (!j.empty()) vars = static_cast<int>(j.front().at("exponents").size());
    p = MultiPoly(vars);
    for (const auto& t : j) {
        Exponents e = t.at("exponents").get<Exponents>();
        const BigInt num(t.at("numerator").get<std::string>());
        const BigInt den(t.at("denominator").get<std::string>());
        p.add_term(e, Rational(num, den));
    }
}

void to_json(nlohmann::json& j, const PolyVectorField& f)
{
    j = nlohmann::json{{"vars", f.vars}, {"components", nlohmann::json::array()}};
    for (const auto& c : f.components) {
        nlohmann::json jc;
        to_json(jc, c);
        j["components"].push_back(std::move(jc));
    }
}

void from_json(const nlohmann::json& j, PolyVectorField& f)
{
    f.vars = j.at("vars").get<int>();
    f.components.clear();
    for (const auto& jc : j.at("components")) {
        MultiPoly p(f.vars);
        from_json(jc, p);
        if (p.vars() == 0 && f.vars > 0) p = MultiPoly(f.vars);
        f.components.push_back(std::move(p));
    }
}

}  // namespace ricci
