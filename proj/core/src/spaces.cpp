#include "ricci/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ricci {

namespace {

std::array<int, 3> sorted_key(int i, int j, int k)
{
    std::array<int, 3> a{i, j, k};
    std::sort(a.begin(), a.end());
    return a;
}

[[noreturn]] void bad_param(const std::string& what) { throw ParameterOutOfRange(what); }

int parse_int(std::string_view s, std::string_view ctx)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParameterOutOfRange("cannot parse integer '" + std::string(s) + "' in " + std::string(ctx));
    return v;
}

// "k=2,l=3" -> {{"k",2},{"l",3}}
std::map<std::string, int, std::less<>> parse_kv(std::string_view s, std::string_view ctx)
{
    std::map<std::string, int, std::less<>> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        std::string_view item = s.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParameterOutOfRange("expected name=value in '" + std::string(ctx) + "'");
        out.emplace(std::string(item.substr(0, eq)), parse_int(item.substr(eq + 1), ctx));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

int require(const std::map<std::string, int, std::less<>>& kv, const char* name, std::string_view ctx)
{
    auto it = kv.find(name);
    if (it == kv.end())
        throw ParameterOutOfRange("missing parameter '" + std::string(name) + "' in " + std::string(ctx));
    return it->second;
}

// Table 2 values, exact. GWS.5 dims carry the corrected d2 = 2(l-1); as
// printed (2(l+1)) the products a_i*d_i disagree and the dimension count of
// SO(2l)/U(1)xU(l-1) fails.
void gws_dims_a(const SpaceSpec::Gws& g, std::vector<long long>& d, std::array<Rational, 3>& a)
{
    const long long k = g.k, l = g.l, m = g.m;
    switch (g.id) {
    case 1:
        d = {k * l, k * m, l * m};
        a = {Rational(m, 2 * (k + l + m - 2)), Rational(l, 2 * (k + l + m - 2)), Rational(k, 2 * (k + l + m - 2))};
        break;
    case 2:
        d = {2 * k * l, 2 * k * m, 2 * l * m};
        a = {Rational(m, 2 * (k + l + m)), Rational(l, 2 * (k + l + m)), Rational(k, 2 * (k + l + m))};
        break;
    case 3:
        d = {4 * k * l, 4 * k * m, 4 * l * m};
        a = {Rational(m, 2 * (k + l + m + 1)), Rational(l, 2 * (k + l + m + 1)), Rational(k, 2 * (k + l + m + 1))};
        break;
    case 4:
        d = {l * (l - 1), l * (l + 1), l * l - 1};
        a = {Rational(l + 1, 4 * l), Rational(l - 1, 4 * l), Rational(1, 4)};
        break;
    case 5:
        d = {2 * (l - 1), 2 * (l - 1), (l - 1) * (l - 2)};
        a = {Rational(l - 2, 4 * (l - 1)), Rational(l - 2, 4 * (l - 1)), Rational(1, 2 * (l - 1))};
        break;
    case 6:  d = {16, 16, 24}; a = {Rational(1, 4), Rational(1, 4), Rational(1, 6)}; break;
    case 7:  d = {16, 16, 16}; a = {Rational(1, 6), Rational(1, 6), Rational(1, 6)}; break;
    case 8:  d = {14, 28, 12}; a = {Rational(1, 4), Rational(1, 8), Rational(7, 24)}; break;
    case 9:  d = {32, 32, 32}; a = {Rational(2, 9), Rational(2, 9), Rational(2, 9)}; break;
    case 10: d = {30, 40, 24}; a = {Rational(2, 9), Rational(1, 6), Rational(5, 18)}; break;
    case 11: d = {35, 35, 35}; a = {Rational(5, 18), Rational(5, 18), Rational(5, 18)}; break;
    case 12: d = {64, 64, 48}; a = {Rational(1, 5), Rational(1, 5), Rational(4, 15)}; break;
    case 13: d = {64, 64, 64}; a = {Rational(4, 15), Rational(4, 15), Rational(4, 15)}; break;
    case 14: d = {8, 8, 20};   a = {Rational(5, 18), Rational(5, 18), Rational(1, 9)}; break;
    case 15: d = {8, 8, 8};    a = {Rational(1, 9), Rational(1, 9), Rational(1, 9)}; break;
    default: throw UnknownSpace("gws id " + std::to_string(g.id));
    }
}

struct FlagConstants {
    std::array<long long, 4> dims;
    Rational A224, A112, A123, A134;
};

FlagConstants flag_constants(FlagId id)
{
    switch (id) {
    case FlagId::F4:   return {{12, 18, 4, 6},   Rational(2),      Rational(2),  Rational(1), Rational(2, 3)};
    case FlagId::E7:   return {{48, 36, 16, 6},  Rational(2),      Rational(8),  Rational(4), Rational(4, 3)};
    case FlagId::E8a3: return {{96, 60, 32, 6},  Rational(2),      Rational(16), Rational(8), Rational(8, 5)};
    case FlagId::E8a6: return {{84, 70, 28, 14}, Rational(14, 3),  Rational(14), Rational(7), Rational(14, 5)};
    }
    throw UnknownSpace("flag id");
}

std::string flag_key(FlagId id)
{
    switch (id) {
    case FlagId::F4:   return "f4";
    case FlagId::E7:   return "e7";
    case FlagId::E8a3: return "e8a3";
    case FlagId::E8a6: return "e8a6";
    }
    throw UnknownSpace("flag id");
}

}  // namespace

SpaceSpec SpaceSpec::gws(int id, int k, int l, int m) { return {Gws{id, k, l, m}}; }
SpaceSpec SpaceSpec::v2(int n) { return {StiefelV2{n}}; }
SpaceSpec SpaceSpec::stiefel_block(int k2, int k3) { return {StiefelBlock{k2, k3}}; }
SpaceSpec SpaceSpec::flag(FlagId id) { return {Flag4{id}}; }

SpaceSpec SpaceSpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (head.starts_with("gws")) {
        const int id = parse_int(head.substr(3), text);
        Gws g{id, 0, 0, 0};
        if (id >= 1 && id <= 3) {
            auto kv = parse_kv(tail, text);
            g.k = require(kv, "k", text);
            g.l = require(kv, "l", text);
            g.m = require(kv, "m", text);
        } else if (id == 4 || id == 5) {
            auto kv = parse_kv(tail, text);
            g.l = require(kv, "l", text);
        } else if (!tail.empty()) {
            throw ParameterOutOfRange("family '" + std::string(head) + "' takes no parameters");
        }
        return {g};
    }
    if (head == "v2") {
        auto kv = parse_kv(tail, text);
        return v2(require(kv, "n", text));
    }
    if (head == "stiefel") {
        auto kv = parse_kv(tail, text);
        return stiefel_block(require(kv, "k2", text), require(kv, "k3", text));
    }
    if (head == "flag") {
        if (tail == "f4") return flag(FlagId::F4);
        if (tail == "e7") return flag(FlagId::E7);
        if (tail == "e8a3") return flag(FlagId::E8a3);
        if (tail == "e8a6") return flag(FlagId::E8a6);
        throw UnknownSpace("unknown flag '" + std::string(tail) + "'");
    }
    throw UnknownSpace("cannot parse space '" + std::string(text) + "'");
}

std::string SpaceSpec::canonical() const
{
    std::ostringstream os;
    if (const auto* g = std::get_if<Gws>(&family)) {
        os << "gws" << g->id;
        if (g->id >= 1 && g->id <= 3) os << ":k=" << g->k << ",l=" << g->l << ",m=" << g->m;
        if (g->id == 4 || g->id == 5) os << ":l=" << g->l;
    } else if (const auto* v = std::get_if<StiefelV2>(&family)) {
        os << "v2:n=" << v->n;
    } else if (const auto* s = std::get_if<StiefelBlock>(&family)) {
        os << "stiefel:k2=" << s->k2 << ",k3=" << s->k3;
    } else {
        os << "flag:" << flag_key(std::get<Flag4>(family).id);
    }
    return os.str();
}

Rational IsotropyData::triple(int i, int j, int k) const
{
    auto it = triples.find(sorted_key(i, j, k));
    return it == triples.end() ? Rational(0) : it->second;
}

long long IsotropyData::manifold_dim() const
{
    long long n = 0;
    for (long long d : dims) n += d;
    return n;
}

void validate(const SpaceSpec& spec)
{
    if (const auto* g = std::get_if<SpaceSpec::Gws>(&spec.family)) {
        if (g->id < 1 || g->id > 15) throw UnknownSpace("gws id " + std::to_string(g->id));
        if (g->id >= 1 && g->id <= 3) {
            if (g->k < 1 || g->l < 1 || g->m < 1) bad_param("gws" + std::to_string(g->id) + " requires k,l,m >= 1");
        } else if (g->id == 4) {
            if (g->l < 2) bad_param("gws4 requires l >= 2");
        } else if (g->id == 5) {
            if (g->l < 4) bad_param("gws5 requires l >= 4");
        }
        return;
    }
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family)) {
        if (v->n < 4) bad_param("v2 requires n >= 4");
        return;
    }
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family)) {
        if (s->k2 < 2) bad_param("stiefel requires k2 >= 2");
        if (s->k3 < 1) bad_param("stiefel requires k3 >= 1");
        return;
    }
}

IsotropyData catalog_lookup(const SpaceSpec& spec)
{
    validate(spec);
    IsotropyData iso;

    if (const auto* g = std::get_if<SpaceSpec::Gws>(&spec.family)) {
        std::vector<long long> d;
        std::array<Rational, 3> a;
        gws_dims_a(*g, d, a);
        const Rational A = a[0] * d[0];
        if (A != a[1] * d[1] || A != a[2] * d[2])
            throw Error("catalog inconsistency: a_i*d_i not constant for " + spec.canonical());
        for (const auto& ai : a)
            if (!(ai > 0 && ai <= Rational(1, 2)))
                throw Error("catalog inconsistency: a_i outside (0,1/2] for " + spec.canonical());
        iso.q = 3;
        iso.dims = d;
        iso.triples[{0, 1, 2}] = A;
        iso.wallach_a = a;
        return iso;
    }
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family)) {
        const long long n = v->n;
        iso.q = 3;
        iso.dims = {1, n - 2, n - 2};
        iso.triples[{0, 1, 2}] = Rational(1, 2);
        iso.wallach_a = {Rational(1, 2), Rational(1, 2 * (n - 2)), Rational(1, 2 * (n - 2))};
        return iso;
    }
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family)) {
        // summand order (x_2, x_12, x_13, x_23); k1 = 1, n = 1 + k2 + k3
        const long long k2 = s->k2, k3 = s->k3;
        const long long n2 = k2 + k3 - 1;  // n - 2
        iso.q = 4;
        iso.dims = {k2 * (k2 - 1) / 2, k2, k3, k2 * k3};
        if (k2 >= 3) iso.triples[{0, 0, 0}] = Rational(k2 * (k2 - 1) * (k2 - 2), 2 * n2);
        iso.triples[{0, 1, 1}] = Rational(k2 * (k2 - 1), 2 * n2);
        iso.triples[{0, 3, 3}] = Rational(k2 * k3 * (k2 - 1), 2 * n2);
        iso.triples[{1, 2, 3}] = Rational(k2 * k3, 2 * n2);
        return iso;
    }
    const auto f = flag_constants(std::get<SpaceSpec::Flag4>(spec.family).id);
    iso.q = 4;
    iso.dims.assign(f.dims.begin(), f.dims.end());
    iso.triples[{0, 0, 1}] = f.A112;
    iso.triples[{0, 1, 2}] = f.A123;
    iso.triples[{0, 2, 3}] = f.A134;
    iso.triples[{1, 1, 3}] = f.A224;
    return iso;
}

std::vector<CatalogRow> catalog_rows()
{
    std::vector<CatalogRow> rows;
    rows.push_back({"gws1", "so(k+l+m)/so(k)+so(l)+so(m), k,l,m>=1", "kl, km, lm",
                    "a=(m, l, k)/(2(k+l+m-2))"});
    rows.push_back({"gws2", "su(k+l+m)/su(k)+su(l)+su(m), k,l,m>=1", "2kl, 2km, 2lm",
                    "a=(m, l, k)/(2(k+l+m))"});
    rows.push_back({"gws3", "sp(k+l+m)/sp(k)+sp(l)+sp(m), k,l,m>=1", "4kl, 4km, 4lm",
                    "a=(m, l, k)/(2(k+l+m+1))"});
    rows.push_back({"gws4", "su(2l)/u(l), l>=2", "l(l-1), l(l+1), l^2-1",
                    "a=((l+1)/4l, (l-1)/4l, 1/4)"});
    rows.push_back({"gws5", "so(2l)/u(1)+u(l-1), l>=4", "2(l-1), 2(l-1), (l-1)(l-2)",
                    "a=((l-2)/4(l-1), (l-2)/4(l-1), 1/2(l-1))"});
    const std::array<std::pair<int, const char*>, 10> fixed = {{
        {6, "e6/su(4)+2sp(1)+R"}, {7, "e6/so(8)+R^2"}, {8, "e6/sp(3)+sp(1)"},
        {9, "e7/so(8)+3sp(1)"}, {10, "e7/su(6)+sp(1)+R"}, {11, "e7/so(8)"},
        {12, "e8/so(12)+2sp(1)"}, {13, "e8/so(8)+so(8)"}, {14, "f4/so(5)+2sp(1)"}, {15, "f4/so(8)"},
    }};
    for (const auto& [id, desc] : fixed) {
        const auto iso = catalog_lookup(SpaceSpec::gws(id));
        std::ostringstream dims, consts;
        for (int i = 0; i < 3; ++i) dims << (i ? ", " : "") << iso.dims[static_cast<std::size_t>(i)];
        consts << "a=(";
        for (int i = 0; i < 3; ++i) consts << (i ? ", " : "") << to_string((*iso.wallach_a)[static_cast<std::size_t>(i)]);
        consts << ")";
        rows.push_back({"gws" + std::to_string(id), desc, dims.str(), consts.str()});
    }
    rows.push_back({"v2", "so(n)/so(n-2), n>=4", "1, n-2, n-2", "A_012=1/2"});
    rows.push_back({"stiefel", "so(1+k2+k3)/so(k3), k2>=2, k3>=1",
                    "k2(k2-1)/2, k2, k3, k2*k3",
                    "A_222=k2(k2-1)(k2-2)/2(n-2), A_2(12)(12)=k2(k2-1)/2(n-2), "
                    "A_2(23)(23)=k2k3(k2-1)/2(n-2), A_(12)(13)(23)=k2k3/2(n-2)"});
    for (const FlagId id : {FlagId::F4, FlagId::E7, FlagId::E8a3, FlagId::E8a6}) {
        const auto f = flag_constants(id);
        std::ostringstream dims, consts;
        for (int i = 0; i < 4; ++i) dims << (i ? ", " : "") << f.dims[static_cast<std::size_t>(i)];
        consts << "A_224=" << to_string(f.A224) << ", A_112=" << to_string(f.A112)
               << ", A_123=" << to_string(f.A123) << ", A_134=" << to_string(f.A134);
        rows.push_back({"flag:" + flag_key(id), "four-summand flag manifold", dims.str(), consts.str()});
    }
    return rows;
}

}  // namespace ricci
