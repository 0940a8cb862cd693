#include "ricci/known_values.hpp"

#include <cmath>

namespace ricci {

namespace {

using PointList = std::vector<std::vector<double>>;

// Exceptional-group three-summand spaces: the full-precision root lists.
// gws6 entries are exactly (3/5, 4/5) and (5/3, 4/3); gws12's are
// (15 +- sqrt(29))/14 with z1 = 1.
std::optional<PointList> gws_fixed_points(int id)
{
    switch (id) {
    case 6:  return PointList{{0.6, 0.8}, {5.0 / 3.0, 4.0 / 3.0}};
    case 7:  return PointList{{1, 1}, {2, 1}, {1, 2}, {0.5, 0.5}};
    case 8:  return PointList{{0.864003, 0.483834}, {1.46177, 1.884488}};
    case 9:  return PointList{{1, 1}, {1.25, 1}, {1, 1.25}, {0.8, 0.8}};
    case 11: return PointList{{1, 1}, {1, 0.8}, {0.8, 1}, {1.25, 1.25}};
    case 12: return PointList{{1, (15 + std::sqrt(29.0)) / 14}, {1, (15 - std::sqrt(29.0)) / 14}};
    case 13: return PointList{{1, 1}, {1, 0.875}, {0.875, 1}, {8.0 / 7.0, 8.0 / 7.0}};
    case 14: return PointList{{0.485288, 0.825160}, {2.060629, 1.700349}};
    case 15: return PointList{{1, 1}, {3.5, 1}, {1, 3.5}, {2.0 / 7.0, 2.0 / 7.0}};
    default: return std::nullopt;
    }
}

}  // namespace

std::optional<KnownPoints> known_infinity_points(const SpaceSpec& spec)
{
    if (const auto* g = std::get_if<SpaceSpec::Gws>(&spec.family)) {
        if (g->id == 2) {
            const double k = g->k, l = g->l, m = g->m;
            return KnownPoints{"closed form", {
                {(k + m) / (k + l), (l + m) / (k + l)},
                {(k + m) / (k + l), (2 * k + l + m) / (k + l)},
                {(k + 2 * l + m) / (k + l), (l + m) / (k + l)},
                {(k + m) / (k + l + 2 * m), (l + m) / (k + l + 2 * m)}}};
        }
        if (g->id == 3 && g->k == 1 && g->l == 2 && g->m == 3)
            return KnownPoints{"sp(6) example", {{3.26361, 1.60389}, {1.30670, 3.18223},
                                                 {1.23251, 1.39606}, {0.38050, 0.46780}}};
        if (g->id == 3 && g->k == 2 && g->l == 5 && g->m == 7)
            return KnownPoints{"sp(14) example", {{2.94748, 1.67504}, {1.27217, 2.71689},
                                                  {1.24716, 1.53155}, {0.40168, 0.52944}}};
        if (g->id == 5) {
            const double l = g->l;
            return KnownPoints{"closed form", {
                {1, 2},
                {1, (2 * l - 4) / l},
                {l / (3 * l - 4), 2 * (l - 2) / (3 * l - 4)},
                {(3 * l - 4) / l, 2 * (l - 2) / l}}};
        }
        if (auto pts = gws_fixed_points(g->id)) return KnownPoints{"table of Einstein metrics", *pts};
        if (g->id == 1 && g->l == g->m) {
            // the z1 = 1 pair z2 = (k+2m-2 +- sqrt(k^2-4m+4))/(k+m); the
            // remaining roots (if any) have no closed form, so this list may
            // be a strict subset of the fixed-point set
            const double k = g->k, m = g->m;
            const double disc = k * k - 4 * m + 4;
            if (disc < 0) return std::nullopt;
            PointList pts{{1, (k + 2 * m - 2 + std::sqrt(disc)) / (k + m)}};
            if (disc > 0) pts.push_back({1, (k + 2 * m - 2 - std::sqrt(disc)) / (k + m)});
            return KnownPoints{"closed form (partial)", pts};
        }
        return std::nullopt;
    }
    if (const auto* v = std::get_if<SpaceSpec::StiefelV2>(&spec.family)) {
        const double t = (v->n - 1) / (2.0 * (v->n - 2));
        return KnownPoints{"closed form", {{t, t}}};
    }
    if (const auto* s = std::get_if<SpaceSpec::StiefelBlock>(&spec.family)) {
        // tabulated (z1, z2, z3) triples with z2 <-> z3 swapped into the
        // catalog (12,13,23) order
        const auto key = std::pair{s->k2, s->k3};
        if (key == std::pair{4, 2})
            return KnownPoints{"v5r7 list", {{4.1466, 1.03361, 4.07919}, {2.29783, 3.98856, 3.43436},
                                             {1, 2.54858, 2.54858}, {1, 0.78475, 0.78475}}};
        if (key == std::pair{4, 3})
            return KnownPoints{"v5r8 list", {{5.39567, 2.16024, 4.8672}, {2.31234, 4.93295, 4.49843},
                                             {1, 3.29099, 3.29099}, {1, 0.709006, 0.709006}}};
        if (key == std::pair{5, 2})
            return KnownPoints{"v6r8 list", {{3.19365, 0.674502, 3.15771}, {1.86343, 3.07833, 2.64311},
                                             {1, 2.20711, 2.20711}, {1, 0.792893, 0.792893}}};
        if (key == std::pair{5, 3})
            return KnownPoints{"v6r9 list", {{3.99996, 1.41708, 3.71213}, {1.89382, 3.73723, 3.36866},
                                             {1, 2.78078, 2.78078}, {1, 0.719224, 0.719224}}};
        if (key == std::pair{6, 2})
            return KnownPoints{"v7r9 list", {{2.71186, 0.499721, 2.68928}, {1.64442, 2.6166, 2.25706},
                                             {1, 2, 2}, {0.95544, 0.734193, 0.798009},
                                             {0.805105, 0.379868, 0.771014}, {1, 0.8, 0.8}}};
        if (key == std::pair{6, 3})
            return KnownPoints{"v7r10 list", {{3.30651, 1.05079, 3.12526}, {1.67763, 3.13489, 2.81537},
                                              {1, 2.47178, 2.47178}, {1, 0.72822, 0.72822}}};
        if (key == std::pair{7, 2})
            return KnownPoints{"v8r10 list", {{2.41937, 0.396819, 2.40377}, {1.51286, 2.33539, 2.02874},
                                              {1, 1.86038, 1.86038}, {1, 0.806287, 0.806287},
                                              {0.98506, 0.78523, 0.805755}, {0.791817, 0.312754, 0.770023}}};
        if (key == std::pair{7, 3})
            return KnownPoints{"v8r11 list", {{2.89171, 0.833614, 2.76727}, {1.54531, 2.76871, 2.48719},
                                              {1, 2.26376, 2.26376}, {1, 0.736237, 0.736237}}};
        if (s->k2 == s->k3 && s->k2 >= 2) {
            const double k2 = s->k2;
            const double root = std::sqrt(2 * k2 * k2 - 2 * k2 + 1);
            const double tp = (2 * k2 - 1 + root) / (k2 - 1);
            const double tm = (2 * k2 - 1 - root) / (k2 - 1);
            return KnownPoints{"diagonal closed form", {{1, tm, tm}, {1, tp, tp}}};
        }
        return std::nullopt;
    }
    switch (std::get<SpaceSpec::Flag4>(spec.family).id) {
    case FlagId::F4:
        return KnownPoints{"flag solutions", {{2, 3, 4}, {0.970488, 0.229171, 1.0097},
                                              {1.27614, 1.95786, 2.31788}}};
    case FlagId::E7:
        return KnownPoints{"flag solutions", {{2, 3, 4}, {0.823351, 1.29423, 1.34989},
                                              {0.991279, 0.578307, 1.13127}}};
    case FlagId::E8a3:
        return KnownPoints{"flag solutions", {{2, 3, 4}, {0.649612, 1.10943, 1.06103},
                                              {0.763357, 1.00902, 0.191009},
                                              {1.15607, 1.01783, 0.214618},
                                              {1.09705, 0.770347, 1.29696}}};
    case FlagId::E8a6:
        return KnownPoints{"flag solutions", {{2, 3, 4}, {0.91333, 1.41368, 1.51968},
                                              {0.966311, 0.489832, 1.08091}}};
    }
    return std::nullopt;
}

}  // namespace ricci
