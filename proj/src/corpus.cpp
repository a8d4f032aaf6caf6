#include "char2/corpus.hpp"

#include <cstdint>
#include <stdexcept>

namespace char2 {

namespace {

struct BuiltinDef {
    const char* name;
    const char* text;
};

const BuiltinDef kBuiltins[] = {
    {"C3", "degree 3\n(1 2 3)\n"},
    {"C7", "degree 7\n(1 2 3 4 5 6 7)\n"},
    {"S3", "degree 3\n(1 2)\n(1 2 3)\n"},
    {"S4", "degree 4\n(1 2)\n(1 2 3 4)\n"},
    {"A4", "degree 4\n(1 2 3)\n(2 3 4)\n"},
    {"A5", "degree 5\n(1 2 3)\n(1 2 3 4 5)\n"},
    {"S5", "degree 5\n(1 2)\n(1 2 3 4 5)\n"},
    {"A6", "degree 6\n(1 2 3)\n(2 3 4 5 6)\n"},
    {"S6", "degree 6\n(1 2)\n(1 2 3 4 5 6)\n"},
    {"D8", "degree 4\n(1 2 3 4)\n(1 3)\n"},
    // regular representation of the quaternion group
    {"Q8", "degree 8\n(1 3 2 4)(5 8 6 7)\n(1 5 2 6)(3 7 4 8)\n"},
    // semidihedral of order 16: s r s = r^3
    {"SD16", "degree 8\n(1 2 3 4 5 6 7 8)\n[1,4,7,2,5,8,3,6]\n"},
    // SL(2,3) on the 8 nonzero vectors of GF(3)^2
    {"SL(2,3)", "degree 8\n[3,6,2,5,8,1,4,7]\n[1,2,4,5,3,8,6,7]\n"},
    // Frobenius groups: x -> x+1 and x -> 2x on Z_7 resp. Z_5
    {"C7:C3", "degree 7\n(1 2 3 4 5 6 7)\n[2,4,6,1,3,5,7]\n"},
    {"C5:C4", "degree 5\n(1 2 3 4 5)\n[2,4,1,3,5]\n"},
    {"S3xC3", "degree 6\n(1 2)\n(1 2 3)\n(4 5 6)\n"},
    {"S3xS3", "degree 6\n(1 2)\n(1 2 3)\n(4 5)\n(4 5 6)\n"},
    // Mathieu group on 22 points (standard generators)
    {"M22",
     "degree 22\n"
     "(1 13)(2 8)(3 16)(4 12)(6 22)(7 17)(9 10)(11 14)\n"
     "(1 22 3 21)(2 18 4 13)(5 12)(6 11 7 15)(8 14 20 10)(17 19)\n"},
};

int least_nonresidue(int p) {
    for (int n = 2; n < p; ++n) {
        bool sq = false;
        for (int x = 1; x < p && !sq; ++x)
            if (x * x % p == n) sq = true;
        if (!sq) return n;
    }
    throw std::logic_error("no quadratic nonresidue");
}

int primitive_root(int p) {
    for (int g = 2; g < p; ++g) {
        int x = g % p, ord = 1;
        while (x != 1) {
            x = x * g % p;
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    throw std::logic_error("no primitive root");
}

}  // namespace

MullerExample muller_family(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("muller_family: p must be an odd prime");
    int pp = p * p;
    auto point = [p](int x, int y) { return ((x % p + p) % p) + p * ((y % p + p) % p); };
    auto perm_of = [&](auto&& f) {
        Perm q(pp);
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                auto [nx, ny] = f(x, y);
                q[point(x, y)] = point(nx, ny);
            }
        return q;
    };
    int g0 = primitive_root(p);
    int twopart = pp - 1;
    while (twopart % 2 == 0) twopart /= 2;
    twopart = (pp - 1) / twopart;  // 2-part of p^2 - 1
    int s = twopart / 2;

    std::vector<Perm> ggens, hgens;
    Perm t;
    if (p % 4 == 3) {
        // E = F[w]/(w^2 - n), point (x, y) = x + y w; t is Frobenius
        int n = least_nonresidue(p);
        auto emul = [&](int x1, int y1, int x2, int y2) {
            return std::pair<int, int>{(x1 * x2 + n * y1 * y2) % p,
                                       (x1 * y2 + x2 * y1) % p};
        };
        // generator of E^x, then its Sylow-2 power
        int gx = -1, gy = -1;
        for (int x = 0; x < p && gx < 0; ++x)
            for (int y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                int cx = x, cy = y, ord = 1;
                while (!(cx == 1 && cy == 0)) {
                    auto [nx, ny] = emul(cx, cy, x, y);
                    cx = nx;
                    cy = ny;
                    ++ord;
                }
                if (ord == pp - 1) { gx = x; gy = y; break; }
            }
        int cx = 1, cy = 0;
        for (int i = 0; i < (pp - 1) / twopart; ++i) {
            auto [nx, ny] = emul(cx, cy, gx, gy);
            cx = nx;
            cy = ny;
        }
        t = perm_of([&](int x, int y) { return std::pair<int, int>{x, p - y}; });
        ggens = {
            perm_of([&](int x, int y) { return std::pair<int, int>{x + 1, y}; }),
            perm_of([&](int x, int y) { return std::pair<int, int>{x, y + 1}; }),
            perm_of([&](int x, int y) { return emul(x, y, cx, cy); }),  // gen of C
            perm_of([&](int x, int y) { return std::pair<int, int>{g0 * x, g0 * y}; }),
            t,
        };
        // H = F e2 x| <t> with e2 = w
        hgens = {perm_of([&](int x, int y) { return std::pair<int, int>{x, y + 1}; }), t};
    } else {
        // E = F^2 with S the monomial 2-group; t is the swap
        int odd = p - 1;
        while (odd % 2 == 0) odd /= 2;
        int c0 = 1;
        for (int i = 0; i < odd; ++i) c0 = c0 * g0 % p;  // generates Sylow-2 of F^x
        t = perm_of([&](int x, int y) { return std::pair<int, int>{y, x}; });
        ggens = {
            perm_of([&](int x, int y) { return std::pair<int, int>{x + 1, y}; }),
            perm_of([&](int x, int y) { return std::pair<int, int>{x, y + 1}; }),
            perm_of([&](int x, int y) { return std::pair<int, int>{c0 * x, y}; }),
            perm_of([&](int x, int y) { return std::pair<int, int>{g0 * x, g0 * y}; }),
            t,
        };
        // e2 = f1 - f2
        hgens = {perm_of([&](int x, int y) { return std::pair<int, int>{x + 1, y - 1 + p}; }), t};
    }
    MullerExample ex{PermGroup(pp, std::move(ggens), "Muller" + std::to_string(p)),
                     PermGroup(pp, std::move(hgens), "H(Muller" + std::to_string(p) + ")"),
                     p, s};
    return ex;
}

std::vector<std::string> corpus_names() {
    return {"C3", "C7", "S3", "S4", "A4", "A5", "S5", "A6", "S6", "D8", "Q8",
            "SD16", "SL(2,3)", "C7:C3", "C5:C4", "S3xC3", "S3xS3", "Muller3"};
}

std::vector<std::string> corpus_extended_names() { return {"Muller5", "Muller7"}; }

PermGroup corpus_group(const std::string& name) {
    for (const auto& def : kBuiltins)
        if (name == def.name) return PermGroup::load(def.text, def.name);
    if (name == "Muller3") return muller_family(3).G;
    if (name == "Muller5") return muller_family(5).G;
    if (name == "Muller7") return muller_family(7).G;
    throw std::invalid_argument("unknown builtin group: " + name);
}

CorpusEntry corpus_entry(const std::string& name) {
    CorpusEntry e;
    e.name = name;
    e.group = corpus_group(name);
    if (e.group.order() <= 400) {
        for (auto& N : e.group.normal_subgroups()) {
            if (N.order() == 1 || N.order() == e.group.order()) continue;
            e.normal_subgroups.push_back(std::move(N));
        }
    } else if (name == "S6") {
        PermGroup a6 = corpus_group("A6");
        a6.set_name("A6");
        e.normal_subgroups.push_back(e.group.subgroup(a6.generators(), "A6"));
    } else if (name == "Muller5" || name == "Muller7") {
        // E and E x| Z (translations, plus the scalars)
        const auto& g = e.group.generators();
        e.normal_subgroups.push_back(e.group.subgroup({g[0], g[1]}, "E"));
        e.normal_subgroups.push_back(e.group.subgroup({g[0], g[1], g[3]}, "EZ"));
        for (const auto& N : e.normal_subgroups)
            if (!e.group.is_normal(N))
                throw std::logic_error("hand-listed subgroup is not normal");
    }
    // M22 is simple: no proper nontrivial normal subgroups
    return e;
}

}  // namespace char2
