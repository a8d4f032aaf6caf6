#include "char2/suite.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace char2 {

namespace {

bool is_trivial_module(const Rep& M) {
    if (M.dim != 1) return false;
    for (const GfMat& g : M.gens)
        if (g.get(0, 0) != 1) return false;
    return true;
}

}  // namespace

Field splitting_field(const PermGroup& G) {
    auto [e2, modd] = two_part(static_cast<std::int64_t>(G.exponent()));
    return Field::for_modulus(static_cast<std::uint64_t>(modd));
}

VerifyReport verify_fong(const PermGroup& G, const Field* F,
                         std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "fong:" + G.name();
    std::mt19937_64 rng(seed);
    try {
        int certified = 0;
        for (const Rep& M : simples(G, F, seed)) {
            if (!is_isomorphic(M, dual_rep(M), rng)) continue;
            if (M.dim == 1) {
                rep.check(is_trivial_module(M),
                          "the only self-dual 1-dim simple is trivial");
                continue;
            }
            std::string tag = "self-dual dim " + std::to_string(M.dim);
            rep.check(M.dim % 2 == 0, tag + ": even dimension");
            try {
                fong_form(M, rng);  // certifies alternating + nondegenerate
                ++certified;
            } catch (const std::logic_error& e) {
                rep.finding(tag + ": " + e.what());
            }
        }
        rep.note(std::to_string(certified) + " alternating forms certified");
    } catch (const std::exception& e) {
        rep.finding(e.what());
    }
    return rep;
}

VerifyReport verify_radical(const PermGroup& G, const Field* F,
                            std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "radical:" + G.name();
    try {
        std::vector<Rep> mods = simples(G, F, seed);
        int codim = radical_codimension(mods);
        rep.check(codim % 2 == 1,
                  "Σ θ(1)² = " + std::to_string(codim) + " is odd");
        if (G.order() <= 100)
            rep.check(codim == radical_codimension_oracle(mods),
                      "matches the annihilator-rank oracle");
    } catch (const std::exception& e) {
        rep.finding(e.what());
    }
    return rep;
}

bool SuiteResult::ok() const {
    for (const VerifyReport& r : reports)
        if (!r.ok) return false;
    return true;
}

SuiteResult run_entry(const std::string& name, std::uint64_t seed) {
    SuiteResult out{name, {}};
    CorpusEntry e = corpus_entry(name);
    const PermGroup& G = e.group;
    Field F = splitting_field(G);
    out.reports.push_back(verify_fong(G, &F, seed));
    out.reports.push_back(verify_radical(G, &F, seed));
    out.reports.push_back(verify_odd_height0(G, &F, seed));
    out.reports.push_back(verify_central_theta(G, &F, seed));
    out.reports.push_back(verify_principal_block_lemma(G, &F, seed));
    for (const PermGroup& N : e.normal_subgroups) {
        out.reports.push_back(verify_T1(G, N, &F, seed));
        out.reports.push_back(verify_T2(G, N, &F, seed));
        out.reports.push_back(verify_T3(G, N, &F, seed));
        out.reports.push_back(verify_T4(G, N, &F, seed));
        out.reports.push_back(verify_quadratic_criterion(G, N, &F, seed));
        if ((G.order() / N.order()) % 2 == 1)
            out.reports.push_back(verify_cor_odd_quotient(G, N, &F, seed));
    }
    if (name.rfind("Muller", 0) == 0) {
        MullerExample mx = muller_family(std::stoi(name.substr(6)));
        Field Fm = splitting_field(mx.G);
        out.reports.push_back(verify_cor_subnormal(mx.G, mx.H, &Fm, seed));
    }
    return out;
}

std::vector<SuiteResult> run_suite(const std::vector<std::string>& names,
                                   std::uint64_t seed, int workers) {
    std::vector<SuiteResult> results(names.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= names.size()) return;
            try {
                results[i] = run_entry(names[i], seed);
            } catch (const std::exception& e) {
                results[i].entry = names[i];
                VerifyReport rep;
                rep.name = "entry:" + names[i];
                rep.finding(e.what());
                results[i].reports.push_back(std::move(rep));
            }
        }
    };
    int n = std::max(1, std::min<int>(workers, static_cast<int>(names.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    return results;
}

VerifyReport m22_stretch(int budget_seconds, std::uint64_t seed) {
    VerifyReport rep;
    rep.name = "M22-stretch";
    std::mt19937_64 rng(seed);
    auto t0 = std::chrono::steady_clock::now();
    auto over = [&] {
        return std::chrono::steady_clock::now() - t0 >
               std::chrono::seconds(budget_seconds);
    };
    auto skip = [&](const char* stage) {
        rep.note(std::string("skipped at ") + stage + ": budget exhausted");
        return rep;
    };
    try {
        PermGroup G = corpus_group("M22");
        Field F = splitting_field(G);
        rep.check(G.order() == 443520 && F.modulus() == 1155 && F.k() == 60,
                  "|M22| = 443520 over GF(2^60), m = 1155");
        int real2reg = 0;
        for (int c : G.regular_classes())
            if (G.class_is_real(c)) ++real2reg;
        rep.check(real2reg == 3,
                  "3 real 2-regular classes, so 3 self-dual simples");
        if (over()) return skip("classes");

        // the 22-point module chops to 1, 1 and the dual pair of 10s
        std::vector<Rep> pf = chop(perm_rep(G, &F), rng);
        std::vector<Rep> tens;
        for (Rep& f : pf)
            if (f.dim == 10) {
                bool fresh = true;
                for (const Rep& t : tens)
                    fresh = fresh && !is_isomorphic(f, t, rng);
                if (fresh) tens.push_back(std::move(f));
            }
        if (tens.size() != 2)
            throw std::logic_error("expected two distinct 10-dim factors");
        rep.check(!is_isomorphic(tens[0], dual_rep(tens[0]), rng) &&
                      is_isomorphic(tens[0], dual_rep(tens[1]), rng),
                  "the 10-dim simples are a dual pair");
        if (over()) return skip("permutation module");

        // 10 ⊗ 10* = 2·1 + 98 as composition factors
        std::vector<Rep> mix = chop(tensor_rep(tens[0], tens[1]), rng);
        int ntriv = 0;
        Rep c98;
        for (Rep& f : mix) {
            if (f.dim == 1 && is_trivial_module(f)) ++ntriv;
            if (f.dim == 98) c98 = std::move(f);
        }
        rep.check(mix.size() == 3 && ntriv == 2 && c98.dim == 98,
                  "10 ⊗ 10* chops to {1, 1, 98}");
        if (c98.dim != 98) return rep;
        if (over()) return skip("10 x 10*");

        // 34 shows up inside 10 ⊗ 10
        std::vector<Rep> sq = chop(tensor_rep(tens[0], tens[0]), rng);
        Rep c34;
        for (Rep& f : sq)
            if (f.dim == 34) c34 = std::move(f);
        rep.check(c34.dim == 34, "a 34-dim factor of 10 ⊗ 10");
        if (c34.dim != 34) return rep;
        if (over()) return skip("10 x 10");

        rep.check(is_isomorphic(c34, dual_rep(c34), rng) &&
                      is_isomorphic(c98, dual_rep(c98), rng),
                  "the 34 and the 98 are self-dual: degrees 34 and 98 "
                  "are exactly the nontrivial self-dual degrees");
        if (over()) return skip("self-duality");

        CycloField K(F.modulus());
        BrauerCharacter x2 = brauer_character(tens[0], K);
        BrauerCharacter x3 = brauer_character(tens[1], K);
        BrauerCharacter x7 = brauer_character(c98, K);
        bool prod = true;
        for (std::size_t j = 0; j < x2.values.size(); ++j)
            prod = prod && K.mul(x2.values[j], x3.values[j]) ==
                               K.add(K.from_int(2), x7.values[j]);
        rep.check(prod, "φ(10)·φ(10*) = 2·φ(1) + φ(98) on every class");
        if (over()) return skip("character product");

        rep.check(!quadratic_type(c34, rng), "the 34 is non-quadratic");
        rep.check(!quadratic_type(c98, rng), "the 98 is non-quadratic");
    } catch (const std::logic_error& e) {
        rep.finding(e.what());
    }
    return rep;
}

}  // namespace char2
