// char2: exact 2-modular representation theory of finite groups.
//
// Subcommands: irreducibles, verify, suite, blocks, brauer-table.
// Exit codes: 0 all checks pass, 1 mathematical finding, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "char2/suite.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace char2;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kSchema = 1;

struct Opts {
    std::string group, normal, subgroup;
    std::string theorem;
    std::string corpus = "default";
    std::uint64_t seed = 1;
    std::size_t cap = 1000000;
    bool stretch = false;
    int budget = 3600;
    std::string out;
    std::string format = "text";
};

std::string default_out() {
    if (const char* e = std::getenv("CHAR2_OUT")) return e;
    return "char2-out";
}

std::string sanitize(const std::string& s) {
    std::string r;
    for (char c : s) r += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return r;
}

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

// a group argument is either a file in the grp format or a builtin name
PermGroup load_group(const std::string& spec, std::size_t cap) {
    if (spec.empty()) throw std::invalid_argument("missing group");
    if (fs::exists(spec)) return PermGroup::load_file(spec, stem_of(spec), cap);
    return corpus_group(spec);
}

std::string felem_str(FElem v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

json report_json(const VerifyReport& r) {
    return {{"name", r.name},
            {"ok", r.ok},
            {"witnesses", r.witnesses},
            {"findings", r.findings}};
}

json run_header(const std::string& command, const Opts& o) {
    return {{"tool", "char2"},
            {"version", kVersion},
            {"schema", kSchema},
            {"command", command},
            {"seed", o.seed}};
}

void render_report(std::ostream& os, const json& r, const std::string& ind) {
    os << ind << (r.at("ok").get<bool>() ? "[ok]  " : "[FAIL] ")
       << r.at("name").get<std::string>() << "\n";
    for (const auto& w : r.at("witnesses"))
        os << ind << "    " << w.get<std::string>() << "\n";
    for (const auto& f : r.at("findings"))
        os << ind << "    finding: " << f.get<std::string>() << "\n";
}

void render_text(std::ostream& os, const json& doc) {
    os << "char2 " << doc.at("version").get<std::string>() << "  "
       << doc.at("command").get<std::string>() << " (seed "
       << doc.at("seed").get<std::uint64_t>() << ")\n";
    if (doc.contains("group"))
        os << "group " << doc["group"]["name"].get<std::string>() << ", order "
           << doc["group"]["order"].get<std::uint64_t>() << ", field GF(2^"
           << doc["field"]["k"].get<int>() << "), m = "
           << doc["field"]["m"].get<std::uint64_t>() << "\n";
    if (doc.contains("listing")) {
        os << "label  dim  self-dual  quadratic  block\n";
        for (const auto& row : doc["listing"])
            os << row["label"].get<std::string>() << "  "
               << row["dim"].get<int>() << "  "
               << (row["self_dual"].get<bool>() ? "yes" : "no") << "  "
               << row["quadratic"].get<std::string>() << "  "
               << row["block"].get<std::string>() << "\n";
    }
    if (doc.contains("table")) {
        os << "classes:";
        for (const auto& c : doc["table"]["classes"])
            os << " (order " << c["order"].get<int>() << ", size "
               << c["size"].get<std::uint64_t>() << ")";
        os << "\n";
        for (const auto& row : doc["table"]["rows"]) {
            os << row["label"].get<std::string>() << ":";
            for (const auto& v : row["values"]) os << " " << v.get<std::string>();
            os << "\n";
        }
        os << "pim degrees:";
        for (const auto& p : doc["table"]["pim"]) os << " " << p.get<std::string>();
        os << "\n";
    }
    if (doc.contains("blocks")) {
        for (const auto& b : doc["blocks"]) {
            os << b["label"].get<std::string>() << ": defect "
               << b["defect"].get<int>() << ", "
               << (b["real"].get<bool>() ? "real" : ("dual " + b["contragredient"]
                                                                   .get<std::string>()))
               << (b["principal"].get<bool>() ? ", principal" : "") << ", simples";
            for (const auto& s : b["simples"]) os << " " << s.get<std::string>();
            os << "\n";
        }
    }
    if (doc.contains("covering")) {
        for (const auto& r : doc["covering"])
            if (r["covers"].get<bool>())
                os << r["block_of_G"].get<std::string>() << " covers "
                   << r["block_of_N"].get<std::string>()
                   << (r["weakly_regular"].get<bool>() ? " (weakly regular)" : "")
                   << "\n";
    }
    if (doc.contains("checks"))
        for (const auto& r : doc["checks"]) render_report(os, r, "");
    if (doc.contains("entries"))
        for (const auto& e : doc["entries"]) {
            os << e.at("entry").get<std::string>() << "\n";
            for (const auto& r : e.at("reports")) render_report(os, r, "  ");
        }
    os << (doc.at("ok").get<bool>() ? "PASS" : "FINDINGS") << "\n";
}

/// Persist + render + cache.  Reports carry no timings, so identical
/// inputs, seed and version give byte-identical files.
struct Sink {
    Opts opts;
    std::string basename;
    std::string cache_key;

    fs::path cache_path() const {
        std::size_t h = std::hash<std::string>{}(cache_key);
        std::ostringstream os;
        os << std::hex << h;
        return fs::path(opts.out) / "cache" / (os.str() + ".json");
    }

    // returns the cached document when the key matches
    std::optional<json> lookup() const {
        std::ifstream in(cache_path());
        if (!in) return std::nullopt;
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.contains("cache_key") ||
            doc["cache_key"].get<std::string>() != cache_key)
            return std::nullopt;
        std::cerr << "(cached: " << cache_path().string() << ")\n";
        return doc;
    }

    int emit(json doc) const {
        doc["cache_key"] = cache_key;
        fs::create_directories(fs::path(opts.out) / "cache");
        fs::path file = fs::path(opts.out) / (basename + ".json");
        std::ofstream(file) << doc.dump(2) << "\n";
        std::ofstream(cache_path()) << doc.dump(2) << "\n";
        if (opts.format == "json")
            std::cout << doc.dump(2) << "\n";
        else
            render_text(std::cout, doc);
        std::cerr << "report: " << file.string() << "\n";
        return doc.at("ok").get<bool>() ? 0 : 1;
    }
};

std::string group_key(const PermGroup& G) {
    std::ostringstream os;
    os << std::hex << G.structure_hash();
    return os.str();
}

json group_json(const PermGroup& G) {
    return {{"name", G.name()},
            {"order", G.order()},
            {"degree", G.degree()},
            {"hash", group_key(G)}};
}

json field_json(const Field& F) {
    return {{"m", F.modulus()}, {"k", F.k()}};
}

int cmd_irreducibles(const Opts& o) {
    PermGroup G = load_group(o.group, o.cap);
    Field F = splitting_field(G);
    Sink sink{o, "irreducibles-" + sanitize(G.name()) + "-s" +
                     std::to_string(o.seed),
              std::string(kVersion) + "|" + std::to_string(kSchema) +
                  "|irreducibles|" + group_key(G) + "|" +
                  std::to_string(F.modulus()) + "|" + std::to_string(o.seed)};
    if (auto hit = sink.lookup()) {
        if (o.format == "json")
            std::cout << hit->dump(2) << "\n";
        else
            render_text(std::cout, *hit);
        return hit->at("ok").get<bool>() ? 0 : 1;
    }
    CycloField K(F.modulus());
    std::mt19937_64 rng(o.seed);
    std::vector<Rep> mods = simples(G, &F, o.seed);
    BrauerTable bt = brauer_table(G, &F, &K, mods);
    Blocks B = compute_blocks(G, &F, mods, rng, o.seed);
    json doc = run_header("irreducibles", o);
    doc["group"] = group_json(G);
    doc["field"] = field_json(F);
    doc["listing"] = json::array();
    for (std::size_t t = 0; t < B.simples.size(); ++t) {
        const Rep& M = B.simples[t];
        bool sd = is_isomorphic(M, dual_rep(M), rng);
        std::string quad = "-";
        if (sd) quad = M.dim == 1 || quadratic_type(M, rng) ? "yes" : "no";
        doc["listing"].push_back({{"label", M.label},
                                  {"dim", M.dim},
                                  {"self_dual", sd},
                                  {"quadratic", quad},
                                  {"block", B.blocks[B.block_of[t]].label}});
    }
    doc["ok"] = true;
    return sink.emit(std::move(doc));
}

int cmd_brauer_table(const Opts& o) {
    PermGroup G = load_group(o.group, o.cap);
    Field F = splitting_field(G);
    Sink sink{o, "brauer-table-" + sanitize(G.name()) + "-s" +
                     std::to_string(o.seed),
              std::string(kVersion) + "|" + std::to_string(kSchema) +
                  "|brauer-table|" + group_key(G) + "|" +
                  std::to_string(F.modulus()) + "|" + std::to_string(o.seed)};
    if (auto hit = sink.lookup()) {
        if (o.format == "json")
            std::cout << hit->dump(2) << "\n";
        else
            render_text(std::cout, *hit);
        return hit->at("ok").get<bool>() ? 0 : 1;
    }
    json doc = run_header("brauer-table", o);
    doc["group"] = group_json(G);
    doc["field"] = field_json(F);
    bool ok = true;
    json table;
    try {
        CycloField K(F.modulus());
        std::vector<Rep> mods = simples(G, &F, o.seed);
        BrauerTable bt = brauer_table(G, &F, &K, mods);
        table["classes"] = json::array();
        for (int c : bt.classes)
            table["classes"].push_back(
                {{"index", c},
                 {"order", G.classes()[c].element_order},
                 {"size", G.classes()[c].size}});
        table["rows"] = json::array();
        for (const BrauerCharacter& row : bt.rows) {
            json vals = json::array();
            for (const Cyclo& v : row.values) vals.push_back(v.str());
            table["rows"].push_back({{"label", row.module_label},
                                     {"degree", row.degree},
                                     {"values", vals}});
        }
        table["pim"] = json::array();
        for (const mpz_class& p : pim_degrees(bt, G))
            table["pim"].push_back(p.get_str());
        DetSquared d = det_squared_check(bt, G);
        ok = ok && d.ok;
        table["det_squared"] = {{"ok", d.ok},
                                {"sign", d.sign},
                                {"product", d.product.get_str()}};
    } catch (const std::logic_error& e) {
        ok = false;
        doc["findings"] = {e.what()};
    }
    doc["table"] = std::move(table);
    doc["ok"] = ok;
    return sink.emit(std::move(doc));
}

int cmd_blocks(const Opts& o) {
    PermGroup G = load_group(o.group, o.cap);
    Field F = splitting_field(G);
    std::string key = std::string(kVersion) + "|" + std::to_string(kSchema) +
                      "|blocks|" + group_key(G) + "|" +
                      std::to_string(F.modulus()) + "|" + std::to_string(o.seed);
    std::string base = "blocks-" + sanitize(G.name());
    PermGroup N;
    bool has_n = !o.normal.empty();
    if (has_n) {
        PermGroup raw = load_group(o.normal, o.cap);
        N = G.subgroup(raw.generators(), raw.name());
        if (!G.is_normal(N))
            throw std::invalid_argument("--normal is not a normal subgroup");
        key += "|" + group_key(N);
        base += "-" + sanitize(N.name());
    }
    Sink sink{o, base + "-s" + std::to_string(o.seed), key};
    if (auto hit = sink.lookup()) {
        if (o.format == "json")
            std::cout << hit->dump(2) << "\n";
        else
            render_text(std::cout, *hit);
        return hit->at("ok").get<bool>() ? 0 : 1;
    }
    json doc = run_header("blocks", o);
    doc["group"] = group_json(G);
    doc["field"] = field_json(F);
    bool ok = true;
    try {
        CycloField K(F.modulus());
        std::mt19937_64 rng(o.seed);
        std::vector<Rep> mods = simples(G, &F, o.seed);
        BrauerTable bt = brauer_table(G, &F, &K, mods);
        Blocks B = compute_blocks(G, &F, mods, rng, o.seed);
        doc["blocks"] = json::array();
        for (const BlockData& b : B.blocks) {
            json beta = json::array(), omega = json::array();
            for (int c = 0; c < B.Z.dim(); ++c) {
                if (b.idempotent.get(0, c))
                    beta.push_back(
                        {{"class", c}, {"value", felem_str(b.idempotent.get(0, c))}});
                omega.push_back(felem_str(b.omega[c]));
            }
            doc["blocks"].push_back(
                {{"label", b.label},
                 {"defect", b.defect},
                 {"simples", b.simple_labels},
                 {"principal", b.is_principal},
                 {"real", b.contragredient_label == b.label},
                 {"contragredient", b.contragredient_label},
                 {"beta_support", beta},
                 {"omega", omega}});
        }
        if (has_n) {
            std::vector<Rep> nmods = simples(N, &F, o.seed);
            brauer_table(N, &F, &K, nmods);  // canonical labels
            Blocks BN = compute_blocks(N, &F, nmods, rng, o.seed);
            Covering cov = covering(B, BN, rng);
            doc["covering"] = json::array();
            for (const CoveringRecord& r : cov.records)
                doc["covering"].push_back(
                    {{"block_of_G", B.blocks[r.block_of_G].label},
                     {"block_of_N", "N:" + BN.blocks[r.block_of_N].label},
                     {"covers", r.covers},
                     {"weakly_regular", r.weakly_regular}});
        }
    } catch (const std::logic_error& e) {
        ok = false;
        doc["findings"] = {e.what()};
    }
    doc["ok"] = ok;
    return sink.emit(std::move(doc));
}

int cmd_verify(const Opts& o) {
    PermGroup G = load_group(o.group, o.cap);
    Field F = splitting_field(G);
    std::string key = std::string(kVersion) + "|" + std::to_string(kSchema) +
                      "|verify:" + o.theorem + "|" + group_key(G) + "|" +
                      std::to_string(F.modulus()) + "|" + std::to_string(o.seed);
    std::string base = "verify-" + sanitize(o.theorem) + "-" + sanitize(G.name());
    auto sub = [&](const std::string& spec) {
        PermGroup raw = load_group(spec, o.cap);
        PermGroup H = G.subgroup(raw.generators(), raw.name());
        key += "|" + group_key(H);
        base += "-" + sanitize(H.name());
        return H;
    };
    const std::string& th = o.theorem;
    bool needs_normal = th == "T1" || th == "T2" || th == "T3" || th == "T4" ||
                        th == "quad-criterion" || th == "odd-quotient";
    bool needs_sub = th == "subnormal";
    if (needs_normal && o.normal.empty())
        throw std::invalid_argument("verify " + th + " requires --normal");
    if (needs_sub && o.subgroup.empty())
        throw std::invalid_argument("verify subnormal requires --subgroup");
    PermGroup N;
    if (needs_normal) {
        N = sub(o.normal);
        if (!G.is_normal(N))
            throw std::invalid_argument("--normal is not a normal subgroup");
    }
    if (needs_sub) N = sub(o.subgroup);

    Sink sink{o, base + "-s" + std::to_string(o.seed), key};
    if (auto hit = sink.lookup()) {
        if (o.format == "json")
            std::cout << hit->dump(2) << "\n";
        else
            render_text(std::cout, *hit);
        return hit->at("ok").get<bool>() ? 0 : 1;
    }
    VerifyReport r;
    if (th == "T1") r = verify_T1(G, N, &F, o.seed);
    else if (th == "T2") r = verify_T2(G, N, &F, o.seed);
    else if (th == "T3") r = verify_T3(G, N, &F, o.seed);
    else if (th == "T4") r = verify_T4(G, N, &F, o.seed);
    else if (th == "quad-criterion") r = verify_quadratic_criterion(G, N, &F, o.seed);
    else if (th == "odd-quotient") r = verify_cor_odd_quotient(G, N, &F, o.seed);
    else if (th == "subnormal") r = verify_cor_subnormal(G, N, &F, o.seed);
    else if (th == "fong") r = verify_fong(G, &F, o.seed);
    else if (th == "radical") r = verify_radical(G, &F, o.seed);
    else if (th == "height0") r = verify_odd_height0(G, &F, o.seed);
    else if (th == "central-theta") r = verify_central_theta(G, &F, o.seed);
    else if (th == "principal-block") r = verify_principal_block_lemma(G, &F, o.seed);
    else throw std::invalid_argument("unknown theorem: " + th);

    json doc = run_header("verify", o);
    doc["group"] = group_json(G);
    doc["field"] = field_json(F);
    doc["theorem"] = th;
    doc["checks"] = {report_json(r)};
    doc["ok"] = r.ok;
    return sink.emit(std::move(doc));
}

int cmd_suite(const Opts& o) {
    if (o.corpus != "default" && o.corpus != "extended")
        throw std::invalid_argument("--corpus must be default or extended");
    std::vector<std::string> names = corpus_names();
    if (o.corpus == "extended")
        for (const std::string& n : corpus_extended_names()) names.push_back(n);
    Sink sink{o, "suite-" + o.corpus + (o.stretch ? "-stretch" : "") + "-s" +
                     std::to_string(o.seed),
              std::string(kVersion) + "|" + std::to_string(kSchema) + "|suite|" +
                  o.corpus + "|" + (o.stretch ? "1" : "0") + "|" +
                  std::to_string(o.seed)};
    if (auto hit = sink.lookup()) {
        if (o.format == "json")
            std::cout << hit->dump(2) << "\n";
        else
            render_text(std::cout, *hit);
        return hit->at("ok").get<bool>() ? 0 : 1;
    }
    int workers = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
    std::vector<SuiteResult> results = run_suite(names, o.seed, workers);
    json doc = run_header("suite", o);
    doc["corpus"] = o.corpus;
    doc["entries"] = json::array();
    bool ok = true;
    for (const SuiteResult& res : results) {
        json e = {{"entry", res.entry}, {"reports", json::array()}};
        for (const VerifyReport& r : res.reports)
            e["reports"].push_back(report_json(r));
        ok = ok && res.ok();
        doc["entries"].push_back(std::move(e));
    }
    if (o.corpus == "extended" && o.stretch) {
        VerifyReport m22 = m22_stretch(o.budget, o.seed);
        doc["entries"].push_back(
            {{"entry", "M22"}, {"reports", {report_json(m22)}}});
        ok = ok && m22.ok;
    }
    doc["ok"] = ok;
    return sink.emit(std::move(doc));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-modular representation theory of finite groups"};
    app.set_version_flag("--version", std::string("char2 ") + kVersion);
    app.require_subcommand(1);
    Opts o;
    o.out = default_out();

    auto add_common = [&](CLI::App* c, bool group_needed) {
        if (group_needed)
            c->add_option("--group", o.group, "group file or builtin name")
                ->required();
        c->add_option("--seed", o.seed, "meataxe / chop seed");
        c->add_option("--cap", o.cap, "group enumeration cap");
        c->add_option("--out", o.out, "output directory (env CHAR2_OUT)");
        c->add_option("--format", o.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* irr = app.add_subcommand("irreducibles",
                                       "list the irreducible modules");
    add_common(irr, true);
    CLI::App* ver = app.add_subcommand("verify", "run one theorem verifier");
    add_common(ver, true);
    ver->add_option("--theorem", o.theorem,
                    "T1|T2|T3|T4|fong|radical|height0|central-theta|"
                    "quad-criterion|odd-quotient|subnormal|principal-block")
        ->required();
    ver->add_option("--normal", o.normal, "normal subgroup file or name");
    ver->add_option("--subgroup", o.subgroup, "subnormal subgroup file or name");
    CLI::App* sui = app.add_subcommand("suite", "run all verifiers over the corpus");
    add_common(sui, false);
    sui->add_option("--corpus", o.corpus, "default|extended");
    sui->add_flag("--stretch", o.stretch, "include the M22 stretch items");
    sui->add_option("--budget", o.budget, "stretch budget in seconds");
    CLI::App* blo = app.add_subcommand("blocks", "2-block data");
    add_common(blo, true);
    blo->add_option("--normal", o.normal, "also report covering for N");
    CLI::App* bra = app.add_subcommand("brauer-table", "exact Brauer characters");
    add_common(bra, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(irr)) return cmd_irreducibles(o);
        if (app.got_subcommand(ver)) return cmd_verify(o);
        if (app.got_subcommand(sui)) return cmd_suite(o);
        if (app.got_subcommand(blo)) return cmd_blocks(o);
        if (app.got_subcommand(bra)) return cmd_brauer_table(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
