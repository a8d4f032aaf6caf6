#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <random>

#include "char2/brc.hpp"
#include "char2/corpus.hpp"
#include "char2/suite.hpp"

namespace py = pybind11;
using namespace char2;

namespace {

PermGroup load_any(const std::string& spec, std::size_t cap) {
    if (std::filesystem::exists(spec))
        return PermGroup::load_file(
            spec, std::filesystem::path(spec).stem().string(), cap);
    return corpus_group(spec);
}

py::dict report_dict(const VerifyReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["ok"] = r.ok;
    d["witnesses"] = r.witnesses;
    d["findings"] = r.findings;
    return d;
}

py::list irreducibles(const PermGroup& G, std::uint64_t seed) {
    Field F = splitting_field(G);
    CycloField K(F.modulus());
    std::mt19937_64 rng(seed);
    std::vector<Rep> mods = simples(G, &F, seed);
    BrauerTable bt = brauer_table(G, &F, &K, mods);
    py::list out;
    for (const Rep& M : mods) {
        py::dict d;
        d["label"] = M.label;
        d["dim"] = M.dim;
        bool sd = is_isomorphic(M, dual_rep(M), rng);
        d["self_dual"] = sd;
        d["quadratic"] =
            sd ? py::cast(M.dim == 1 || quadratic_type(M, rng).has_value())
               : py::none();
        out.append(d);
    }
    return out;
}

py::dict table_dict(const PermGroup& G, std::uint64_t seed) {
    Field F = splitting_field(G);
    CycloField K(F.modulus());
    std::vector<Rep> mods = simples(G, &F, seed);
    BrauerTable bt = brauer_table(G, &F, &K, mods);
    std::vector<mpz_class> pim = pim_degrees(bt, G);
    py::dict d;
    d["m"] = F.modulus();
    py::list classes, rows;
    for (int c : bt.classes) {
        py::dict cd;
        cd["order"] = G.classes()[c].element_order;
        cd["size"] = G.classes()[c].size;
        classes.append(cd);
    }
    for (std::size_t i = 0; i < bt.rows.size(); ++i) {
        py::dict rd;
        rd["label"] = bt.rows[i].module_label;
        rd["degree"] = bt.rows[i].degree;
        py::list vals;
        for (const Cyclo& v : bt.rows[i].values) vals.append(v.str());
        rd["values"] = vals;
        rd["pim_degree"] = pim[i].get_str();
        rows.append(rd);
    }
    d["classes"] = classes;
    d["rows"] = rows;
    return d;
}

py::dict verify(const std::string& theorem, const PermGroup& G,
                const PermGroup* N, std::uint64_t seed) {
    Field F = splitting_field(G);
    auto need_n = [&]() -> const PermGroup& {
        if (!N) throw std::invalid_argument(theorem + " needs a subgroup");
        return *N;
    };
    VerifyReport r;
    if (theorem == "T1")
        r = verify_T1(G, need_n(), &F, seed);
    else if (theorem == "T2")
        r = verify_T2(G, need_n(), &F, seed);
    else if (theorem == "T3")
        r = verify_T3(G, need_n(), &F, seed);
    else if (theorem == "T4")
        r = verify_T4(G, need_n(), &F, seed);
    else if (theorem == "quad-criterion")
        r = verify_quadratic_criterion(G, need_n(), &F, seed);
    else if (theorem == "odd-quotient")
        r = verify_cor_odd_quotient(G, need_n(), &F, seed);
    else if (theorem == "subnormal")
        r = verify_cor_subnormal(G, need_n(), &F, seed);
    else if (theorem == "fong")
        r = verify_fong(G, &F, seed);
    else if (theorem == "radical")
        r = verify_radical(G, &F, seed);
    else if (theorem == "height0")
        r = verify_odd_height0(G, &F, seed);
    else if (theorem == "central-theta")
        r = verify_central_theta(G, &F, seed);
    else if (theorem == "principal-block")
        r = verify_principal_block_lemma(G, &F, seed);
    else
        throw std::invalid_argument("unknown theorem: " + theorem);
    return report_dict(r);
}

}  // namespace

PYBIND11_MODULE(char2py, m) {
    m.doc() = "characteristic-2 modular representation theory";

    py::class_<PermGroup>(m, "Group")
        .def_property_readonly("name", &PermGroup::name)
        .def_property_readonly("order", &PermGroup::order)
        .def_property_readonly("exponent", &PermGroup::exponent)
        .def_property_readonly("num_classes", &PermGroup::num_classes)
        .def("regular_classes", &PermGroup::regular_classes)
        .def("is_normal", &PermGroup::is_normal, py::arg("subgroup"))
        .def("normal_subgroups", &PermGroup::normal_subgroups)
        .def("__repr__", [](const PermGroup& G) {
            return "<Group " + G.name() + " of order " +
                   std::to_string(G.order()) + ">";
        });

    m.def("load_group", &load_any, py::arg("spec"),
          py::arg("cap") = std::size_t{2000000},
          "load a group from a file path or by built-in corpus name");
    m.def("corpus_names", &corpus_names);
    m.def("splitting_field_params", [](const PermGroup& G) {
        Field F = splitting_field(G);
        return py::make_tuple(F.modulus(), F.k());
    });
    m.def("irreducibles", &irreducibles, py::arg("group"), py::arg("seed") = 1);
    m.def("brauer_table", &table_dict, py::arg("group"), py::arg("seed") = 1);
    m.def("verify", &verify, py::arg("theorem"), py::arg("group"),
          py::arg("normal") = nullptr, py::arg("seed") = 1);
    m.def(
        "run_entry",
        [](const std::string& name, std::uint64_t seed) {
            SuiteResult res = run_entry(name, seed);
            py::list reports;
            for (const VerifyReport& r : res.reports)
                reports.append(report_dict(r));
            py::dict d;
            d["entry"] = res.entry;
            d["ok"] = res.ok();
            d["reports"] = reports;
            return d;
        },
        py::arg("name"), py::arg("seed") = 1);
}
