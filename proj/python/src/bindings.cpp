#include "z2rep/cartan_modules.hpp"
#include "z2rep/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace z2rep;

namespace {

// Rationals cross the boundary as strings ("p/q" or integers); results as JSON text.
VermaKind kind_of(const std::string& r, const std::optional<std::string>& lambda)
{
    if (!lambda)
        return VermaKind::mr(parse_rational(r));
    return VermaKind::mr_lambda(parse_rational(r), parse_rational(*lambda));
}

Generator generator(const std::string& text)
{
    auto g = generator_from_name(text);
    if (!g)
        throw std::invalid_argument("unknown generator '" + text + "'");
    return *g;
}

std::string dump(const Json& j) { return j.dump(); }

std::string py_verify_axioms(const std::vector<std::string>& mutations)
{
    StructureTable table = StructureTable::standard();
    for (const auto& m : mutations) {
        const auto a = parse_bracket_assignment(m);
        table.set_graded_pair(a.x, a.y, a.value);
    }
    return dump(to_json(verify_axioms(table)));
}

std::string py_act(const std::string& g, const std::string& r, const std::optional<std::string>& lambda,
                   int alpha, int k, int m, int beta)
{
    const VermaKind kind = kind_of(r, lambda);
    return dump(to_json(act_on_index(generator(g), kind, {alpha, k, m, kind.has_lambda() ? beta : -1})));
}

std::string py_find_singular(const std::string& r, const std::optional<std::string>& lambda, int level,
                             const std::string& sector)
{
    return dump(to_json(find_singular(kind_of(r, lambda), level, parse_degree(sector))));
}

std::string py_closed_form(const std::string& r, const std::optional<std::string>& lambda, const std::string& chi,
                           int M)
{
    Chi which;
    if (chi == "chi01")
        which = Chi::chi01;
    else if (chi == "chi10")
        which = Chi::chi10;
    else if (chi == "chi11")
        which = Chi::chi11;
    else
        throw std::invalid_argument("chi must be chi01, chi10 or chi11");
    return dump(to_json(closed_form(kind_of(r, lambda), which, M)));
}

std::string py_recurrence(const std::string& system, int M, const std::string& r,
                          const std::optional<std::string>& lambda)
{
    const auto which = recurrence_from_name(system);
    if (!which)
        throw std::invalid_argument("unknown recurrence system '" + system + "'");
    std::optional<Rational> lam;
    if (lambda)
        lam = parse_rational(*lambda);
    return dump(to_json(recurrence_solve(*which, M, parse_rational(r), lam)));
}

std::string py_cartan(int n, const std::string& r, const std::vector<std::string>& c)
{
    std::vector<Rational> coeffs;
    for (const auto& x : c)
        coeffs.push_back(parse_rational(x));
    return dump(to_json(classify(build_h_module(n, parse_rational(r), coeffs))));
}

std::size_t py_representation_failures(const std::string& r, const std::optional<std::string>& lambda,
                                       int max_level)
{
    const VermaKind kind = kind_of(r, lambda);
    std::size_t failures = 0;
    for (int n = 0; n <= max_level; ++n)
        for (const auto& b : enumerate_level(kind, n).basis)
            for (Generator x : all_generators)
                for (Generator y : all_generators)
                    if (!check_representation_property(x, y, ModuleVector(kind, b)).is_zero())
                        ++failures;
    return failures;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact engine for the Z2xZ2-graded osp(1|2) and its Verma modules";

    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("verify_axioms", &py_verify_axioms, py::arg("mutations") = std::vector<std::string>{});
    m.def("bracket_table", [] { return dump(to_json(StructureTable::standard())); });
    m.def("act", &py_act, py::arg("g"), py::arg("r"), py::arg("lam"), py::arg("alpha"), py::arg("k"), py::arg("m"),
          py::arg("beta") = 0);
    m.def("find_singular", &py_find_singular, py::arg("r"), py::arg("lam"), py::arg("level"), py::arg("sector"));
    m.def("closed_form", &py_closed_form, py::arg("r"), py::arg("lam"), py::arg("chi"), py::arg("M"));
    m.def(
        "verify_rtilde",
        [](const std::string& r, const std::optional<std::string>& lambda, int M) {
            return dump(to_json(verify_rtilde_relations(kind_of(r, lambda), M)));
        },
        py::arg("r"), py::arg("lam"), py::arg("M"));
    m.def("recurrence", &py_recurrence, py::arg("system"), py::arg("M"), py::arg("r"), py::arg("lam"));
    m.def("chi11_membership", [](int M) { return dump(to_json(chi11_membership(M))); }, py::arg("M"));
    m.def(
        "quotient_dims",
        [](const std::string& r, const std::optional<std::string>& lambda, int max_level, int m_cap) {
            return dump(to_json(quotient_dims(kind_of(r, lambda), max_level, m_cap)));
        },
        py::arg("r"), py::arg("lam"), py::arg("max_level"), py::arg("m_cap") = 32);
    m.def(
        "classify",
        [](const std::string& r, const std::optional<std::string>& lambda, int max_level, int m_cap) {
            return dump(to_json(classify_module(kind_of(r, lambda), max_level, m_cap)));
        },
        py::arg("r"), py::arg("lam"), py::arg("max_level"), py::arg("m_cap") = 32);
    m.def("cartan", &py_cartan, py::arg("n"), py::arg("r"), py::arg("c"));
    m.def("representation_failures", &py_representation_failures, py::arg("r"), py::arg("lam"),
          py::arg("max_level"));
}
