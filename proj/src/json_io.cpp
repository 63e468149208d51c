#include "z2rep/json_io.hpp"

namespace z2rep {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const AlgebraElement& x)
{
    Json out = Json::array();
    for (const auto& [g, c] : x.terms())
        out.push_back({{"gen", name(g)}, {"coeff", to_string(c)}});
    return out;
}

Json to_json(const StructureTable& table)
{
    Json out = Json::array();
    for (auto x : all_generators)
        for (auto y : all_generators)
            out.push_back({{"x", name(x)}, {"y", name(y)}, {"result", to_json(table(x, y))}});
    return out;
}

Json to_json(const AxiomReport& report)
{
    Json out{{"passed", report.passed},
             {"pairs_checked", report.pairs_checked},
             {"triples_checked", report.triples_checked}};
    if (report.failed_check) {
        Json where = Json::array();
        for (auto g : report.counterexample)
            where.push_back(name(g));
        out["failed_check"] = *report.failed_check;
        out["counterexample"] = where;
        out["residual"] = to_json(report.residual);
    }
    return out;
}

std::string kind_tag(const VermaKind& kind) { return kind.has_lambda() ? "MrLambda" : "Mr"; }

namespace {

void put_kind(Json& out, const VermaKind& kind)
{
    out["kind"] = kind_tag(kind);
    out["r"] = to_string(kind.r());
    if (kind.has_lambda())
        out["lambda"] = to_string(kind.lambda());
}

}  // namespace

Json to_json(const ModuleVector& v)
{
    Json out = Json::object();
    put_kind(out, v.kind());
    Json terms = Json::array();
    for (const auto& [b, c] : v.terms()) {
        Json t{{"alpha", b.alpha}, {"k", b.k}, {"m", b.m}};
        if (b.has_beta())
            t["beta"] = b.beta;
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json to_json(const SingularReport& report)
{
    Json out = Json::object();
    put_kind(out, report.kind);
    out["level"] = report.level;
    out["sector"] = to_string(report.sector);
    Json ns = Json::array();
    for (const auto& v : report.nullspace)
        ns.push_back(to_json(v));
    out["nullspace"] = std::move(ns);
    out["closed_form_match"] = to_string(report.closed_form_match);
    if (report.closed_form) {
        out["closed_form"] = to_string(*report.closed_form);
        out["M"] = *report.M;
    }
    if (report.rtilde)
        out["rtilde"] = {{"computed", to_string(report.rtilde->computed)}, {"stated", to_string(report.rtilde->stated)}};
    return out;
}

Json to_json(const RtildeReport& report)
{
    auto opt = [](const std::optional<Rational>& x) { return x ? Json(to_string(*x)) : Json(nullptr); };
    Json out{{"M", report.M},
             {"chi01_to_chi10", opt(report.chi01_to_chi10)},
             {"chi10_to_chi01", opt(report.chi10_to_chi01)},
             {"stated", to_string(report.stated)},
             {"matches_stated", report.matches_stated()}};
    if (report.chi11_annihilated)
        out["chi11_annihilated"] = *report.chi11_annihilated;
    return out;
}

Json to_json(const RecurrenceSolution& solution)
{
    Json sols = Json::array();
    for (const auto& x : solution.solutions) {
        Json row = Json::array();
        for (const auto& c : x)
            row.push_back(to_string(c));
        sols.push_back(std::move(row));
    }
    return {{"system", to_string(solution.system)},
            {"M", solution.M},
            {"unknowns", solution.unknowns},
            {"equations", solution.equations},
            {"solutions", std::move(sols)}};
}

Json to_json(const QuotientTable& table)
{
    Json rows = Json::array();
    for (const auto& l : table.per_level)
        rows.push_back({{"level", l.level},
                        {"verma_dim", l.verma_dim},
                        {"submodule_dim", l.submodule_dim},
                        {"quotient_dim", l.quotient_dim}});
    return {{"per_level", std::move(rows)}, {"total", table.total ? Json(*table.total) : Json("infinite")}};
}

Json to_json(const ClassificationVerdict& verdict)
{
    Json out = Json::object();
    put_kind(out, verdict.kind);
    out["case"] = to_string(verdict.theorem_case);
    if (!verdict.Ms.empty()) {
        out["M"] = verdict.Ms.front();
        if (verdict.Ms.size() > 1)
            out["all_M"] = verdict.Ms;
    }
    out["dimension"] = verdict.finite() ? Json(*verdict.table.total) : Json("infinite");
    out["singular_vectors_verified"] = verdict.singular_vectors_verified;
    out["quotient_irreducible"] = verdict.quotient_irreducible();
    out["per_level"] = to_json(verdict.table)["per_level"];
    return out;
}

Json to_json(const IrreducibleHModule& m)
{
    Json out{{"kind", m.kind == HKind::nu_r ? "nu_r" : "nu_r_lambda"}, {"r", to_string(m.r)}};
    if (m.lambda)
        out["lambda"] = to_string(*m.lambda);
    return out;
}

Json to_json(const HClassification& c)
{
    Json pieces = Json::array();
    for (const auto& p : c.constituents)
        pieces.push_back(to_json(p));
    Json out{{"dim", c.dim}, {"r", to_string(c.r)}, {"constituents", std::move(pieces)}};
    if (!c.complete()) {
        Json dims = Json::array();
        for (const auto& m : c.undetermined)
            dims.push_back(m.dim);
        out["undetermined_pieces"] = std::move(dims);
    }
    return out;
}

Json to_json(const Chi11Membership& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.A.cols(); ++j)
            row.push_back(to_string(m.A(i, j)));
        a.push_back(std::move(row));
    }
    Json c = Json::array();
    for (const auto& x : m.c)
        c.push_back(to_string(x));
    return {{"M", m.M},
            {"matrix", std::move(a)},
            {"determinant", to_string(m.determinant)},
            {"c", std::move(c)},
            {"residual_zero", m.residual.is_zero()}};
}

}  // namespace z2rep
