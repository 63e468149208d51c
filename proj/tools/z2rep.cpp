// z2rep: command-line front end for the Z2xZ2-graded osp(1|2) engine.
#include "z2rep/cartan_modules.hpp"
#include "z2rep/json_io.hpp"
#include "z2rep/run_config.hpp"
#include "z2rep/sampling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace z2rep;

constexpr int exit_pass = 0;
constexpr int exit_math_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModuleArgs {
    std::string kind = "mr";
    std::string r;
    std::string lambda;
};

void add_module_options(CLI::App* cmd, ModuleArgs& args)
{
    cmd->add_option("--kind", args.kind, "mr for M(r), mrl for M(r,lambda)")->capture_default_str();
    cmd->add_option("--r", args.r, "lowest weight r as p/q or integer")->required();
    cmd->add_option("--lambda", args.lambda, "Rt^2 eigenvalue lambda (mrl only)");
}

Rational parse_arg(const std::string& text, const std::string& what)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(what + ": " + e.what());
    }
}

VermaKind make_kind(const ModuleArgs& args)
{
    const Rational r = parse_arg(args.r, "--r");
    if (args.kind == "mr" || args.kind == "Mr") {
        if (!args.lambda.empty())
            throw UsageError("--lambda only applies to --kind mrl");
        return VermaKind::mr(r);
    }
    if (args.kind == "mrl" || args.kind == "MrLambda") {
        if (args.lambda.empty())
            throw UsageError("--kind mrl needs --lambda");
        const Rational lambda = parse_arg(args.lambda, "--lambda");
        if (sgn(lambda) == 0)
            throw UsageError("--lambda must be nonzero");
        return VermaKind::mr_lambda(r, lambda);
    }
    throw UsageError("--kind must be mr or mrl, got '" + args.kind + "'");
}

class Csv {
public:
    explicit Csv(std::vector<std::string> header) { row(header); }

    void row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out_ << ',';
            out_ << escape(cells[i]);
        }
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

private:
    static std::string escape(const std::string& s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"')
                q += '"';
            q += ch;
        }
        return q + "\"";
    }

    std::ostringstream out_;
};

std::string cell(const Rational& x) { return to_string(x); }
std::string cell(std::size_t x) { return std::to_string(x); }
std::string cell(int x) { return std::to_string(x); }
std::string cell(bool x) { return x ? "true" : "false"; }

void emit(const RunConfig& cfg, const std::string& text)
{
    if (!cfg.output_path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*cfg.output_path);
    if (!out)
        throw UsageError("cannot write --out file '" + *cfg.output_path + "'");
    out << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

std::string join_generators(const std::vector<Generator>& gs)
{
    std::string s;
    for (auto g : gs) {
        if (!s.empty())
            s += ' ';
        s += name(g);
    }
    return s;
}

// Bilinearity of the bracket on random rational combinations.
bool check_bilinearity(const StructureTable& table, const RunConfig& cfg, std::size_t& checked)
{
    RationalSampler sampler(cfg.seed);
    auto random_element = [&sampler] {
        AlgebraElement x;
        for (auto g : all_generators)
            x.add(g, sampler.next());
        return x;
    };
    for (int s = 0; s < cfg.samples; ++s) {
        const AlgebraElement x = random_element(), x2 = random_element(), y = random_element();
        const Rational c = sampler.next();
        ++checked;
        if (bracket(x + x2, y, table) != bracket(x, y, table) + bracket(x2, y, table))
            return false;
        if (bracket(c * x, y, table) != c * bracket(x, y, table))
            return false;
        if (bracket(y, x + x2, table) != bracket(y, x, table) + bracket(y, x2, table))
            return false;
    }
    return true;
}

int cmd_verify_algebra(const RunConfig& cfg, const std::vector<std::string>& mutations)
{
    StructureTable table = StructureTable::standard();
    for (const auto& m : mutations) {
        BracketAssignment a;
        try {
            a = parse_bracket_assignment(m);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--mutate: ") + e.what());
        }
        table.set_graded_pair(a.x, a.y, a.value);
    }
    const AxiomReport report = verify_axioms(table);
    std::size_t bilinear_checked = 0;
    const bool bilinear = check_bilinearity(table, cfg, bilinear_checked);
    const bool pass = report.passed && bilinear;

    if (cfg.output_format == OutputFormat::json) {
        Json j = to_json(report);
        j["mutations"] = mutations;
        j["bilinearity_samples"] = bilinear_checked;
        j["bilinear"] = bilinear;
        j["passed"] = pass;
        emit_json(cfg, j);
    } else {
        Csv csv({"check", "passed", "checked", "counterexample", "residual"});
        const std::string where = join_generators(report.counterexample);
        const std::string failed = report.failed_check.value_or("");
        csv.row({"antisymmetry", cell(failed != "antisymmetry"), cell(report.pairs_checked),
                 failed == "antisymmetry" ? where : "", failed == "antisymmetry" ? to_string(report.residual) : ""});
        csv.row({"degree", cell(failed != "degree"), cell(report.pairs_checked), failed == "degree" ? where : "",
                 failed == "degree" ? to_string(report.residual) : ""});
        csv.row({"jacobi", cell(failed != "jacobi"), cell(report.triples_checked), failed == "jacobi" ? where : "",
                 failed == "jacobi" ? to_string(report.residual) : ""});
        csv.row({"bilinearity", cell(bilinear), cell(bilinear_checked), "", ""});
        emit(cfg, csv.str());
    }
    return pass ? exit_pass : exit_math_failure;
}

int cmd_bracket_table(const RunConfig& cfg)
{
    const StructureTable& table = StructureTable::standard();
    if (cfg.output_format == OutputFormat::json) {
        emit_json(cfg, to_json(table));
        return exit_pass;
    }
    Csv csv({"x", "y", "gen", "coeff"});
    for (auto x : all_generators)
        for (auto y : all_generators)
            for (const auto& [g, c] : table(x, y).terms())
                csv.row({std::string(name(x)), std::string(name(y)), std::string(name(g)), to_string(c)});
    emit(cfg, csv.str());
    return exit_pass;
}

int cmd_singular(const RunConfig& cfg, const ModuleArgs& args, int level, bool sweep, const std::string& sector_text)
{
    const VermaKind kind = make_kind(args);
    if (!sweep && level < 1)
        throw UsageError("give --level N (N >= 1) or --sweep");
    std::optional<GradedDegree> only;
    if (!sector_text.empty()) {
        try {
            only = parse_degree(sector_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--sector: ") + e.what());
        }
    }

    std::vector<SingularReport> reports;
    const int lo = sweep ? 1 : level;
    const int hi = sweep ? cfg.level_cap : level;
    for (int N = lo; N <= hi; ++N) {
        for (GradedDegree sector : level_sectors(N)) {
            if (only && *only != sector)
                continue;
            reports.push_back(find_singular(kind, N, sector));
        }
    }
    if (only && reports.empty())
        throw UsageError("sector " + to_string(*only) + " does not occur at level " + std::to_string(level));

    bool pass = true;
    for (const auto& r : reports)
        pass = pass && r.closed_form_match != ClosedFormMatch::mismatch;

    if (cfg.output_format == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        emit_json(cfg, arr);
    } else {
        Csv csv({"level", "sector", "nullspace_dim", "closed_form", "closed_form_match", "rtilde_computed",
                 "rtilde_stated"});
        for (const auto& r : reports)
            csv.row({cell(r.level), to_string(r.sector), cell(r.nullspace.size()),
                     r.closed_form ? to_string(*r.closed_form) : "", to_string(r.closed_form_match),
                     r.rtilde ? to_string(r.rtilde->computed) : "", r.rtilde ? to_string(r.rtilde->stated) : ""});
        emit(cfg, csv.str());
    }
    return pass ? exit_pass : exit_math_failure;
}

void emit_levels(const RunConfig& cfg, const QuotientTable& table, Json header)
{
    if (cfg.output_format == OutputFormat::json) {
        Json j = std::move(header);
        const Json body = to_json(table);
        for (const auto& [k, v] : body.items())
            j[k] = v;
        emit_json(cfg, j);
        return;
    }
    Csv csv({"level", "verma_dim", "submodule_dim", "quotient_dim"});
    for (const auto& l : table.per_level)
        csv.row({cell(l.level), cell(l.verma_dim), cell(l.submodule_dim), cell(l.quotient_dim)});
    emit(cfg, csv.str());
}

int cmd_classify(const RunConfig& cfg, const ModuleArgs& args, int max_level)
{
    const VermaKind kind = make_kind(args);
    ClassificationVerdict v = [&] {
        try {
            return classify_module(kind, max_level > 0 ? max_level : cfg.level_cap, cfg.classify_m_cap());
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();

    bool pass = v.singular_vectors_verified && v.quotient_irreducible();
    if (v.theorem_case == TheoremCase::ii) {
        const auto M = static_cast<std::size_t>(v.Ms.front());
        pass = pass && v.finite() && *v.table.total == (2 * M + 1) * (2 * M + 1);
    }

    if (cfg.output_format == OutputFormat::json) {
        emit_json(cfg, to_json(v));
    } else {
        Csv csv({"case", "M", "dimension", "level", "verma_dim", "submodule_dim", "quotient_dim"});
        const std::string M = v.Ms.empty() ? "" : std::to_string(v.Ms.front());
        const std::string dim = v.finite() ? std::to_string(*v.table.total) : "infinite";
        for (const auto& l : v.table.per_level)
            csv.row({to_string(v.theorem_case), M, dim, cell(l.level), cell(l.verma_dim), cell(l.submodule_dim),
                     cell(l.quotient_dim)});
        emit(cfg, csv.str());
    }
    return pass ? exit_pass : exit_math_failure;
}

int cmd_dims(const RunConfig& cfg, const ModuleArgs& args, int max_level)
{
    const VermaKind kind = make_kind(args);
    QuotientTable table;
    try {
        table = quotient_dims(kind, max_level > 0 ? max_level : cfg.level_cap, cfg.classify_m_cap());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json header{{"kind", kind_tag(kind)}, {"r", to_string(kind.r())}};
    if (kind.has_lambda())
        header["lambda"] = to_string(kind.lambda());
    emit_levels(cfg, table, std::move(header));
    return exit_pass;
}

int cmd_cartan(const RunConfig& cfg, int n, const std::string& r_text, const std::string& c_text)
{
    const Rational r = parse_arg(r_text, "--r");
    std::vector<Rational> c;
    std::stringstream in(c_text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty())
            c.push_back(parse_arg(item, "--c"));
    HModule m;
    try {
        m = build_h_module(n, r, c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const HClassification result = classify(m);
    bool pass = true;
    for (const auto& p : result.constituents)
        pass = pass && p.r == r;

    if (cfg.output_format == OutputFormat::json) {
        emit_json(cfg, to_json(result));
    } else {
        Csv csv({"kind", "r", "lambda"});
        for (const auto& p : result.constituents)
            csv.row({p.kind == HKind::nu_r ? "nu_r" : "nu_r_lambda", to_string(p.r),
                     p.lambda ? to_string(*p.lambda) : ""});
        for (const auto& u : result.undetermined)
            csv.row({"undetermined_dim_" + std::to_string(u.dim), to_string(u.r), ""});
        emit(cfg, csv.str());
    }
    return pass ? exit_pass : exit_math_failure;
}

int cmd_recurrence(const RunConfig& cfg, const std::string& system, int M, bool sweep, const std::string& r_text,
                   const std::string& lambda_text)
{
    const auto which = recurrence_from_name(system);
    if (!which)
        throw UsageError("unknown --system '" + system + "'");
    const Rational r = parse_arg(r_text, "--r");
    std::optional<Rational> lambda;
    if (!lambda_text.empty())
        lambda = parse_arg(lambda_text, "--lambda");
    if (*which == RecurrenceSystem::mu_nu_lambda && (!lambda || sgn(*lambda) == 0))
        throw UsageError("mu-nu-lambda needs a nonzero --lambda");
    const bool even_level = *which == RecurrenceSystem::rho_sigma || *which == RecurrenceSystem::gamma_delta;
    const int lo = sweep ? (even_level ? 1 : 0) : M;
    const int hi = sweep ? cfg.sweep_m_cap() : M;
    if (!sweep && (M < 0 || (even_level && M < 1)))
        throw UsageError("--M out of range for " + system);

    std::vector<RecurrenceSolution> out;
    for (int m = lo; m <= hi; ++m)
        out.push_back(recurrence_solve(*which, m, r, lambda));

    if (cfg.output_format == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& s : out)
            arr.push_back(to_json(s));
        emit_json(cfg, arr);
    } else {
        Csv csv({"system", "M", "equations", "unknowns", "solution_dim", "solution"});
        for (const auto& s : out) {
            std::string sol;
            if (s.solutions.size() == 1)
                for (const auto& x : s.solutions.front())
                    sol += (sol.empty() ? "" : " ") + to_string(x);
            csv.row({system, cell(s.M), cell(s.equations), cell(s.unknowns.size()), cell(s.solutions.size()), sol});
        }
        emit(cfg, csv.str());
    }
    return exit_pass;
}

int cmd_verify_representation(const RunConfig& cfg, const ModuleArgs& args, int max_level)
{
    std::vector<VermaKind> kinds;
    if (!args.r.empty()) {
        kinds.push_back(make_kind(args));
    } else {
        const bool lam = args.kind == "mrl" || args.kind == "MrLambda";
        if (!lam && args.kind != "mr" && args.kind != "Mr")
            throw UsageError("--kind must be mr or mrl, got '" + args.kind + "'");
        RationalSampler sampler(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s)
            kinds.push_back(lam ? VermaKind::mr_lambda(sampler.next(), sampler.next_nonzero())
                                : VermaKind::mr(sampler.next()));
    }

    Json arr = Json::array();
    Csv csv({"kind", "r", "lambda", "levels", "checks", "failures"});
    bool pass = true;
    for (const auto& kind : kinds) {
        std::size_t checks = 0, failures = 0;
        for (int N = 0; N <= max_level; ++N)
            for (const auto& b : enumerate_level(kind, N).basis)
                for (auto g1 : all_generators)
                    for (auto g2 : all_generators) {
                        ++checks;
                        if (!check_representation_property(g1, g2, ModuleVector(kind, b)).is_zero())
                            ++failures;
                    }
        pass = pass && failures == 0;
        Json j{{"kind", kind_tag(kind)}, {"r", to_string(kind.r())}};
        if (kind.has_lambda())
            j["lambda"] = to_string(kind.lambda());
        j["levels"] = max_level + 1;
        j["checks"] = checks;
        j["failures"] = failures;
        arr.push_back(std::move(j));
        csv.row({kind_tag(kind), to_string(kind.r()), kind.has_lambda() ? to_string(kind.lambda()) : "",
                 cell(max_level + 1), cell(checks), cell(failures)});
    }
    if (cfg.output_format == OutputFormat::json)
        emit_json(cfg, arr);
    else
        emit(cfg, csv.str());
    return pass ? exit_pass : exit_math_failure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for the Z2xZ2-graded osp(1|2) and its Verma modules"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format, out;
    std::optional<long long> seed;
    std::optional<int> level_cap, m_cap, samples;
    app.add_option("--format", format, "json (default) or csv");
    app.add_option("--out", out, "write output to this file");
    app.add_option("--seed", seed, "seed for sampled rationals");
    app.add_option("--level-cap", level_cap, "highest level for sweeps (default 16)");
    app.add_option("--m-cap", m_cap, "highest M for sweeps (default 6; classification default 32)");
    app.add_option("--samples", samples, "number of sampled parameters (default 5)");

    std::vector<std::string> mutations;
    auto* verify = app.add_subcommand("verify-algebra", "check antisymmetry, degrees, Jacobi and bilinearity");
    verify->add_option("--mutate", mutations, "override a bracket, e.g. \"[R,Lp]=Lp\"");

    auto* table = app.add_subcommand("bracket-table", "print the structure table");

    ModuleArgs sing_args;
    int sing_level = 0;
    bool sing_sweep = false;
    std::string sing_sector;
    auto* singular = app.add_subcommand("singular", "singular vectors at a level, or at every level up to the cap");
    add_module_options(singular, sing_args);
    singular->add_option("--level", sing_level, "level N");
    singular->add_flag("--sweep", sing_sweep, "all levels 1..level-cap");
    singular->add_option("--sector", sing_sector, "restrict to one degree sector, e.g. 01");

    ModuleArgs cls_args;
    int cls_level = 0;
    auto* classify_cmd = app.add_subcommand("classify", "lowest-weight classification case and quotient dimension");
    add_module_options(classify_cmd, cls_args);
    classify_cmd->add_option("--max-level", cls_level, "levels to tabulate (default level-cap)");

    ModuleArgs dims_args;
    int dims_level = 0;
    auto* dims = app.add_subcommand("dims", "Verma, submodule and quotient dimensions per level");
    add_module_options(dims, dims_args);
    dims->add_option("--max-level", dims_level, "highest level (default level-cap)");

    int cartan_n = 1;
    std::string cartan_r, cartan_c;
    auto* cartan = app.add_subcommand("cartan", "decompose a chain module of the Cartan subalgebra");
    cartan->add_option("--n", cartan_n, "dimension")->required();
    cartan->add_option("--r", cartan_r, "eigenvalue of R")->required();
    cartan->add_option("--c", cartan_c, "comma-separated chain coefficients");

    std::string rec_system, rec_r, rec_lambda;
    int rec_M = 0;
    bool rec_sweep = false;
    auto* rec = app.add_subcommand("recurrence", "solve the coefficient recurrences of a singular-vector ansatz");
    rec->add_option("--system", rec_system, "mu-nu, alpha-beta, rho-sigma, gamma-delta or mu-nu-lambda")->required();
    rec->add_option("--M", rec_M, "M");
    rec->add_flag("--sweep", rec_sweep, "all M up to m-cap");
    rec->add_option("--r", rec_r, "r")->required();
    rec->add_option("--lambda", rec_lambda, "lambda (mu-nu-lambda)");

    ModuleArgs rep_args;
    int rep_level = 8;
    auto* rep = app.add_subcommand("verify-representation",
                                   "check that the generator actions respect every bracket relation");
    rep->add_option("--kind", rep_args.kind, "mr or mrl")->capture_default_str();
    rep->add_option("--r", rep_args.r, "r (omit to sample)");
    rep->add_option("--lambda", rep_args.lambda, "lambda (mrl)");
    rep->add_option("--max-level", rep_level, "highest level")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        apply_config_env(cfg);
        if (!format.empty())
            cfg.output_format = parse_output_format(format);
        if (!out.empty())
            cfg.output_path = out;
        if (seed) {
            if (*seed < 0)
                throw std::invalid_argument("--seed must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(*seed);
        }
        if (level_cap)
            cfg.level_cap = *level_cap;
        if (m_cap)
            cfg.m_cap = *m_cap;
        if (samples)
            cfg.samples = *samples;
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (verify->parsed())
            return cmd_verify_algebra(cfg, mutations);
        if (table->parsed())
            return cmd_bracket_table(cfg);
        if (singular->parsed())
            return cmd_singular(cfg, sing_args, sing_level, sing_sweep, sing_sector);
        if (classify_cmd->parsed())
            return cmd_classify(cfg, cls_args, cls_level);
        if (dims->parsed())
            return cmd_dims(cfg, dims_args, dims_level);
        if (cartan->parsed())
            return cmd_cartan(cfg, cartan_n, cartan_r, cartan_c);
        if (rec->parsed())
            return cmd_recurrence(cfg, rec_system, rec_M, rec_sweep, rec_r, rec_lambda);
        if (rep->parsed())
            return cmd_verify_representation(cfg, rep_args, rep_level);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
