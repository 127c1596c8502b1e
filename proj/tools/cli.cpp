#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "report.hpp"
#include "seshadri/cluster.hpp"
#include "seshadri/conditions.hpp"
#include "seshadri/covering.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/polynomial_io.hpp"
#include "seshadri/surd.hpp"
#include "seshadri/witness.hpp"

namespace seshadri::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultPrecision = 64;
constexpr int kDecimalDigits = 20;

class UsageError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct Outcome
{
    Report report;
    int code = kSuccess;
};

std::string join_tab(std::initializer_list<std::string> cells)
{
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) {
            out += '\t';
        }
        out += c;
    }
    return out;
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

json surd_json(const SurdValue& v)
{
    return json{{"exact", v.to_string()}, {"approx", v.to_decimal(kDecimalDigits)}};
}

Precision default_precision()
{
    const char* env = std::getenv("SESHADRI_PRECISION_DEFAULT");
    if (env == nullptr || *env == '\0') {
        return kDefaultPrecision;
    }
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(env).size() || value < 1) {
        throw UsageError("SESHADRI_PRECISION_DEFAULT must be a positive integer, got '" + std::string(env) + "'");
    }
    return value;
}

// ----------------------------------------------------------------- table

struct ExpectedRow
{
    int n;
    std::int64_t d, m, h0, conditions;
    Rat epsilon;
};

const std::vector<ExpectedRow>& expected_table()
{
    static const std::vector<ExpectedRow> rows{
        {2, 1, 2, 3, 2, Rat(1)},          {3, 1, 2, 3, 2, make_rat(3, 2)},
        {4, 1, 2, 3, 2, Rat(2)},          {5, 2, 5, 6, 5, Rat(2)},
        {6, 2, 5, 6, 5, make_rat(12, 5)}, {7, 3, 8, 10, 9, make_rat(21, 8)},
        {8, 6, 17, 28, 27, make_rat(48, 17)}, {9, 3, 9, 10, 9, Rat(3)},
    };
    return rows;
}

Outcome cmd_table(std::int64_t d_max)
{
    Outcome o;
    Report& r = o.report;
    r.command = "table";
    r.inputs["dmax"] = d_max;
    r.provenance = {"invariant condition count (k+1)(nk/2+r), m = nk+r",
                    "h0(O_P2(d)) = (d+2)(d+1)/2",
                    "Seshadri-exceptional inequality d^2 n <= m^2",
                    "existence inequality h0(O_P2(d)) > conditions"};

    std::vector<TableRow> rows;
    try {
        rows = theorem_table(d_max);
    } catch (const std::runtime_error& e) {
        r.results["error"] = e.what();
        r.results["matches_expected"] = false;
        r.tsv.push_back(std::string("# error: ") + e.what());
        o.code = kVerificationFailed;
        return o;
    }

    bool matches = rows.size() == expected_table().size();
    json divisors = json::array();
    json constants = json::array();
    r.tsv.push_back("# invariant Seshadri-exceptional divisors D ~ d*pi^*O(1) with multiplicity m");
    r.tsv.push_back(join_tab({"n", "d", "m", "h0", "conditions"}));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Candidate& c = rows[i].candidate;
        divisors.push_back({{"n", c.n}, {"d", c.d}, {"m", c.m}, {"h0", c.h0}, {"conditions", c.conditions}});
        r.tsv.push_back(join_tab({std::to_string(c.n), std::to_string(c.d), std::to_string(c.m),
                                  std::to_string(c.h0), std::to_string(c.conditions)}));
        if (i < expected_table().size()) {
            const ExpectedRow& e = expected_table()[i];
            matches = matches && e.n == c.n && e.d == c.d && e.m == c.m && e.h0 == c.h0 &&
                      e.conditions == c.conditions && e.epsilon == c.epsilon;
        }
    }
    r.tsv.push_back("# Seshadri constant of pi^*O(1) at a very general ramification point");
    r.tsv.push_back(join_tab({"n", "epsilon", "maximal"}));
    for (const TableRow& row : rows) {
        const bool maximal = surd_compare(SurdValue(row.candidate.epsilon), SurdValue(1, row.n)) ==
                             std::strong_ordering::equal;
        constants.push_back({{"n", row.n}, {"epsilon", to_string(row.candidate.epsilon)}, {"maximal", maximal}});
        r.tsv.push_back(join_tab({std::to_string(row.n), to_string(row.candidate.epsilon), bool_text(maximal)}));
    }
    r.results["divisors"] = divisors;
    r.results["constants"] = constants;
    r.results["matches_expected"] = matches;
    if (!matches) {
        r.tsv.push_back("# MISMATCH against the expected table");
        o.code = kVerificationFailed;
    }
    return o;
}

// ---------------------------------------------------------------- bounds

Outcome cmd_bounds(int n, std::int64_t l2, std::int64_t r_points)
{
    const CoveringSpec spec{n, l2, {}};
    const SeshadriBounds b = steffens_bounds(spec, r_points);
    Outcome o;
    Report& r = o.report;
    r.command = "bounds";
    r.inputs = {{"n", n}, {"L2", l2}, {"r", r_points}};
    r.provenance = {"floor(sqrt(r (pi^*L)^2))/r <= eps(pi^*L; P_1..P_r) <= sqrt((pi^*L)^2)/sqrt(r)",
                    "(pi^*L)^2 = n L^2"};
    r.results = {{"lower", to_string(b.lower)},
                 {"upper", surd_json(b.upper)},
                 {"maximal", b.maximal},
                 {"pullback_L2", spec.pullback_l_squared()}};
    if (b.maximal) {
        r.results["epsilon"] = to_string(b.lower);
    }
    r.tsv = {join_tab({"lower", to_string(b.lower)}),
             join_tab({"upper", b.upper.to_string()}),
             join_tab({"upper_approx", b.upper.to_decimal(kDecimalDigits)}),
             join_tab({"maximal", bool_text(b.maximal)})};
    if (b.maximal) {
        r.tsv.push_back(join_tab({"epsilon", to_string(b.lower)}));
    }
    return o;
}

// --------------------------------------------------------------- cluster

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read curve file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string mults_text(const std::vector<std::int64_t>& m)
{
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += (i ? "," : "") + std::to_string(m[i]);
    }
    return out + ")";
}

Outcome cmd_cluster(const std::string& curve_text, const std::string& curve_source, const std::string& branch_text,
                    int n, Precision precision)
{
    if (n < 1) {
        throw UsageError("--n must be >= 1");
    }
    const BiSeries curve = parse_curve_text(curve_text);
    const BranchJet branch = parse_branch(branch_text, precision);
    const LocalCurve normalized = normalize_branch(LocalCurve(curve, curve_source), branch);
    const ClusterResult cluster = cluster_multiplicities(normalized, n);
    const Valuation pull = pullback_mult(normalized, n);

    Outcome o;
    Report& r = o.report;
    r.command = "cluster";
    r.inputs = {{"curve", curve.to_string()},
                {"branch", branch_text},
                {"n", n},
                {"precision", precision}};
    r.provenance = {"blow-up chart x = x1, y = x1*y1 along the branch",
                    "multiplicity of the pullback: min{p + n q : a_pq != 0}",
                    "m = m_1 + ... + m_n"};
    r.results = {{"branch_series", branch.g().to_string()},
                 {"normalized_curve", normalized.series.to_string()},
                 {"mults", cluster.mults},
                 {"total", cluster.total},
                 {"determinate", cluster.determinate},
                 {"pullback_mult", pull.to_string()}};
    r.tsv = {join_tab({"normalized_curve", normalized.series.to_string()}),
             join_tab({"mults", mults_text(cluster.mults)}),
             join_tab({"total", std::to_string(cluster.total)}),
             join_tab({"pullback_mult", pull.to_string()})};

    if (!cluster.determinate || !pull.determinate) {
        r.results["verified"] = nullptr;
        r.tsv.push_back(join_tab({"verified", "indeterminate"}));
        r.tsv.push_back("# precision " + std::to_string(normalized.series.precision()) +
                        " is too low to certify every multiplicity; raise --precision");
        o.code = kPrecisionShortfall;
        return o;
    }
    const bool ok = pull.value == cluster.total;
    r.results["verified"] = ok;
    r.tsv.push_back(join_tab({"verified", bool_text(ok)}));
    if (!ok) {
        o.code = kVerificationFailed;
    }
    return o;
}

// --------------------------------------------------------------- witness

json verdict_json(const WitnessVerdict& v)
{
    json basis = json::array();
    for (const BiSeries& curve : v.basis) {
        json coeffs = json::array();
        for (const auto& [m, c] : curve.terms()) {
            coeffs.push_back({{"p", m.x}, {"q", m.y}, {"value", to_string(c)}});
        }
        basis.push_back({{"polynomial", curve.to_string()}, {"coefficients", coeffs}});
    }
    return json{{"exists", v.exists},
                {"kernel_dim", v.kernel_dim},
                {"rank", v.rank},
                {"unknowns", v.unknowns},
                {"multiplicity_conditions", v.multiplicity_conditions},
                {"intersection_conditions", v.intersection_conditions},
                {"basis", basis}};
}

std::vector<std::string> verdict_tsv(const WitnessVerdict& v)
{
    std::vector<std::string> lines{join_tab({"exists", bool_text(v.exists)}),
                                   join_tab({"kernel_dim", std::to_string(v.kernel_dim)}),
                                   join_tab({"rank", std::to_string(v.rank)}),
                                   join_tab({"unknowns", std::to_string(v.unknowns)}),
                                   join_tab({"multiplicity_conditions", std::to_string(v.multiplicity_conditions)}),
                                   join_tab({"intersection_conditions", std::to_string(v.intersection_conditions)})};
    for (const BiSeries& curve : v.basis) {
        lines.push_back(join_tab({"basis", curve.to_string()}));
    }
    return lines;
}

Outcome cmd_witness(const std::string& branch_text, int j, int mu, int t, Precision precision)
{
    const BranchJet branch = parse_branch(branch_text, precision);
    const WitnessVerdict v = solve_witness({branch, j, mu, t});
    Outcome o;
    Report& r = o.report;
    r.command = "witness";
    r.inputs = {{"branch", branch_text}, {"j", j}, {"mu", mu}, {"t", t}, {"precision", precision}};
    r.provenance = {"curves of degree <= j, multiplicity >= mu at the origin, contact >= t with the branch"};
    r.results = verdict_json(v);
    r.results["branch_series"] = branch.g().to_string();
    r.tsv = verdict_tsv(v);
    return o;
}

Outcome cmd_n8(std::int64_t b)
{
    if (b < 1) {
        throw UsageError("--b must be >= 1");
    }
    const WitnessVerdict v = n8_certificate(b);
    Outcome o;
    Report& r = o.report;
    r.command = "witness n8";
    r.inputs = {{"b", b}};
    r.provenance = {"branch y = x^(8b) + x^4 + x^2",
                    "no cubic with a double point meets the branch to order 9"};
    r.results = verdict_json(v);
    r.results["branch_series"] = n8_branch(b).g().to_string();
    r.results["certifies_n8"] = !v.exists;
    r.tsv = verdict_tsv(v);
    r.tsv.push_back(join_tab({"certifies_n8", bool_text(!v.exists)}));
    if (v.exists) {
        o.code = kVerificationFailed;
    }
    return o;
}

// ---------------------------------------------------------------- nagata

Outcome cmd_nagata(int n, std::int64_t r_points, std::int64_t l2, const std::optional<std::string>& eps_text,
                   bool conjecture)
{
    const CoveringSpec spec{n, l2, {}};
    spec.validate();
    if (r_points < 1) {
        throw UsageError("--r must be >= 1");
    }
    if (eps_text && conjecture) {
        throw UsageError("--eps and --conjecture are mutually exclusive");
    }
    const std::int64_t points = n * r_points;

    SurdValue eps;
    std::string status;
    std::string note;
    if (eps_text) {
        eps = parse_surd(*eps_text);
        if (eps.sign() <= 0) {
            throw UsageError("--eps must be positive");
        }
        status = "user-supplied";
    } else if (conjecture && points >= 10) {
        eps = nagata_conjectural(points);
        status = is_perfect_square(BigInt(points)) ? "known" : "conjectural";
    } else {
        const auto known = points <= 9 ? known_plane_constant(static_cast<int>(points)) : std::nullopt;
        if (!known) {
            throw UsageError("no known Seshadri constant at " + std::to_string(points) +
                             " points; pass --eps or --conjecture");
        }
        eps = SurdValue(*known);
        status = "known";
        if (conjecture) {
            note = "fewer than 10 points: used the table of known constants";
        }
    }

    const SurdValue bound = nagata_upper(spec, r_points, eps);
    const SeshadriBounds steffens = steffens_bounds(spec, r_points);
    const bool maximal = surd_compare(bound, steffens.upper) == std::strong_ordering::equal;

    Outcome o;
    Report& rep = o.report;
    rep.command = "nagata";
    rep.inputs = {{"n", n}, {"r", r_points}, {"L2", l2}, {"conjecture", conjecture}};
    if (eps_text) {
        rep.inputs["eps"] = *eps_text;
    }
    rep.provenance = {"eps(pi^*L; P_1..P_r) <= n eps(L; nr) at points of the branch divisor",
                      "Nagata: eps(O_P2(1); k) = 1/sqrt(k) for k >= 9 general points"};
    rep.results = {{"points", points},
                   {"eps", surd_json(eps)},
                   {"eps_status", status},
                   {"bound", surd_json(bound)},
                   {"maximal", maximal}};
    rep.tsv = {join_tab({"points", std::to_string(points)}),
               join_tab({"eps", eps.to_string()}),
               join_tab({"eps_status", status}),
               join_tab({"bound", bound.to_string()}),
               join_tab({"bound_approx", bound.to_decimal(kDecimalDigits)}),
               join_tab({"maximal", bool_text(maximal)})};
    if (!note.empty()) {
        rep.results["note"] = note;
        rep.tsv.push_back("# " + note);
    }
    return o;
}

Format parse_format(const std::string& s)
{
    return s == "json" ? Format::Json : Format::Tsv;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Seshadri-constant computations on cyclic coverings of surfaces", "seshadri"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string format = "tsv";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    };

    std::int64_t d_max = 10;
    auto* table = app.add_subcommand("table", "Invariant exceptional divisors and Seshadri constants for n = 2..9");
    table->add_option("--dmax", d_max, "Largest degree d searched")->check(CLI::PositiveNumber);
    add_format(table);

    int n = 2;
    std::int64_t l2 = 1;
    std::int64_t r_points = 1;
    auto* bounds = app.add_subcommand("bounds", "Seshadri bounds at r very general points of an n-cyclic covering");
    bounds->add_option("--n", n, "Covering degree")->required()->check(CLI::Range(2, 1 << 20));
    bounds->add_option("--L2", l2, "Self-intersection of the ample generator on Y")->check(CLI::PositiveNumber);
    bounds->add_option("--r", r_points, "Number of points")->check(CLI::PositiveNumber);
    add_format(bounds);

    std::string curve_file;
    std::string curve_inline;
    std::string branch_text = "y=0";
    std::optional<int> precision_opt;
    auto* cluster = app.add_subcommand("cluster", "Cluster multiplicities of a curve along the branch");
    auto* file_opt = cluster->add_option("curve-file,--curve-file", curve_file, "Curve as polynomial text or 'p q coeff' lines");
    auto* inline_opt = cluster->add_option("--curve", curve_inline, "Curve as an inline polynomial");
    file_opt->excludes(inline_opt);
    cluster->add_option("--branch", branch_text, "Branch: 'y=poly(x)' or implicit 'F(x,y)'");
    cluster->add_option("--n", n, "Covering degree (cluster length)")->required()->check(CLI::Range(1, 1 << 16));
    cluster->add_option("--precision", precision_opt, "Series truncation order")->check(CLI::PositiveNumber);
    add_format(cluster);

    int j = 1;
    int mu = 0;
    int t = 0;
    std::int64_t b = 1;
    auto* witness = app.add_subcommand("witness", "Curves of degree j with multiplicity mu meeting the branch to order t");
    witness->require_subcommand(0, 1);
    auto* w_branch = witness->add_option("--branch", branch_text, "Branch: 'y=poly(x)' or implicit 'F(x,y)'");
    auto* w_j = witness->add_option("--j", j, "Degree")->check(CLI::Range(1, 200));
    auto* w_mu = witness->add_option("--mu", mu, "Multiplicity at the origin")->check(CLI::NonNegativeNumber);
    auto* w_t = witness->add_option("--t", t, "Required intersection order")->check(CLI::Range(0, 100000));
    witness->add_option("--precision", precision_opt, "Series truncation order")->check(CLI::PositiveNumber);
    add_format(witness);
    auto* n8 = witness->add_subcommand("n8", "The n = 8 certificate: branch y = x^(8b) + x^4 + x^2, j=3, mu=2, t=9");
    n8->add_option("--b", b, "Branch degree parameter")->check(CLI::PositiveNumber);
    add_format(n8);

    std::optional<std::string> eps_text;
    bool conjecture = false;
    auto* nagata = app.add_subcommand("nagata", "Upper bound n*eps(L; nr) at r branch points");
    nagata->add_option("--n", n, "Covering degree")->required()->check(CLI::Range(2, 1 << 20));
    nagata->add_option("--r", r_points, "Number of branch points")->check(CLI::PositiveNumber);
    nagata->add_option("--L2", l2, "Self-intersection of L")->check(CLI::PositiveNumber);
    nagata->add_option("--eps", eps_text, "eps(L; nr) as a/b, sqrt(s), a/b*sqrt(s)");
    nagata->add_flag("--conjecture", conjecture, "Use the Nagata value 1/sqrt(nr)");
    add_format(nagata);

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        const Precision precision = precision_opt ? *precision_opt : default_precision();
        Outcome o;
        if (*table) {
            o = cmd_table(d_max);
        } else if (*bounds) {
            o = cmd_bounds(n, l2, r_points);
        } else if (*cluster) {
            if (curve_file.empty() && curve_inline.empty()) {
                throw UsageError("cluster needs a curve file or --curve");
            }
            const bool from_file = !curve_file.empty();
            o = cmd_cluster(from_file ? read_file(curve_file) : curve_inline, from_file ? curve_file : "inline",
                            branch_text, n, precision);
        } else if (*witness) {
            if (*n8) {
                o = cmd_n8(b);
            } else {
                if (w_branch->count() == 0 || w_j->count() == 0 || w_mu->count() == 0 || w_t->count() == 0) {
                    throw UsageError("witness needs --branch, --j, --mu and --t (or the n8 preset)");
                }
                o = cmd_witness(branch_text, j, mu, t, precision);
            }
        } else if (*nagata) {
            o = cmd_nagata(n, r_points, l2, eps_text, conjecture);
        }
        o.report.write(out, parse_format(format));
        return o.code;
    } catch (const PrecisionShortfall& e) {
        err << "precision shortfall: " << e.what();
        if (e.required() > 0) {
            err << " (need precision >= " << e.required() << ")";
        }
        err << '\n';
        return kPrecisionShortfall;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace seshadri::cli
