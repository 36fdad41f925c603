#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "codedist/codefile.hpp"
#include "codedist/constructions.hpp"
#include "codedist/errors.hpp"
#include "codedist/goldens.hpp"
#include "codedist/invariants.hpp"
#include "codedist/report.hpp"
#include "json.hpp"

using namespace codedist;

namespace {

enum Exit { kOk = 0, kParse = 1, kBudget = 2, kIndistinguishable = 3 };

struct Common {
    double budget = 0;
    std::size_t level_cap = 1'000'000;
    unsigned workers = 1;
    std::string format = "tsv";
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--budget", c.budget, "maximum weight evaluations (default 1e8 or CODEDIST_BUDGET)");
    app->add_option("--level-cap", c.level_cap, "greedy level-set cap")->check(CLI::PositiveNumber);
    app->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
}

Limits limits_of(const Common& c) {
    Limits l = default_limits();
    if (c.budget != 0) {
        if (c.budget < 1e4) fail(Errc::invalid_argument, "--budget must be at least 1e4");
        l.budget = static_cast<std::uint64_t>(c.budget);
    }
    if (l.budget < 10'000) fail(Errc::invalid_argument, "the budget must be at least 1e4");
    l.level_cap = c.level_cap;
    l.workers = c.workers;
    return l;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    CodeFile file;
    std::string hash;
};

Loaded load(const std::string& path) {
    const std::string text = slurp(path);
    return {parse_code_text(text), hash_hex(fnv1a(text))};
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s, std::size_t n) {
    if (s.empty()) return {1, n};
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto i = std::stoul(s);
            return {i, i};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        fail(Errc::invalid_argument, "bad index range '" + s + "', expected a..b");
    }
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ',');) {
        try {
            out.push_back(std::stoul(t));
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, "bad value list '" + s + "'");
        }
    }
    return out;
}

int cmd_invariants(const std::string& path, const Common& c, RunRequest req, const std::optional<std::string>& alpha,
                   bool any_flag) {
    const Loaded in = load(path);
    const std::size_t n = in.file.code.length();
    if (alpha || !any_flag) req.alpha = parse_range(alpha.value_or(""), n);
    const Report r = run_invariants(in.file.code, in.hash, req, limits_of(c));
    std::cout << (c.format == "json" ? to_json(r) : to_tsv(r));
    return r.budget_exceeded ? kBudget : kOk;
}

int cmd_compare(const std::string& a, const std::string& b, const Common& c, const CompareOptions& opts) {
    const Loaded x = load(a), y = load(b);
    Budget budget(limits_of(c));
    const Comparison cmp = compare_codes(x.file.code, y.file.code, opts, budget);
    std::cout << (c.format == "json" ? to_json(cmp, x.hash, y.hash) : to_tsv(cmp));
    if (cmp.inequivalent) return kOk;
    const bool skipped = !cmp.a.skipped.empty() || !cmp.b.skipped.empty();
    return skipped ? kBudget : kIndistinguishable;
}

struct ConstructArgs {
    std::string name;
    std::string builtin_name;
    std::uint64_t q = 2;
    std::size_t k = 1, m = 0, n = 0;
    std::string points;
    std::string out;
};

LinearCode construct(const ConstructArgs& a) {
    try {
        if (a.name == "rs") {
            const FieldPtr f = field_of_order(a.q);
            if (a.points.empty()) return reed_solomon(f, a.k);
            std::vector<Elem> pts;
            for (auto v : parse_list(a.points)) pts.push_back(static_cast<Elem>(v));
            return reed_solomon(f, pts, a.k);
        }
        if (a.name == "twisted-rs") return twisted_rs_f9();
        if (a.name == "simplex") return simplex(a.q, a.k);
        if (a.name == "even-weight") return even_weight(a.n);
        if (a.name == "hadamard") return hadamard_rank(a.q, a.m, a.k);
        if (a.name == "gabidulin") {
            if (!is_prime(a.q)) fail(Errc::invalid_argument, "gabidulin needs a prime q");
            const FieldPtr ext = Field::get(static_cast<unsigned>(a.q), static_cast<unsigned>(a.m));
            std::vector<Elem> pts;
            if (a.points.empty()) {
                for (std::size_t j = 0; j < (a.n ? a.n : a.m); ++j) pts.push_back(ext->pow(ext->generator(), j));
            } else {
                for (auto v : parse_list(a.points)) pts.push_back(static_cast<Elem>(v));
            }
            return gabidulin(ext, pts, a.k);
        }
        if (a.name == "full") return LinearCode::full_space(Ambient::hamming(field_of_order(a.q), a.n));
        if (a.name == "builtin") return builtin(a.builtin_name);
    } catch (const Error& ex) {
        if (ex.code() == Errc::budget_exceeded || ex.code() == Errc::unknown_name) throw;
        throw Error(ex.code(), std::string("BadParams: ") + ex.what());
    }
    throw Error(Errc::unknown_name, "UnknownConstruction: " + a.name);
}

int cmd_construct(const ConstructArgs& a) {
    const LinearCode code = construct(a);
    const std::string text = format_code(code);
    if (a.out.empty() || a.out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) fail(Errc::invalid_argument, "cannot write " + a.out);
        out << text;
    }
    return kOk;
}

std::string row_text(std::span<const Elem> r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) s += (c ? " " : "") + std::to_string(r[c]);
    return s;
}

int cmd_partial(const std::string& path, const Common& c, bool from_code) {
    const Loaded in = load(path);
    Budget budget(limits_of(c));
    Matrix a;
    if (from_code) {
        a = greedy_generator(in.file.code, budget);
    } else {
        if (in.file.extension_degree)
            fail(Errc::not_applicable, "partial distances of extension-field rows: use --from-code or an expanded file");
        a = in.file.entries;
    }
    const auto p = partial_distances(a, in.file.code.ambient(), budget);
    if (c.format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["file_hash"] = in.hash;
        j["matrix"] = a.to_rows();
        j["deltas"] = p.deltas;
        j["exponent"] = p.exponent ? nlohmann::json(*p.exponent) : nlohmann::json(nullptr);
        j["exponent_ceiling"] = p.exponent_ceiling ? nlohmann::json(*p.exponent_ceiling) : nlohmann::json(nullptr);
        j["budget_spent"] = budget.spent();
        std::cout << j.dump(2) << "\n";
    } else {
        if (from_code)
            for (std::size_t r = 0; r < a.rows(); ++r) std::cout << "row\t" << r + 1 << '\t' << row_text(a.row(r)) << '\n';
        std::cout << "delta";
        for (std::size_t t = 0; t < p.deltas.size(); ++t) std::cout << (t ? "," : "\t") << p.deltas[t];
        std::cout << '\n';
        char buf[64];
        if (p.exponent) {
            std::snprintf(buf, sizeof buf, "%.12f", *p.exponent);
            std::cout << "exponent\t" << buf << '\n';
            std::snprintf(buf, sizeof buf, "%.12f", *p.exponent_ceiling);
            std::cout << "exponent_ceiling\t" << buf << '\n';
        }
    }
    return kOk;
}

int cmd_goldens(const Common& c, const std::string& filter, const std::vector<std::string>& expects) {
    std::map<std::string, std::vector<std::size_t>> overrides;
    for (const auto& e : expects) {
        const auto eq = e.rfind('=');
        if (eq == std::string::npos) fail(Errc::invalid_argument, "--expect takes NAME=v1,v2,...");
        overrides[e.substr(0, eq)] = parse_list(e.substr(eq + 1));
    }
    const auto results = run_goldens(limits_of(c), filter, overrides);
    std::size_t failed = 0, disputed = 0;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
        if (r.status == GoldenStatus::fail) ++failed;
        if (r.status == GoldenStatus::disputed) ++disputed;
        if (c.format == "json") {
            j.push_back({{"name", r.name},
                         {"status", golden_status_name(r.status)},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"detail", r.detail}});
        } else {
            char t[32];
            std::snprintf(t, sizeof t, "%.3fs", r.seconds);
            std::cout << golden_status_name(r.status) << '\t' << r.name << '\t' << t;
            if (!r.detail.empty()) std::cout << '\t' << r.detail;
            std::cout << '\n';
        }
    }
    if (c.format == "json")
        std::cout << nlohmann::json{{"schema", 1}, {"goldens", j}}.dump(2) << '\n';
    else
        std::cout << "# " << results.size() << " goldens, " << failed << " failed, " << disputed << " disputed\n";
    return failed == 0 ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codedist: code distances and related invariants of linear codes"};
    app.require_subcommand(1);

    Common common;
    RunRequest req;
    std::string file_a, file_b;
    std::optional<std::string> alpha;

    auto* inv = app.add_subcommand("invariants", "compute invariants of a code file");
    inv->add_option("file", file_a, "code file")->required();
    auto* alpha_opt = inv->add_option("--alpha", alpha, "code distances over an index range a..b (default all)")->expected(0, 1);
    inv->add_flag("--greedy", req.greedy, "greedy code distances and chain basis");
    inv->add_flag("--radii", req.radii, "generalized radii rho_1..rho_{N-k}");
    inv->add_flag("--mu", req.mu, "maximality degree");
    inv->add_flag("--sld", req.sld, "SLD set");
    inv->add_option("--extend", req.extend, "code distances after extension to degree L")->check(CLI::PositiveNumber);
    inv->add_option("--asymptotic", req.asymptotic, "sweep extensions up to degree LMAX")->check(CLI::PositiveNumber);
    inv->add_flag("--bounds", req.bounds, "Singleton ceilings and MDS/MRD flags");
    add_common(inv, common);

    CompareOptions copts;
    copts.greedy = copts.radii = copts.mu = copts.sld = false;
    std::optional<std::string> calpha;
    unsigned casym = 0;
    auto* cmp = app.add_subcommand("compare", "search for an invariant separating two codes");
    cmp->add_option("file_a", file_a)->required();
    cmp->add_option("file_b", file_b)->required();
    cmp->add_option("--alpha", calpha, "index range a..b")->expected(0, 1);
    cmp->add_flag("--greedy", copts.greedy);
    cmp->add_flag("--radii", copts.radii);
    cmp->add_flag("--mu", copts.mu);
    cmp->add_flag("--sld", copts.sld);
    cmp->add_option("--asymptotic", casym, "also compare extensions of degree 2..LMAX")->check(CLI::PositiveNumber);
    add_common(cmp, common);

    ConstructArgs cargs;
    auto* con = app.add_subcommand("construct", "write a code file for a named construction");
    con->add_option("name", cargs.name, "rs | twisted-rs | simplex | even-weight | hadamard | gabidulin | full | builtin")->required();
    con->add_option("builtin", cargs.builtin_name, "builtin code name");
    con->add_option("--q", cargs.q);
    con->add_option("--k", cargs.k);
    con->add_option("--m", cargs.m);
    con->add_option("--n", cargs.n);
    con->add_option("--points", cargs.points, "comma-separated evaluation points");
    con->add_option("-o,--out", cargs.out, "output file (default stdout)");

    bool from_code = false;
    auto* par = app.add_subcommand("partial", "partial distances and exponent of a generator matrix");
    par->add_option("file", file_a)->required();
    par->add_flag("--from-code", from_code, "use the greedy generator of the code instead of the rows as written");
    add_common(par, common);

    std::string filter;
    std::vector<std::string> expects;
    auto* gold = app.add_subcommand("goldens", "run the worked-example suite");
    gold->add_option("--filter", filter, "only goldens whose name contains this text");
    gold->add_option("--expect", expects, "override an expected value: NAME=v1,v2,...");
    add_common(gold, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (*inv) {
            const bool any = alpha_opt->count() > 0 || req.greedy || req.radii || req.mu || req.sld || req.extend || req.asymptotic ||
                             req.bounds;
            if (alpha_opt->count() > 0 && !alpha) alpha = std::string();
            return cmd_invariants(file_a, common, req, alpha, any);
        }
        if (*cmp) {
            if (calpha && !calpha->empty()) {
                const auto r = parse_range(*calpha, 0);
                copts.first = r.first;
                copts.last = r.second;
            }
            copts.asymptotic = casym;
            return cmd_compare(file_a, file_b, common, copts);
        }
        if (*con) return cmd_construct(cargs);
        if (*par) return cmd_partial(file_a, common, from_code);
        if (*gold) return cmd_goldens(common, filter, expects);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
    return kOk;
}
