#include "codedist/report.hpp"

#include <sstream>

#include "codedist/errors.hpp"
#include "json.hpp"

namespace codedist {

using nlohmann::json;

namespace {

std::vector<std::vector<Elem>> rows_of(const Matrix& m) { return m.empty() ? std::vector<std::vector<Elem>>{} : m.to_rows(); }

template <class Fn>
void guarded(Report& r, const std::string& what, Fn&& fn) {
    try {
        fn();
    } catch (const BudgetExceeded& ex) {
        r.skipped.push_back(what + ": " + ex.what());
        r.budget_exceeded = true;
    } catch (const Error& ex) {
        if (ex.code() != Errc::level_set_overflow && ex.code() != Errc::not_applicable &&
            ex.code() != Errc::unsupported_dual && ex.code() != Errc::no_conway_polynomial &&
            ex.code() != Errc::degree_too_large)
            throw;
        r.skipped.push_back(what + ": " + ex.what());
    }
}

template <class Fn>
ReportEntry entry(Report& r, std::size_t index, Fn&& fn) {
    ReportEntry e;
    e.index = index;
    try {
        const DistanceResult d = fn();
        e.value = d.value;
        e.witness = rows_of(d.witness);
        e.route = d.route;
    } catch (const BudgetExceeded& ex) {
        e.skipped = ex.what();
        r.budget_exceeded = true;
    }
    return e;
}

}  // namespace

Report run_invariants(const LinearCode& code, const std::string& file_hash, const RunRequest& req, const Limits& limits) {
    Budget budget(limits);
    Report r;
    r.file_hash = file_hash;
    r.p = code.field()->p();
    r.e = code.field()->e();
    r.q = code.field()->q();
    r.metric = metric_name(code.ambient().metric());
    r.ambient = code.ambient().describe();
    r.length = code.length();
    r.dim = code.dim();
    r.budget = limits.budget;
    r.level_cap = limits.level_cap;

    const std::size_t n = code.length();
    std::size_t first = 1, last = n;
    if (req.alpha) {
        first = req.alpha->first;
        last = req.alpha->second;
        if (first < 1 || last > n || first > last)
            fail(Errc::invalid_argument, "alpha range must satisfy 1 <= a <= b <= " + std::to_string(n));
    }
    Analyzer an(code, budget);
    if (req.alpha)
        for (std::size_t i = first; i <= last; ++i) {
            r.alpha.push_back(entry(r, i, [&] { return an.alpha(i); }));
            if (!r.alpha.back().value) r.skipped.push_back("alpha_" + std::to_string(i) + ": " + r.alpha.back().skipped);
        }
    if (req.greedy)
        guarded(r, "greedy", [&] {
            const auto g = greedy_profile(an);
            r.greedy = g.values;
            r.greedy_basis = rows_of(g.chain.basis);
        });
    if (req.radii)
        for (std::size_t j = 1; j + code.dim() <= n; ++j) {
            r.rho.push_back(entry(r, j, [&] { return an.radius(j); }));
            if (!r.rho.back().value) r.skipped.push_back("rho_" + std::to_string(j) + ": " + r.rho.back().skipped);
        }
    if (req.mu)
        guarded(r, "mu", [&] {
            r.mu = maximality_degree(an);
            r.maximal = *r.mu > 0;
        });
    if (req.sld)
        guarded(r, "sld", [&] {
            if (code.ambient().metric() != Metric::hamming) fail(Errc::not_applicable, "SLD sets are defined for Hamming codes");
            if (code.dim() == 0) fail(Errc::not_applicable, "the zero code has no nonzero codewords");
            const auto s = sld_set(code, budget);
            r.sld = std::vector<std::size_t>(s.begin(), s.end());
        });
    if (req.extend > 0) {
        r.extend_degree = req.extend;
        guarded(r, "extension " + std::to_string(req.extend), [&] {
            Analyzer ext(extend_code(code, req.extend), budget);
            for (std::size_t i = first; i <= last; ++i) {
                ReportEntry e = entry(r, i, [&] { return ext.alpha(i); });
                e.witness.clear();  // rows over F_{q^l} are not in the file's field
                if (!e.value) r.skipped.push_back("alpha^" + std::to_string(req.extend) + "_" + std::to_string(i) + ": " + e.skipped);
                r.extended.push_back(std::move(e));
            }
        });
    }
    if (req.asymptotic > 0)
        for (std::size_t i = first; i <= last; ++i) {
            AsymptoticEntry a;
            a.index = i;
            try {
                const auto res = asymptotic_distance(code, i, req.asymptotic, budget);
                a.value = res.value;
                a.stabilized_at = res.stabilized_at;
                a.swept = res.swept;
                a.constant_tail = res.constant_tail;
                a.certified = res.certified;
                a.per_degree = res.per_degree;
                a.marker = res.marker();
            } catch (const BudgetExceeded& ex) {
                a.skipped = ex.what();
                r.budget_exceeded = true;
                r.skipped.push_back("asymptotic_" + std::to_string(i) + ": " + ex.what());
            }
            r.asymptotic.push_back(std::move(a));
        }
    if (req.bounds)
        guarded(r, "bounds", [&] {
            const auto s = singleton_profile(code, budget);
            BoundsEntry b;
            b.ceiling = s.ceiling;
            b.floor_form = s.floor_form;
            switch (code.ambient().metric()) {
                case Metric::hamming: b.flags["is_mds"] = s.is_mds; break;
                case Metric::rank:
                    b.flags["is_mrd"] = s.is_mrd;
                    b.flags["is_qmrd"] = s.is_qmrd;
                    break;
                case Metric::sum_rank: b.flags["is_msrd"] = s.is_msrd; break;
            }
            b.notes = s.notes;
            r.bounds = std::move(b);
        });
    r.budget_spent = budget.spent();
    return r;
}

namespace {

json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json entry_json(const ReportEntry& e) {
    json j = {{"index", e.index}, {"value", opt(e.value)}};
    if (e.value) {
        j["route"] = e.route;
        j["witness"] = e.witness;
    } else {
        j["skipped"] = e.skipped;
    }
    return j;
}

ReportEntry entry_from(const json& j) {
    ReportEntry e;
    e.index = j.at("index").get<std::size_t>();
    if (!j.at("value").is_null()) {
        e.value = j.at("value").get<std::size_t>();
        e.route = j.at("route").get<std::string>();
        e.witness = j.at("witness").get<std::vector<std::vector<Elem>>>();
    } else {
        e.skipped = j.at("skipped").get<std::string>();
    }
    return e;
}

}  // namespace

std::string to_json(const Report& r) {
    json j;
    j["schema"] = r.schema;
    j["code"] = {{"file_hash", r.file_hash}, {"p", r.p},     {"e", r.e},     {"q", r.q},
                 {"metric", r.metric},       {"ambient", r.ambient}, {"N", r.length}, {"k", r.dim}};
    j["config"] = {{"budget", r.budget}, {"level_cap", r.level_cap}};
    if (!r.alpha.empty()) {
        j["alpha"] = json::array();
        for (const auto& e : r.alpha) j["alpha"].push_back(entry_json(e));
    }
    if (r.greedy) j["greedy"] = {{"values", *r.greedy}, {"basis", r.greedy_basis}};
    if (!r.rho.empty()) {
        j["rho"] = json::array();
        for (const auto& e : r.rho) j["rho"].push_back(entry_json(e));
    }
    if (r.mu) j["mu"] = {{"value", *r.mu}, {"maximal", r.maximal.value_or(false)}};
    if (r.sld) j["sld"] = *r.sld;
    if (r.extend_degree > 0) {
        json ext = {{"degree", r.extend_degree}, {"alpha", json::array()}};
        for (const auto& e : r.extended) ext["alpha"].push_back(entry_json(e));
        j["extended"] = ext;
    }
    if (!r.asymptotic.empty()) {
        j["asymptotic"] = json::array();
        for (const auto& a : r.asymptotic) {
            json x = {{"index", a.index}, {"value", opt(a.value)}};
            if (a.value) {
                x["stabilized_at"] = a.stabilized_at;
                x["swept"] = a.swept;
                x["constant_tail"] = a.constant_tail;
                x["certified"] = a.certified;
                x["per_degree"] = a.per_degree;
                x["marker"] = a.marker;
            } else {
                x["skipped"] = a.skipped;
            }
            j["asymptotic"].push_back(x);
        }
    }
    if (r.bounds)
        j["bounds"] = {{"singleton_ceiling", r.bounds->ceiling},
                       {"rank_floor_form", r.bounds->floor_form},
                       {"flags", r.bounds->flags},
                       {"notes", r.bounds->notes}};
    j["skipped"] = r.skipped;
    j["budget_spent"] = r.budget_spent;
    j["budget_exceeded"] = r.budget_exceeded;
    return j.dump() + "\n";
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(0, std::string("invalid JSON report: ") + ex.what());
    }
    try {
        Report r;
        r.schema = j.at("schema").get<int>();
        if (r.schema != 1) throw ParseError(0, "unsupported report schema " + std::to_string(r.schema));
        const json& c = j.at("code");
        r.file_hash = c.at("file_hash").get<std::string>();
        r.p = c.at("p").get<unsigned>();
        r.e = c.at("e").get<unsigned>();
        r.q = c.at("q").get<std::uint64_t>();
        r.metric = c.at("metric").get<std::string>();
        r.ambient = c.at("ambient").get<std::string>();
        r.length = c.at("N").get<std::size_t>();
        r.dim = c.at("k").get<std::size_t>();
        r.budget = j.at("config").at("budget").get<std::uint64_t>();
        r.level_cap = j.at("config").at("level_cap").get<std::uint64_t>();
        if (j.contains("alpha"))
            for (const auto& e : j["alpha"]) r.alpha.push_back(entry_from(e));
        if (j.contains("greedy")) {
            r.greedy = j["greedy"].at("values").get<std::vector<std::size_t>>();
            r.greedy_basis = j["greedy"].at("basis").get<std::vector<std::vector<Elem>>>();
        }
        if (j.contains("rho"))
            for (const auto& e : j["rho"]) r.rho.push_back(entry_from(e));
        if (j.contains("mu")) {
            r.mu = j["mu"].at("value").get<std::size_t>();
            r.maximal = j["mu"].at("maximal").get<bool>();
        }
        if (j.contains("sld")) r.sld = j["sld"].get<std::vector<std::size_t>>();
        if (j.contains("extended")) {
            r.extend_degree = j["extended"].at("degree").get<unsigned>();
            for (const auto& e : j["extended"].at("alpha")) r.extended.push_back(entry_from(e));
        }
        if (j.contains("asymptotic"))
            for (const auto& x : j["asymptotic"]) {
                AsymptoticEntry a;
                a.index = x.at("index").get<std::size_t>();
                if (!x.at("value").is_null()) {
                    a.value = x["value"].get<std::size_t>();
                    a.stabilized_at = x.at("stabilized_at").get<unsigned>();
                    a.swept = x.at("swept").get<unsigned>();
                    a.constant_tail = x.at("constant_tail").get<bool>();
                    a.certified = x.at("certified").get<bool>();
                    a.per_degree = x.at("per_degree").get<std::vector<std::size_t>>();
                    a.marker = x.at("marker").get<std::string>();
                } else {
                    a.skipped = x.at("skipped").get<std::string>();
                }
                r.asymptotic.push_back(std::move(a));
            }
        if (j.contains("bounds")) {
            BoundsEntry b;
            b.ceiling = j["bounds"].at("singleton_ceiling").get<std::vector<std::size_t>>();
            b.floor_form = j["bounds"].at("rank_floor_form").get<std::vector<std::size_t>>();
            b.flags = j["bounds"].at("flags").get<std::map<std::string, bool>>();
            b.notes = j["bounds"].at("notes").get<std::vector<std::string>>();
            r.bounds = std::move(b);
        }
        r.skipped = j.at("skipped").get<std::vector<std::string>>();
        r.budget_spent = j.at("budget_spent").get<std::uint64_t>();
        r.budget_exceeded = j.at("budget_exceeded").get<bool>();
        return r;
    } catch (const json::exception& ex) {
        throw ParseError(0, std::string("malformed report: ") + ex.what());
    }
}

namespace {

std::string csv(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string rows_text(const std::vector<std::vector<Elem>>& rows) {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += ";";
        for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows[r][c]);
    }
    return s;
}

void tsv_entries(std::ostringstream& out, const char* name, const std::vector<ReportEntry>& es) {
    for (const auto& e : es) {
        out << name << '\t' << e.index << '\t';
        if (e.value)
            out << *e.value << '\t' << e.route << '\t' << rows_text(e.witness) << '\n';
        else
            out << "skipped\t" << e.skipped << "\t\n";
    }
}

}  // namespace

std::string to_tsv(const Report& r) {
    std::ostringstream out;
    out << "# code\t" << r.ambient << "\tF_" << r.q << "\tN=" << r.length << "\tk=" << r.dim << "\thash=" << r.file_hash << '\n';
    if (!r.alpha.empty()) {
        std::vector<std::size_t> vals;
        bool complete = true;
        for (const auto& e : r.alpha) {
            if (e.value) vals.push_back(*e.value);
            else complete = false;
        }
        if (complete) out << "alpha\t" << csv(vals) << '\n';
    }
    out << "invariant\tindex\tvalue\troute\twitness\n";
    tsv_entries(out, "alpha", r.alpha);
    if (r.greedy) out << "greedy\t-\t" << csv(*r.greedy) << "\tlevel-sets\t" << rows_text(r.greedy_basis) << '\n';
    tsv_entries(out, "rho", r.rho);
    if (r.mu) out << "mu\t-\t" << *r.mu << "\t" << (*r.maximal ? "maximal" : "not maximal") << "\t\n";
    if (r.sld) out << "sld\t-\t{" << csv(*r.sld) << "}\t\t\n";
    if (r.extend_degree > 0) {
        const std::string name = "alpha^" + std::to_string(r.extend_degree);
        tsv_entries(out, name.c_str(), r.extended);
    }
    for (const auto& a : r.asymptotic) {
        out << "asymptotic\t" << a.index << '\t';
        if (a.value)
            out << *a.value << "\t" << a.marker << "\tper-degree " << csv(a.per_degree) << ", first max at l = " << a.stabilized_at
                << (a.constant_tail ? ", constant tail" : "") << '\n';
        else
            out << "skipped\t" << a.skipped << "\t\n";
    }
    if (r.bounds) {
        out << "singleton\t-\t" << csv(r.bounds->ceiling) << "\t\t\n";
        if (!r.bounds->floor_form.empty()) out << "rank-floor-form\t-\t" << csv(r.bounds->floor_form) << "\t\t\n";
        for (const auto& [k, v] : r.bounds->flags) out << k << "\t-\t" << (v ? "true" : "false") << "\t\t\n";
        for (const auto& note : r.bounds->notes) out << "# note: " << note << '\n';
    }
    for (const auto& s : r.skipped) out << "# skipped: " << s << '\n';
    out << "# budget spent\t" << r.budget_spent << " of " << r.budget << '\n';
    return out.str();
}

namespace {

json summary_json(const CodeSummary& s) {
    json j;
    json alpha = json::array();
    for (const auto& e : s.alpha.alpha) alpha.push_back(e.value ? json(*e.value) : json(nullptr));
    j["alpha"] = alpha;
    if (s.greedy) j["greedy"] = *s.greedy;
    if (s.rho) j["rho"] = *s.rho;
    if (s.mu) j["mu"] = *s.mu;
    if (s.sld) j["sld"] = std::vector<std::size_t>(s.sld->begin(), s.sld->end());
    for (const auto& [l, vals] : s.extended) {
        json v = json::array();
        for (const auto& x : vals) v.push_back(x ? json(*x) : json(nullptr));
        j["extended"][std::to_string(l)] = v;
    }
    j["skipped"] = s.skipped;
    return j;
}

}  // namespace

std::string to_json(const Comparison& c, const std::string& hash_a, const std::string& hash_b) {
    json j;
    j["schema"] = 1;
    j["a"] = summary_json(c.a);
    j["a"]["file_hash"] = hash_a;
    j["b"] = summary_json(c.b);
    j["b"]["file_hash"] = hash_b;
    j["differences"] = c.differences;
    j["verdict"] = c.verdict();
    return j.dump() + "\n";
}

std::string to_tsv(const Comparison& c) {
    std::ostringstream out;
    out << "verdict\t" << c.verdict() << '\n';
    out << "invariant\tA\tB\n";
    auto seq = [&](const std::string& name, const std::optional<std::vector<std::size_t>>& a,
                   const std::optional<std::vector<std::size_t>>& b) {
        if (a || b) out << name << '\t' << (a ? csv(*a) : "-") << '\t' << (b ? csv(*b) : "-") << '\n';
    };
    auto alpha_vals = [](const CodeSummary& s) {
        std::vector<std::string> v;
        for (const auto& e : s.alpha.alpha) v.push_back(e.value ? std::to_string(*e.value) : "?");
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
        return out;
    };
    out << "alpha\t" << alpha_vals(c.a) << '\t' << alpha_vals(c.b) << '\n';
    seq("greedy", c.a.greedy, c.b.greedy);
    seq("rho", c.a.rho, c.b.rho);
    if (c.a.mu || c.b.mu)
        out << "mu\t" << (c.a.mu ? std::to_string(*c.a.mu) : "-") << '\t' << (c.b.mu ? std::to_string(*c.b.mu) : "-") << '\n';
    auto set_text = [](const std::optional<std::set<std::size_t>>& s) {
        return s ? "{" + csv({s->begin(), s->end()}) + "}" : std::string("-");
    };
    if (c.a.sld || c.b.sld) out << "sld\t" << set_text(c.a.sld) << '\t' << set_text(c.b.sld) << '\n';
    for (const auto& [l, xs] : c.a.extended) {
        auto text = [](const std::vector<std::optional<std::size_t>>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + (v[i] ? std::to_string(*v[i]) : std::string("?"));
            return s;
        };
        const auto it = c.b.extended.find(l);
        out << "alpha^" << l << '\t' << text(xs) << '\t' << (it == c.b.extended.end() ? "-" : text(it->second)) << '\n';
    }
    for (const auto& d : c.differences) out << "# differs: " << d << '\n';
    for (const auto& s : c.a.skipped) out << "# skipped (A): " << s << '\n';
    for (const auto& s : c.b.skipped) out << "# skipped (B): " << s << '\n';
    return out.str();
}

}  // namespace codedist
