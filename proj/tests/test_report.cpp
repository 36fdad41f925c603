#include <sstream>

#include "codedist/codefile.hpp"
#include "codedist/constructions.hpp"
#include "codedist/errors.hpp"
#include "codedist/goldens.hpp"
#include "codedist/report.hpp"
#include "doctest.h"

using namespace codedist;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_code_text(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

RunRequest everything(std::size_t n) {
    RunRequest r;
    r.alpha = std::pair<std::size_t, std::size_t>{1, n};
    r.greedy = r.radii = r.mu = r.sld = r.bounds = true;
    r.extend = 2;
    r.asymptotic = 2;
    return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("code files parse") {
    const CodeFile f = parse_code_text(
        "# ternary example\n"
        "metric hamming 4\n"
        "field 3 1\n"
        "generator\n"
        "1 1 1 0   # first row\n"
        "0 1 2 0\n"
        "\n"
        "0 0 1 1\n");
    CHECK(f.code == builtin("ternary-422"));
    CHECK(f.entries.rows() == 3);
    CHECK_FALSE(f.extension_degree.has_value());

    const CodeFile s = parse_code_text("metric sumrank 2 2 1 1\nfield 2 1\ngenerator\n1 0 0 1 1\n");
    CHECK(s.code.ambient().metric() == Metric::sum_rank);
    CHECK(s.code.length() == 5);

    const CodeFile g = parse_code_text("metric rank 4 4\nfield 2 1\nlinear extension 4\ngenerator\n1 2 4 8\n");
    CHECK(g.code == builtin("gabidulin-4x4"));
    CHECK(g.extension_degree == 4u);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("metric hamming 3\nfield 2 1\ngenerator\n1 0\n") == 4);
    CHECK(parse_error_line("metric hamming 3\nfield 2 1\ngenerator\n1 0 2\n") == 4);
    CHECK(parse_error_line("metric taxicab 3\nfield 2 1\ngenerator\n1 0 1\n") == 1);
    CHECK(parse_error_line("metric hamming 3\nfield 6 1\ngenerator\n1 0 1\n") == 2);
    CHECK(parse_error_line("# header\nmetric hamming 3\nfeld 2 1\n") == 3);
    CHECK(parse_error_line("metric hamming 3\nfield 2 1\n") == 3);
    CHECK(parse_error_line("metric hamming 2\nfield 2 1\nlinear extension 2\ngenerator\n1 1\n") == 3);
    CHECK(parse_error_line("metric hamming x\nfield 2 1\ngenerator\n1 1\n") == 1);
    try {
        parse_code_text("metric hamming 3\nfield 2 1\ngenerator\n1 0\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 4: ", 0) == 0);
    }
}

TEST_CASE("format and parse round-trip") {
    for (const auto& name : builtin_names()) {
        const LinearCode c = builtin(name);
        const std::string text = format_code(c);
        CHECK(parse_code_text(text).code == c);
        CHECK(format_code(parse_code_text(text).code) == text);
    }
    const LinearCode rs = reed_solomon(field_of_order(9), 4);
    CHECK(format_code(rs) == format_code(reed_solomon(field_of_order(9), 4)));
    CHECK(hash_hex(fnv1a(format_code(rs))).size() == 16);
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("JSON reports round-trip") {
    Limits l;
    for (const char* name : {"duality-C1", "ternary-422", "F4-C2", "BR17-C1"}) {
        const LinearCode c = builtin(name);
        RunRequest req = everything(c.length());
        if (c.ambient().metric() != Metric::hamming) {
            req.extend = 0;
            req.asymptotic = 0;
            req.alpha = std::pair<std::size_t, std::size_t>{1, 5};
        }
        const Report r = run_invariants(c, "h", req, l);
        const std::string j = to_json(r);
        CHECK(report_from_json(j) == r);
        CHECK(to_json(report_from_json(j)) == j);
        CHECK(j.find("\"schema\":1") != std::string::npos);
    }
}

TEST_CASE("reports are identical for any worker count") {
    const LinearCode c = builtin("duality-C2");
    Limits one, four;
    four.workers = 4;
    CHECK(to_json(run_invariants(c, "x", everything(5), one)) == to_json(run_invariants(c, "x", everything(5), four)));
    CHECK(to_tsv(run_invariants(c, "x", everything(5), one)) == to_tsv(run_invariants(c, "x", everything(5), four)));
}

TEST_CASE("report contents") {
    Limits l;
    const Report r = run_invariants(builtin("duality-C1"), "abc", everything(5), l);
    CHECK(r.file_hash == "abc");
    CHECK(r.length == 5);
    CHECK(r.dim == 2);
    REQUIRE(r.alpha.size() == 5);
    std::vector<std::size_t> a;
    for (const auto& e : r.alpha) a.push_back(*e.value);
    CHECK(a == std::vector<std::size_t>{4, 2, 2, 2, 1});
    CHECK(r.mu == 0u);
    CHECK(r.maximal == false);
    REQUIRE(r.asymptotic.size() == 5);
    CHECK(r.asymptotic[0].value == 5u);
    CHECK(r.asymptotic[0].marker.find("uncertified") != std::string::npos);
    CHECK(r.extended.front().value == 5u);
    CHECK_FALSE(r.budget_exceeded);
    for (const auto& e : r.alpha) {
        Budget b;
        const LinearCode w(builtin("duality-C1").ambient(), Matrix::from_rows(Field::get(2, 1), e.witness));
        CHECK(min_distance(w, b) == *e.value);
    }
}

TEST_CASE("budget overruns are recorded per index") {
    Limits l;
    l.budget = 10'000;
    RunRequest req;
    req.alpha = std::pair<std::size_t, std::size_t>{1, 9};
    const Report r = run_invariants(reed_solomon(field_of_order(9), 4), "h", req, l);
    CHECK(r.budget_exceeded);
    bool skipped = false;
    for (const auto& e : r.alpha)
        if (!e.value) {
            skipped = true;
            CHECK(e.skipped.find("BudgetExceeded") != std::string::npos);
        }
    CHECK(skipped);
}

TEST_CASE("comparison output") {
    Budget b;
    const auto c = compare_codes(reed_solomon(field_of_order(9), 4), twisted_rs_f9(),
                                 CompareOptions{1, 4, false, false, false, false, 0}, b);
    CHECK(to_tsv(c).find("alpha[3]: 7 vs 6") != std::string::npos);
    CHECK(to_json(c, "a", "b").find("provably inequivalent") != std::string::npos);
}

TEST_CASE("goldens") {
    Limits l;
    std::size_t failed = 0, disputed = 0;
    for (const auto& o : run_goldens(l)) {
        CAPTURE(o.name);
        CAPTURE(o.detail);
        if (o.status == GoldenStatus::fail) ++failed;
        if (o.status == GoldenStatus::disputed) ++disputed;
    }
    CHECK(failed == 0);
    CHECK(disputed == 6);

    const auto neg = run_goldens(l, "alpha even-weight n = 7", {{"alpha even-weight n = 7", {6, 4, 4, 4, 2, 2, 1}}});
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].status == GoldenStatus::fail);
    CHECK(neg[0].detail.find("[4] expected 4, got 2") != std::string::npos);

    CHECK(index_diff({1, 2, 3}, {1, 5, 3}) == "[2] expected 2, got 5");
}

}  // TEST_SUITE
