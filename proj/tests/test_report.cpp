#include <doctest.h>

#include <json.hpp>

#include "singeta/analysis.hpp"

using namespace singeta;

TEST_CASE("analyze aggregates all paths for the cusp") {
    AnalysisReport rep = analyze_polynomial("x^3+y^2");
    CHECK(rep.mu == 2);
    CHECK(rep.exit_code == 0);
    CHECK(rep.spectrum.size() == 2);
    CHECK(rep.spectrum[0] == Rational(-1, 6));
    CHECK(rep.tau == -1);
    CHECK(rep.signature == 0);
    REQUIRE(rep.brieskorn_exponents.has_value());
    CHECK(*rep.brieskorn_exponents == std::vector<long long>{3, 2});
    for (const char* path : {"closed_form", "eigen_decomposition", "spectral_flow",
                             "brieskorn_naive", "brieskorn_fast"}) {
        const auto& p = rep.eta.at(path);
        REQUIRE(p.exact.has_value());
        CHECK(p.exact->r0 == Rational(4, 3));
        CHECK(p.exact->r1 == Rational(0));
    }
    for (const char* path : {"double_oracle_general", "double_oracle_brieskorn"}) {
        const auto& p = rep.eta.at(path);
        REQUIRE(p.value.has_value());
        CHECK(std::abs(*p.value - 4.0 / 3.0) < 1e-8);
    }
}

TEST_CASE("analyze surfaces the documented discrepancy with exit 3") {
    AnalysisReport rep = analyze_polynomial("x^2+y^2");
    CHECK(rep.exit_code == 3);
    CHECK(rep.eta.at("closed_form").exact->r1 == Rational(1));
    CHECK(rep.eta.at("brieskorn_naive").exact->r1 == Rational(-1));
    bool found = false;
    for (const auto& c : rep.consistency)
        if (c.status == "documented_sign_discrepancy") found = true;
    CHECK(found);
}

TEST_CASE("analyze rejects non-isolated input") {
    try {
        analyze_polynomial("x^2*y^2");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NonIsolatedSingularity);
    }
}

TEST_CASE("analyze reports smooth input") {
    try {
        analyze_polynomial("x + y");
        CHECK(false);
    } catch (const Error& e) {
        // weights exist (w = (1,1), warned) but the Jacobian ideal is unit
        CHECK((e.code() == Err::NotSingular || e.code() == Err::NonPositiveWeight));
    }
}

TEST_CASE("non-quasihomogeneous but isolated input reports the weight failure") {
    try {
        analyze_polynomial("x^3 + y^2 + y^3");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotQuasihomogeneous);
    }
}

TEST_CASE("brieskorn command report agrees with the analyze route") {
    AnalysisOptions opt;
    opt.convention = UnitEigenvalueSign::BrieskornSign;
    AnalysisReport a = analyze_brieskorn({3, 2}, opt);
    AnalysisReport b = analyze_polynomial("x^3+y^2", opt);
    CHECK(a.mu == b.mu);
    CHECK(a.spectrum == b.spectrum);
    CHECK(*a.eta.at("closed_form").exact == *b.eta.at("closed_form").exact);
    CHECK(*a.eta.at("brieskorn_fast").exact == *b.eta.at("brieskorn_fast").exact);
    CHECK(a.exit_code == 0);
}

TEST_CASE("brieskorn form detection") {
    std::vector<long long> a;
    CHECK(brieskorn_form(parse_polynomial("x^3+y^2"), a));
    CHECK(a == std::vector<long long>{3, 2});
    CHECK(!brieskorn_form(parse_polynomial("2*x^3+y^2"), a));
    CHECK(!brieskorn_form(parse_polynomial("x^3+x*y^3"), a));
    CHECK(!brieskorn_form(parse_polynomial("x^3+y^2+x^2"), a));
    CHECK(!brieskorn_form(parse_polynomial("x^2+x^3+y^2"), a));
}

TEST_CASE("json output round-trips and is stable") {
    AnalysisReport rep = analyze_polynomial("x^3+y^2");
    std::string text = report_to_json(rep);
    auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(parsed["milnor_number"] == 2);
    CHECK(parsed["eta"]["closed_form"]["r0"] == "4/3");
    CHECK(parsed["weights"]["beta"] == "6");
    CHECK(parsed["flags"]["unit_eigenvalue_sign"] == "general");
    // required top-level keys
    for (const char* key : {"input", "weights", "milnor_number", "spectrum", "eta",
                            "consistency", "flags", "timing_ms"})
        CHECK(parsed.contains(key));
    // every path carries a value or a skip reason
    for (const auto& [name, val] : parsed["eta"].items()) {
        bool has_value = val.contains("float");
        bool skipped = val.contains("skipped_reason");
        CHECK((has_value || skipped));
    }
}

TEST_CASE("lambda truncation beyond 200 entries") {
    AnalysisOptions opt;
    opt.convention = UnitEigenvalueSign::BrieskornSign;
    AnalysisReport rep = analyze_brieskorn({18, 18}, opt); // mu = 289
    CHECK(rep.mu == 289);
    CHECK(rep.lambda.size() == 200);
    CHECK(rep.lambda_total == 289);
    CHECK(rep.eta.at("double_oracle_general").skipped_reason.find("cap") !=
          std::string::npos);
}

TEST_CASE("exact paths are skipped above the cap but lattice paths still run") {
    AnalysisOptions opt;
    opt.convention = UnitEigenvalueSign::BrieskornSign;
    opt.exact_path_mu_cap = 100;
    AnalysisReport rep = analyze_brieskorn({20, 21}, opt); // mu = 380
    CHECK(!rep.eta.at("closed_form").skipped_reason.empty());
    REQUIRE(rep.eta.at("brieskorn_fast").exact.has_value());
    CHECK(*rep.eta.at("brieskorn_fast").exact == eta_brieskorn_naive({20, 21}));
}
