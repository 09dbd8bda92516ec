#include <catch2/catch_amalgamated.hpp>

#include "contentalg/config.hpp"

using namespace contentalg;

TEST_CASE("config defaults", "[config]") {
    const SuiteConfig cfg = parse_config_text(R"({"ring": {"kind": "zmod", "n": 6}})");
    REQUIRE(cfg.bounds.support == 3);
    REQUIRE(cfg.bounds.max_terms == 3);
    REQUIRE(cfg.bounds.seed == 0x5eed);
    REQUIRE(cfg.bounds.coeff_mode == "exhaustive"); // order 6 <= 8
    REQUIRE(cfg.checks == ring_only_checks());      // no monoid: ring checks only

    const SuiteConfig big = parse_config_text(
        R"({"ring": {"kind": "trunc_poly", "p": 2, "vars": 2, "cap": 3}})");
    REQUIRE(big.bounds.coeff_mode == "sample"); // order 64

    const SuiteConfig with_monoid = parse_config_text(
        R"({"ring": {"kind": "zmod", "n": 6}, "monoid": {"kind": "free", "rank": 1}})");
    REQUIRE(with_monoid.checks.size() == ring_only_checks().size() + monoid_checks().size());
}

TEST_CASE("config validation errors", "[config]") {
    REQUIRE_THROWS_AS(parse_config_text("{not json"), SchemaError);
    REQUIRE_THROWS_AS(parse_config_text(R"({"checks": "all"})"), SchemaError); // no ring
    REQUIRE_THROWS_AS(parse_config_text(R"({"ring": {"kind": "nope"}})"), SchemaError);
    REQUIRE_THROWS_AS(parse_config_text(R"({"ring": {"kind": "zmod"}})"), SchemaError);
    // monoid check without a monoid
    REQUIRE_THROWS_AS(
        parse_config_text(R"({"ring": {"kind": "zmod", "n": 6}, "checks": ["gaussian"]})"),
        SchemaError);
    // unknown check name
    REQUIRE_THROWS_AS(parse_config_text(
                          R"({"ring": {"kind": "zmod", "n": 6},
                              "monoid": {"kind": "free"}, "checks": ["bogus"]})"),
                      SchemaError);
    // explicit exhaustive coefficients on an order-64 ring
    REQUIRE_THROWS_AS(parse_config_text(
                          R"({"ring": {"kind": "trunc_poly", "p": 2, "vars": 2, "cap": 3},
                              "bounds": {"coeff_mode": "exhaustive"}})"),
                      SchemaError);
    // bad support
    REQUIRE_THROWS_AS(parse_config_text(
                          R"({"ring": {"kind": "zmod", "n": 6}, "bounds": {"support": 0}})"),
                      SchemaError);
    // bad coeff_mode value
    REQUIRE_THROWS_AS(parse_config_text(
                          R"({"ring": {"kind": "zmod", "n": 6}, "bounds": {"coeff_mode": "x"}})"),
                      SchemaError);
}

TEST_CASE("ring and monoid descriptions round trip through the factory", "[config]") {
    REQUIRE(ring_from_json(json::parse(R"({"kind": "zmod", "n": 8})")).label() == "Z/8");
    REQUIRE(ring_from_json(json::parse(
                               R"({"kind": "product",
                                   "factors": [{"kind": "zmod", "n": 2}, {"kind": "zmod", "n": 3}]})"))
                .order() == 6);
    REQUIRE(monoid_from_json(json::parse(R"({"kind": "free", "rank": 2})")).label() == "N^2");
    REQUIRE(monoid_from_json(json::parse(R"({"kind": "group", "free_rank": 1})")).label() == "Z");
    REQUIRE(monoid_from_json(json::parse(R"({"kind": "group", "torsion": [3]})")).label() == "Z/3");
    REQUIRE_FALSE(monoid_from_json(json::parse(R"({"kind": "trunc_add", "size": 3})"))
                      .cancellative());
}

TEST_CASE("suite run records failures with witnesses", "[config]") {
    const SuiteConfig cfg = parse_config_text(
        R"({"ring": {"kind": "zmod", "n": 2},
            "monoid": {"kind": "group", "torsion": [2]},
            "checks": ["mccoy", "unit_content"]})");
    const Report rep = run_suite(cfg);
    REQUIRE(rep.instance == "Z/2[Z/2]");
    REQUIRE(rep.any_fail());
    REQUIRE(rep.results.size() == 2);
    for (const CheckResult& r : rep.results) {
        REQUIRE(r.verdict == Verdict::Fail);
        REQUIRE(r.witness.find("1 + X^1") != std::string::npos);
    }
}

TEST_CASE("reports round trip through JSON and hash deterministically", "[config]") {
    const SuiteConfig cfg = parse_config_text(
        R"({"ring": {"kind": "zmod", "n": 4},
            "monoid": {"kind": "free", "rank": 1},
            "checks": ["gaussian", "armendariz", "property_a"]})");
    const Report a = run_suite(cfg);
    const Report b = run_suite(cfg);
    REQUIRE_FALSE(a.any_fail());
    REQUIRE(a.determinism_hash == b.determinism_hash);
    REQUIRE(a.determinism_hash.size() == 16);

    const Report back = report_from_json(report_to_json(a));
    REQUIRE(back.instance == a.instance);
    REQUIRE(back.determinism_hash == a.determinism_hash);
    REQUIRE(determinism_hash_of(back) == a.determinism_hash);
    REQUIRE(back.results.size() == a.results.size());
    for (std::size_t i = 0; i < back.results.size(); ++i) {
        REQUIRE(back.results[i].name == a.results[i].name);
        REQUIRE(back.results[i].verdict == a.results[i].verdict);
        REQUIRE(back.results[i].scanned == a.results[i].scanned);
    }
    REQUIRE(report_to_text(a).find("gaussian: pass") != std::string::npos);
    REQUIRE(report_to_text(a).find("hash: " + a.determinism_hash) != std::string::npos);
}

TEST_CASE("every registered check dispatches on a small instance", "[config]") {
    const SuiteConfig cfg = parse_config_text(
        R"({"ring": {"kind": "zmod", "n": 4},
            "monoid": {"kind": "free", "rank": 1},
            "bounds": {"max_terms": 2}})");
    const Report rep = run_suite(cfg);
    REQUIRE(rep.results.size() == ring_only_checks().size() + monoid_checks().size());
    REQUIRE_FALSE(rep.any_fail());
    // config order is preserved in the report
    for (std::size_t i = 0; i < ring_only_checks().size(); ++i)
        REQUIRE(rep.results[i].name == ring_only_checks()[i]);
}
