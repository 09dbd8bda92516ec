#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contentalg/content_checks.hpp"
#include "contentalg/localize.hpp"
#include "contentalg/module_checks.hpp"
#include "contentalg/spectra_checks.hpp"

namespace contentalg {

using json = nlohmann::json;

inline FiniteRing ring_from_json(const json& j, std::size_t order_cap = kDefaultOrderCap) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("ring: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zmod") {
        if (!j.contains("n")) throw SchemaError("ring zmod: missing \"n\"");
        return FiniteRing::zmod(j.at("n").get<std::uint64_t>(), order_cap);
    }
    if (kind == "trunc_poly") {
        for (const char* f : {"p", "vars", "cap"})
            if (!j.contains(f)) throw SchemaError(std::string("ring trunc_poly: missing \"") + f + "\"");
        return FiniteRing::trunc_poly(j.at("p").get<unsigned>(), j.at("vars").get<unsigned>(),
                                      j.at("cap").get<unsigned>(), order_cap);
    }
    if (kind == "product") {
        if (!j.contains("factors")) throw SchemaError("ring product: missing \"factors\"");
        std::vector<FiniteRing> factors;
        for (const json& f : j.at("factors")) factors.push_back(ring_from_json(f, order_cap));
        return FiniteRing::product(factors, order_cap);
    }
    if (kind == "table") {
        for (const char* f : {"dims", "mul_table", "one"})
            if (!j.contains(f)) throw SchemaError(std::string("ring table: missing \"") + f + "\"");
        return FiniteRing::from_basis(
            j.value("label", std::string("table")), j.at("dims").get<std::vector<std::uint32_t>>(),
            j.at("mul_table").get<std::vector<std::vector<std::vector<std::uint32_t>>>>(),
            j.at("one").get<std::vector<std::uint32_t>>(), order_cap);
    }
    throw SchemaError("ring: unknown kind '" + kind + "'");
}

inline Monoid monoid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("monoid: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return Monoid::free_monoid(j.value("rank", 1u));
    if (kind == "group")
        return Monoid::abelian_group(j.value("free_rank", 0u),
                                     j.value("torsion", std::vector<long long>{}));
    if (kind == "trunc_add") return Monoid::trunc_add(j.value("size", std::size_t(3)));
    if (kind == "table") {
        if (!j.contains("table")) throw SchemaError("monoid table: missing \"table\"");
        return Monoid::from_table(j.at("table").get<std::vector<std::vector<std::size_t>>>(),
                                  j.value("identity", std::size_t(0)), j.value("label", std::string()));
    }
    throw SchemaError("monoid: unknown kind '" + kind + "'");
}

struct SuiteConfig {
    json ring_desc;
    std::optional<json> monoid_desc;
    ScanBounds bounds;
    std::vector<std::string> checks; // resolved list, in registry order
    json echo;                       // normalized config for the report
};

inline const std::vector<std::string>& ring_only_checks() {
    static const std::vector<std::string> v = {
        "property_a", "vfzd_ring", "spectrum_crosscheck",
        "nakayama", "intersection_law", "scalar_content", "submodule_transfer"};
    return v;
}

inline const std::vector<std::string>& monoid_checks() {
    static const std::vector<std::string> v = {
        "gaussian", "armendariz", "weak_content", "unit_content", "mccoy",
        "theorem13_battery", "dm_bound", "regular_equiv", "gaussian_quotient_equivalence",
        "cyclic_gaussian", "module_vfzd",
        "extension_contraction", "prime_extension", "primary_extension", "nil_extension",
        "min_bijection", "ass_extension", "domainlike_transfer", "vfzd_transfer",
        "jac_correspondence", "max_correspondence", "presimplifiable_transfer",
        "idempotent_coincidence", "valuation_transfer"};
    return v;
}

inline SuiteConfig parse_config(const json& j) {
    if (!j.is_object()) throw SchemaError("config: top level must be an object");
    if (!j.contains("ring")) throw SchemaError("config: missing \"ring\"");
    SuiteConfig cfg;
    cfg.ring_desc = j.at("ring");
    if (j.contains("monoid")) cfg.monoid_desc = j.at("monoid");

    const json b = j.value("bounds", json::object());
    cfg.bounds.support = b.value("support", 3);
    if (cfg.bounds.support < 1) throw SchemaError("bounds.support must be >= 1");
    cfg.bounds.sample_size = b.value("sample_size", 500u);
    cfg.bounds.seed = b.value("seed", std::uint64_t(0x5eed));
    cfg.bounds.gen_cap = b.value("gen_cap", 3u);
    cfg.bounds.order_cap = b.value("order_cap", kDefaultOrderCap);
    cfg.bounds.max_terms = b.value("max_terms", 3u);
    cfg.bounds.universe_cap = b.value("universe_cap", std::size_t(4096));
    cfg.bounds.pair_cap = b.value("pair_cap", std::size_t(4000000));

    const FiniteRing probe = ring_from_json(cfg.ring_desc, cfg.bounds.order_cap);
    if (b.contains("coeff_mode")) {
        cfg.bounds.coeff_mode = b.at("coeff_mode").get<std::string>();
        if (cfg.bounds.coeff_mode != "exhaustive" && cfg.bounds.coeff_mode != "sample")
            throw SchemaError("bounds.coeff_mode must be \"exhaustive\" or \"sample\"");
        if (cfg.bounds.coeff_mode == "exhaustive" && probe.order() > 8)
            throw SchemaError("bounds.coeff_mode: exhaustive forbidden for ring order > 8; use sample");
    } else {
        cfg.bounds.coeff_mode = probe.order() <= 8 ? "exhaustive" : "sample";
    }

    std::vector<std::string> requested;
    const json c = j.value("checks", json("all"));
    const bool all = c.is_string() && c.get<std::string>() == "all";
    if (!all) {
        if (!c.is_array()) throw SchemaError("config: \"checks\" must be \"all\" or a list");
        for (const json& name : c) requested.push_back(name.get<std::string>());
    }
    auto known = [&](const std::string& n) {
        for (const auto& k : ring_only_checks())
            if (k == n) return 1;
        for (const auto& k : monoid_checks())
            if (k == n) return 2;
        return 0;
    };
    if (all) {
        cfg.checks = ring_only_checks();
        if (cfg.monoid_desc)
            cfg.checks.insert(cfg.checks.end(), monoid_checks().begin(), monoid_checks().end());
    } else {
        for (const std::string& n : requested) {
            const int kind = known(n);
            if (kind == 0) throw SchemaError("unknown check name '" + n + "'");
            if (kind == 2 && !cfg.monoid_desc)
                throw SchemaError("check '" + n + "' needs a \"monoid\" in the config");
            cfg.checks.push_back(n);
        }
    }

    cfg.echo = json{{"ring", cfg.ring_desc},
                    {"bounds",
                     {{"support", cfg.bounds.support},
                      {"coeff_mode", cfg.bounds.coeff_mode},
                      {"sample_size", cfg.bounds.sample_size},
                      {"seed", cfg.bounds.seed},
                      {"gen_cap", cfg.bounds.gen_cap},
                      {"order_cap", cfg.bounds.order_cap},
                      {"max_terms", cfg.bounds.max_terms},
                      {"universe_cap", cfg.bounds.universe_cap},
                      {"pair_cap", cfg.bounds.pair_cap}}},
                    {"checks", cfg.checks}};
    if (cfg.monoid_desc) cfg.echo["monoid"] = *cfg.monoid_desc;
    return cfg;
}

inline SuiteConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

// --- check dispatch ------------------------------------------------------------

namespace detail {

inline CheckResult merge_subresults(std::string name, std::vector<CheckResult> subs) {
    CheckResult out;
    out.name = std::move(name);
    out.verdict = Verdict::Pass;
    bool any_run = false, bounded = false;
    for (CheckResult& s : subs) {
        out.scanned += s.scanned;
        out.seed = s.seed;
        if (s.verdict == Verdict::Fail) {
            out.verdict = Verdict::Fail;
            out.witness = s.witness;
            out.note = s.note;
            return out;
        }
        if (s.verdict == Verdict::Skipped) continue;
        any_run = true;
        bounded = bounded || s.verdict == Verdict::BoundedPass || s.verdict == Verdict::Inconclusive;
    }
    if (!any_run) {
        out.verdict = Verdict::Skipped;
        out.note = subs.empty() ? "nothing to check" : subs.front().note;
    } else if (bounded) {
        out.verdict = Verdict::BoundedPass;
    }
    out.details["subchecks"] = std::to_string(subs.size());
    return out;
}

} // namespace detail

// Runs one named check with its own arithmetic context, so parallel dispatch
// never shares mutable cache state.
inline CheckResult run_check(const std::string& name, const FiniteRing& R,
                             const Monoid* S, const ScanBounds& bounds) {
    const std::uint64_t seed = bounds.seed;

    // ring-only checks
    if (name == "property_a") {
        const PropertyAResult pa = has_property_A(R, bounds.gen_cap);
        CheckResult r;
        r.name = name;
        r.verdict = pa.holds ? Verdict::Pass : Verdict::Fail;
        if (pa.witness) r.witness = "I = " + pa.witness->show();
        r.note = "gen_cap " + std::to_string(pa.gen_cap);
        return r;
    }
    if (name == "vfzd_ring") {
        const VeryFewZdResult vf = very_few_zero_divisors(R);
        CheckResult r;
        r.name = name;
        r.verdict = vf.holds ? Verdict::Pass : Verdict::Fail;
        std::string cover;
        for (const Ideal& p : vf.cover) cover += (cover.empty() ? "" : ", ") + p.show();
        r.details["cover"] = cover;
        r.note = "minimal associated-prime cover of Z(R)";
        return r;
    }
    if (name == "spectrum_crosscheck") {
        const std::vector<Ideal> primes = spectrum(R); // throws on mismatch
        CheckResult r;
        r.name = name;
        r.verdict = Verdict::Pass;
        std::string list;
        for (const Ideal& p : primes) list += (list.empty() ? "" : ", ") + p.show();
        r.details["spectrum"] = list;
        r.scanned = primes.size();
        return r;
    }
    auto module_ranks = [&]() {
        std::vector<unsigned> ks;
        std::uint64_t n = R.order();
        for (unsigned k = 1; k <= 2; ++k) {
            if (n <= bounds.order_cap) ks.push_back(k);
            n *= R.order();
        }
        return ks;
    };
    if (name == "nakayama" || name == "intersection_law" || name == "scalar_content" ||
        name == "submodule_transfer") {
        std::vector<CheckResult> subs;
        for (unsigned k : module_ranks()) {
            if (name == "nakayama") subs.push_back(nakayama_check(R, k, bounds.gen_cap));
            else if (name == "intersection_law") subs.push_back(intersection_law_check(R, k, bounds.gen_cap));
            else if (name == "scalar_content") subs.push_back(scalar_content_check(R, k));
            else subs.push_back(submodule_transfer_check(R, k, bounds.gen_cap));
        }
        return detail::merge_subresults(name, std::move(subs));
    }

    if (!S) throw SchemaError("check '" + name + "' needs a monoid");
    MonoidRingCtx ctx(R, *S);
    ScanUniverse U(ctx, bounds);

    if (name == "gaussian") return gaussian_check(U, seed);
    if (name == "armendariz") return armendariz_check(U, seed);
    if (name == "weak_content") return weak_content_check(U, seed);
    if (name == "unit_content") return unit_content_check(U, seed);
    if (name == "mccoy") return mccoy_check(U, seed);
    if (name == "theorem13_battery") return theorem13_battery(U, seed);
    if (name == "dm_bound") return dm_bound_check(U, seed);
    if (name == "regular_equiv") return is_regular_equiv_check(U, seed);
    if (name == "gaussian_quotient_equivalence")
        return gaussian_quotient_equivalence(U, bounds, bounds.gen_cap, seed);
    if (name == "cyclic_gaussian") return cyclic_gaussian_check(U, seed, bounds.gen_cap);
    if (name == "module_vfzd") {
        const unsigned k = R.order() * std::uint64_t(R.order()) <= bounds.order_cap ? 2 : 1;
        return module_vfzd_check(U, k, seed, bounds.order_cap);
    }
    if (name == "extension_contraction") {
        std::vector<CheckResult> subs;
        for (const Ideal& p : spectrum(R)) subs.push_back(extension_contraction_check(ctx, p));
        return detail::merge_subresults(name, std::move(subs));
    }
    if (name == "prime_extension") {
        std::vector<CheckResult> subs;
        for (const Ideal& p : spectrum(R)) subs.push_back(prime_extension_check(U, p, seed));
        return detail::merge_subresults(name, std::move(subs));
    }
    if (name == "primary_extension") {
        std::vector<Ideal> proper;
        for (Ideal& q : enumerate_ideals(R, bounds.gen_cap))
            if (!q.is_whole()) proper.push_back(std::move(q));
        return detail::merge_subresults(name, primary_extension_battery(U, proper, seed));
    }
    if (name == "nil_extension") return nil_extension_check(U, seed);
    if (name == "min_bijection") return min_bijection_check(U, seed);
    if (name == "ass_extension") return ass_extension_check(U, seed);
    if (name == "domainlike_transfer") return domainlike_transfer_check(U, seed);
    if (name == "vfzd_transfer") return vfzd_transfer_check(U, seed);
    if (name == "jac_correspondence") return jac_correspondence_check(U, seed);
    if (name == "max_correspondence") return max_correspondence_check(U, seed);
    if (name == "presimplifiable_transfer") return presimplifiable_transfer_check(U, seed);
    if (name == "idempotent_coincidence")
        return idempotent_coincidence_check(U, seed, bounds.gen_cap);
    if (name == "valuation_transfer") return valuation_transfer_check(U, seed);
    throw SchemaError("unknown check name '" + name + "'");
}

// --- report ----------------------------------------------------------------------

struct Report {
    std::string tool_version = "0.1.0";
    std::string instance;
    json config_echo;
    std::vector<CheckResult> results;
    double wall_ms = 0;
    std::string determinism_hash;

    bool any_fail() const {
        for (const CheckResult& r : results)
            if (!r.ok()) return true;
        return false;
    }
};

inline json check_result_to_json(const CheckResult& r) {
    json d = json::object();
    for (const auto& [k, v] : r.details) d[k] = v;
    return json{{"name", r.name},       {"verdict", to_string(r.verdict)},
                {"witness", r.witness}, {"note", r.note},
                {"scanned", r.scanned}, {"seed", r.seed},
                {"exhaustive", r.exhaustive}, {"details", d}};
}

inline CheckResult check_result_from_json(const json& j) {
    CheckResult r;
    r.name = j.at("name").get<std::string>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "pass") r.verdict = Verdict::Pass;
    else if (v == "pass(bounded)") r.verdict = Verdict::BoundedPass;
    else if (v == "FAIL") r.verdict = Verdict::Fail;
    else if (v == "skipped") r.verdict = Verdict::Skipped;
    else if (v == "inconclusive") r.verdict = Verdict::Inconclusive;
    else throw SchemaError("report: unknown verdict '" + v + "'");
    r.witness = j.at("witness").get<std::string>();
    r.note = j.at("note").get<std::string>();
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    for (const auto& [k, val] : j.at("details").items()) r.details[k] = val.get<std::string>();
    return r;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Hash over everything except wall time, so identical configs give identical
// hashes across runs.
inline std::string determinism_hash_of(const Report& rep) {
    json j = json{{"tool_version", rep.tool_version},
                  {"instance", rep.instance},
                  {"config", rep.config_echo}};
    json rs = json::array();
    for (const CheckResult& r : rep.results) rs.push_back(check_result_to_json(r));
    j["results"] = rs;
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(j.dump()));
    return buf;
}

inline json report_to_json(const Report& rep) {
    json rs = json::array();
    for (const CheckResult& r : rep.results) rs.push_back(check_result_to_json(r));
    return json{{"tool_version", rep.tool_version}, {"instance", rep.instance},
                {"config", rep.config_echo},        {"results", rs},
                {"wall_ms", rep.wall_ms},           {"determinism_hash", rep.determinism_hash}};
}

inline Report report_from_json(const json& j) {
    Report rep;
    rep.tool_version = j.at("tool_version").get<std::string>();
    rep.instance = j.at("instance").get<std::string>();
    rep.config_echo = j.at("config");
    for (const json& r : j.at("results")) rep.results.push_back(check_result_from_json(r));
    rep.wall_ms = j.at("wall_ms").get<double>();
    rep.determinism_hash = j.at("determinism_hash").get<std::string>();
    return rep;
}

inline std::string report_to_text(const Report& rep) {
    std::string out = "instance: " + rep.instance + "\n";
    for (const CheckResult& r : rep.results) {
        out += "  " + r.name + ": " + to_string(r.verdict);
        if (!r.witness.empty()) out += "  [witness: " + r.witness + "]";
        if (!r.note.empty()) out += "  (" + r.note + ")";
        out += "\n";
    }
    out += "hash: " + rep.determinism_hash + "\n";
    return out;
}

inline unsigned thread_budget() {
    if (const char* env = std::getenv("CONTENTALG_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    return 1;
}

// Executes the configured checks. Independent checks may run in parallel (each
// with private arithmetic state); the report is a deterministic reduction in
// config order.
inline Report run_suite(const SuiteConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const FiniteRing R = ring_from_json(cfg.ring_desc, cfg.bounds.order_cap);
    std::optional<Monoid> S;
    if (cfg.monoid_desc) S = monoid_from_json(*cfg.monoid_desc);

    Report rep;
    rep.config_echo = cfg.echo;
    rep.instance = R.label() + (S ? "[" + S->label() + "]" : "");
    rep.results.resize(cfg.checks.size());

    const unsigned threads = std::min<unsigned>(thread_budget(), unsigned(cfg.checks.size() ? cfg.checks.size() : 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cfg.checks.size(); ++i)
            rep.results[i] = run_check(cfg.checks[i], R, S ? &*S : nullptr, cfg.bounds);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < cfg.checks.size();
                     i = next.fetch_add(1))
                    rep.results[i] = run_check(cfg.checks[i], R, S ? &*S : nullptr, cfg.bounds);
            }));
        for (auto& f : futs) f.get();
    }

    rep.determinism_hash = determinism_hash_of(rep);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

} // namespace contentalg
