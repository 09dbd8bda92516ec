#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "contentalg/config.hpp"
#include "contentalg/expr.hpp"

namespace {

using namespace contentalg;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_config_json(const std::string& path, const std::string& inline_text) {
    const std::string text = !inline_text.empty() ? inline_text : read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

int cmd_info(const json& cfg_json) {
    const SuiteConfig cfg = parse_config(cfg_json);
    const FiniteRing R = ring_from_json(cfg.ring_desc, cfg.bounds.order_cap);
    std::cout << "ring: " << R.label() << " (order " << R.order() << ")\n";
    auto show_set = [&](const char* name, const ElemSet& s) {
        std::cout << "  " << name << " (" << s.count() << "): {";
        bool first = true;
        s.for_each([&](std::size_t x) {
            if (!first) std::cout << ", ";
            std::cout << R.show(Elem(x));
            first = false;
        });
        std::cout << "}\n";
    };
    show_set("units", R.units());
    show_set("idempotents", R.idempotents());
    show_set("zero_divisors", R.zero_divisors());
    std::cout << "  nilradical: " << nilradical(R).show() << "\n";
    std::cout << "  jacobson: " << jacobson(R).show() << "\n";
    std::cout << "  spectrum:";
    for (const Ideal& p : spectrum(R)) std::cout << " " << p.show();
    std::cout << "\n";
    if (cfg.monoid_desc) {
        const Monoid S = monoid_from_json(*cfg.monoid_desc);
        std::cout << "monoid: " << S.label() << "\n";
        std::cout << "  cancellative: " << (S.cancellative() ? "yes" : "no");
        if (S.cancel_witness())
            std::cout << "  (witness s=" << S.show(S.cancel_witness()->s)
                      << " t=" << S.show(S.cancel_witness()->t)
                      << " u=" << S.show(S.cancel_witness()->u) << ")";
        std::cout << "\n  torsion_free: " << (S.torsion_free() ? "yes" : "no");
        if (S.torsion_witness())
            std::cout << "  (witness s=" << S.show(S.torsion_witness()->s)
                      << " t=" << S.show(S.torsion_witness()->t)
                      << " n=" << S.torsion_witness()->n << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_check(const json& cfg_json, const std::string& name) {
    json j = cfg_json;
    j["checks"] = json::array({name});
    const SuiteConfig cfg = parse_config(j);
    const Report rep = run_suite(cfg);
    std::cout << report_to_text(rep);
    return rep.any_fail() ? 1 : 0;
}

int cmd_dm(const json& cfg_json, const std::string& fexpr, const std::string& gexpr) {
    const SuiteConfig cfg = parse_config(cfg_json);
    if (!cfg.monoid_desc) throw SchemaError("dm needs a \"monoid\" in the config");
    const FiniteRing R = ring_from_json(cfg.ring_desc, cfg.bounds.order_cap);
    const Monoid S = monoid_from_json(*cfg.monoid_desc);
    MonoidRingCtx ctx(R, S);
    const ExprParser parser(ctx);
    const MRElem f = parser.parse(fexpr);
    const MRElem g = parser.parse(gexpr);
    const unsigned n = dm_exponent(ctx, f, g);
    std::cout << "f = " << ctx.show(f) << "\n";
    std::cout << "g = " << ctx.show(g) << "\n";
    std::cout << "c(f) = " << ctx.content(f).show() << ", c(g) = " << ctx.content(g).show()
              << ", c(fg) = " << ctx.content(ctx.mul(f, g)).show() << "\n";
    std::cout << "exponent: " << n << "\n";
    return 0;
}

int cmd_suite(const json& cfg_json, const std::string& out_path) {
    const SuiteConfig cfg = parse_config(cfg_json);
    const Report rep = run_suite(cfg);
    const std::string text = report_to_json(rep).dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw SchemaError("cannot write file: " + out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return rep.any_fail() ? 1 : 0;
}

int cmd_report(const std::string& in_path, const std::string& format) {
    std::string text;
    if (!in_path.empty()) {
        text = read_file(in_path);
    } else {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid report JSON: ") + e.what());
    }
    const Report rep = report_from_json(j);
    if (format == "json") std::cout << report_to_json(rep).dump(2) << "\n";
    else std::cout << report_to_text(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"content-ideal laboratory for finite commutative rings and monoid algebras"};
    app.require_subcommand(1);

    std::string config_path, config_inline, check_name, fexpr, gexpr, out_path, in_path;
    std::string format = "text";

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "path to a JSON config file");
        sub->add_option("--config-json", config_inline, "inline JSON config text");
    };

    CLI::App* info = app.add_subcommand("info", "ring and monoid facts");
    add_config(info);
    CLI::App* check = app.add_subcommand("check", "run one named check");
    check->add_option("name", check_name, "check name")->required();
    add_config(check);
    CLI::App* dm = app.add_subcommand("dm", "Dedekind-Mertens exponent of a pair");
    dm->add_option("--f", fexpr, "element expression for f")->required();
    dm->add_option("--g", gexpr, "element expression for g")->required();
    add_config(dm);
    CLI::App* suite = app.add_subcommand("suite", "run the configured check suite");
    add_config(suite);
    suite->add_option("--out", out_path, "write the JSON report to a file");
    CLI::App* report = app.add_subcommand("report", "re-render a JSON report");
    report->add_option("--in", in_path, "report file (stdin when omitted)");
    report->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (report->parsed()) return cmd_report(in_path, format);
        const json cfg = load_config_json(config_path, config_inline);
        if (info->parsed()) return cmd_info(cfg);
        if (check->parsed()) return cmd_check(cfg, check_name);
        if (dm->parsed()) return cmd_dm(cfg, fexpr, gexpr);
        if (suite->parsed()) return cmd_suite(cfg, out_path);
    } catch (const contentalg::CrossValidationMismatch& e) {
        std::cerr << "cross-validation mismatch (internal bug alarm): " << e.what() << "\n";
        return 3;
    } catch (const contentalg::CapExceeded& e) {
        std::cerr << "search cap exceeded (theorem-falsifying alarm): " << e.what() << "\n";
        return 1;
    } catch (const contentalg::SchemaError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
