#include "CLI11.hpp"

#include "superlie/battery.hpp"
#include "superlie/io.hpp"

#include <fstream>
#include <iostream>

using namespace superlie;

namespace {

Field field_from_flag(const std::string& text) {
    if (text == "rational") return Field::rationals();
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
        p = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw Error("field flag must be \"rational\" or a prime number");
    }
    if (used != text.size()) throw Error("field flag must be \"rational\" or a prime number");
    return Field::prime(p);
}

InputDocument catalog_document(const std::string& family, const std::vector<std::size_t>& p,
                               const Field& field) {
    auto arity = [&](std::size_t want) {
        if (p.size() != want)
            throw Error("catalog: family '" + family + "' takes " + std::to_string(want) +
                        " parameter(s)");
    };
    if (family == "heisenberg-even") {
        arity(2);
        return document_from_lie(heisenberg_even(p[0], p[1], field));
    }
    if (family == "heisenberg-odd") {
        arity(1);
        return document_from_lie(heisenberg_odd(p[0], field));
    }
    if (family == "abelian") {
        arity(2);
        return document_from_lie(abelian(p[0], p[1], field));
    }
    if (family == "generic-full") {
        arity(2);
        return document_from_sske(generic_full(p[0], p[1], field));
    }
    if (family == "generic-even") {
        arity(2);
        return document_from_sske(generic_even_full(p[0], p[1], field));
    }
    if (family == "generic-odd") {
        arity(2);
        return document_from_sske(generic_odd_full(p[0], p[1], field));
    }
    if (family == "random") {
        arity(5);
        return document_from_sske(random_sske(p[0], p[1], p[2], p[3], p[4], field));
    }
    throw Error("catalog: unknown family '" + family + "'");
}

int run_validate(const std::string& path) {
    InputDocument doc = load_document(path);
    std::vector<std::string> bad =
        doc.is_lie ? validate(doc.algebra) : validate_sske(doc.map);
    if (bad.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const std::string& b : bad) std::cout << b << "\n";
    return 1;
}

int run_analyze(const std::string& path, bool as_json) {
    InputDocument doc = load_document(path);
    ReportDocument report = analyze_document(doc);
    std::cout << (as_json ? report_to_json(report) : report_to_text(report));
    return 0;
}

int run_classify(const std::string& path) {
    InputDocument doc = load_document(path);
    SkewSuperMap f = doc.is_lie ? from_lie(doc.algebra) : doc.map;
    if (!doc.is_lie) require_valid(f);
    std::cout << classify_rank_one(f).str() << "\n";
    return 0;
}

int run_catalog(const std::string& family, const std::vector<std::size_t>& params,
                const std::string& field_flag, const std::string& out_path) {
    InputDocument doc = catalog_document(family, params, field_from_flag(field_flag));
    std::string text = emit_document(doc);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + out_path + "'");
    out << text;
    return 0;
}

int run_verify(std::size_t max_m, std::size_t max_n, const std::string& field_flag) {
    if (max_m > 5 || max_n > 5) throw Error("verify-theorems: grid bounds are limited to 5");
    BatteryConfig cfg;
    cfg.field = field_from_flag(field_flag);
    cfg.even_grid_m = max_m;
    cfg.even_grid_n = max_n;
    cfg.odd_max_m = std::max<std::size_t>(std::size_t{1}, max_m);
    cfg.summand_max_k = std::min<std::size_t>(std::size_t{2}, max_m);
    cfg.summand_max_l = std::min<std::size_t>(std::size_t{2}, max_n);
    cfg.abelian_grid_m = max_m;
    cfg.abelian_grid_n = max_n;
    cfg.generic_max_m = std::max<std::size_t>(std::size_t{1}, max_m);
    cfg.generic_max_n = std::max<std::size_t>(std::size_t{1}, max_n);
    cfg.block_sum_max_m = std::min<std::size_t>(std::size_t{2},
                                                std::max<std::size_t>(std::size_t{1}, max_m));
    cfg.block_sum_max_n = std::min<std::size_t>(std::size_t{2}, max_n);

    std::vector<BatteryRow> rows = run_battery(cfg);
    std::size_t failed = 0;
    for (const BatteryRow& r : rows) {
        if (r.pass) {
            std::cout << "ok   " << r.criterion << ": " << r.instance << " -> " << r.computed
                      << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << r.criterion << ": " << r.instance << " expected "
                      << r.expected << ", got " << r.computed << "\n";
        }
    }
    std::cout << rows.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of class-two Lie superalgebras and their skew bilinear maps"};
    app.require_subcommand(1);

    std::string path, out_path, family, field_flag = "rational";
    std::vector<std::size_t> params;
    bool as_json = false;
    std::size_t max_m = 3, max_n = 3;

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full invariant report for a document");
    cmd_analyze->add_option("file", path, "input document")->required();
    cmd_analyze->add_flag("--json", as_json, "emit the report as JSON");
    cmd_analyze->add_flag("--text", "emit the report as text (default)");

    CLI::App* cmd_validate = app.add_subcommand("validate", "check the axioms for a document");
    cmd_validate->add_option("file", path, "input document")->required();

    CLI::App* cmd_catalog = app.add_subcommand("catalog", "emit a named family as a document");
    cmd_catalog->add_option("family", family,
                            "heisenberg-even | heisenberg-odd | abelian | generic-full | "
                            "generic-even | generic-odd | random")
        ->required();
    cmd_catalog->add_option("params", params, "family parameters");
    cmd_catalog->add_option("--out", out_path, "write to a file instead of standard output");
    cmd_catalog->add_option("--field", field_flag, "rational (default) or a prime p >= 5");

    CLI::App* cmd_verify = app.add_subcommand("verify-theorems", "run the verification battery");
    cmd_verify->add_option("--max-m", max_m, "even-parameter grid bound (default 3, max 5)");
    cmd_verify->add_option("--max-n", max_n, "odd-parameter grid bound (default 3, max 5)");
    cmd_verify->add_option("--field", field_flag, "rational (default) or a prime p >= 5");

    CLI::App* cmd_classify = app.add_subcommand("classify", "rank-one classification");
    cmd_classify->add_option("file", path, "input document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*cmd_analyze) return run_analyze(path, as_json);
        if (*cmd_validate) return run_validate(path);
        if (*cmd_catalog) return run_catalog(family, params, field_flag, out_path);
        if (*cmd_verify) return run_verify(max_m, max_n, field_flag);
        if (*cmd_classify) return run_classify(path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
