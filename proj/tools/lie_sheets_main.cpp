#include <exception>
#include <iostream>
#include <string>
#include <optional>

#include <CLI11.hpp>

#include "lie/algebra.hpp"
#include "lie/render.hpp"
#include "lie/sheets.hpp"
#include "lie/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 invariant failure, 2 usage error, 3 strict-mode erratum.
constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kUsageError = 2;
constexpr int kStrictErratum = 3;

struct Options {
    std::string algebra;
    std::string format = "md";
    std::string suite = "all";
    std::string orbit;  // partition filter; accepts [3,2,1] and 3^2,1 forms
    bool trace = false;
    bool strict = false;
};

int run(const std::string& command, const Options& opt) {
    using namespace lie;
    OutputFormat fmt = parse_format(opt.format);

    if (command == "verify") {
        auto results = verify::run_suite(opt.suite);
        std::cout << render_verify(results, fmt);
        bool failed = false, warned = false;
        for (const auto& r : results) {
            failed = failed || !r.passed;
            warned = warned || !r.warnings.empty();
        }
        if (failed) return kInvariantFailure;
        if (warned && opt.strict) return kStrictErratum;
        return kOk;
    }

    AlgebraId alg = AlgebraId::parse(opt.algebra);
    std::optional<Partition> filter;
    if (!opt.orbit.empty()) filter = parse_partition(opt.orbit);

    if (command == "orbits") {
        auto rows = orbit_rows(alg);
        if (filter)
            std::erase_if(rows, [&](const OrbitRow& r) {
                return !r.orbit || r.orbit->partition != *filter;
            });
        std::cout << render_orbits(alg, rows, fmt);
    } else if (command == "sheets") {
        auto sheets = enumerate_sheets(alg);
        if (filter)
            std::erase_if(sheets, [&](const Sheet& s) {
                return !s.induced_orbit || s.induced_orbit->partition != *filter;
            });
        std::cout << render_sheets(alg, sheets, fmt, opt.trace);
    } else if (command == "gm") {
        std::cout << render_gm(alg, full_table(alg), fmt);
    } else if (command == "rigid") {
        std::cout << render_rigid(alg, fmt);
    } else if (command == "jordan") {
        std::cout << render_jordan(alg, jordan_classes(alg), fmt);
    } else {
        return kUsageError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sheets, nilpotent orbits and the strata g^(m) of the simple Lie algebras"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"orbits", "sheets", "gm", "rigid", "jordan"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--algebra,-a", opt.algebra, "algebra id, e.g. A5, B3, sl6, so12, E7")
            ->required();
        sub->add_option("--format,-f", opt.format, "json, csv or md");
        if (std::string(name) == "sheets" || std::string(name) == "orbits")
            sub->add_option("--orbit", opt.orbit,
                            "restrict to one partition, e.g. [3,3,1] or 3^2,1");
        if (std::string(name) == "sheets")
            sub->add_flag("--trace", opt.trace, "append the elementary-transformation trace");
        subs.push_back(sub);
    }
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("suite", opt.suite, "tables, oracles, properties or all");
    ver->add_option("--format,-f", opt.format, "json, csv or md");
    ver->add_flag("--strict", opt.strict, "exit 3 when documented table errata are reported");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        for (auto* sub : subs)
            if (sub->parsed()) return run(sub->get_name(), opt);
        if (ver->parsed()) return run("verify", opt);
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariantFailure;
    }
}
