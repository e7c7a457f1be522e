#include <CLI11.hpp>

#include "symquot/report.hpp"

#include <chrono>
#include <iostream>

using namespace symquot;

namespace {

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symquot: symmetric quotients of group algebras over a cyclotomic DVR"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    bool timing = false;
    unsigned jobs = 1;
    app.add_option("--format", format, "output format: json | tsv | text")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_flag("--timing", timing, "include wall-clock timing in the report");
    app.add_option("--jobs", jobs, "character-level parallelism")->default_val(1);

    // classify <spec> -p <prime> [--conductor m]
    auto* classify = app.add_subcommand("classify", "classify every irreducible character");
    std::string classify_spec;
    std::uint64_t classify_p = 0;
    unsigned conductor = 0;
    classify->fallthrough();
    classify->add_option("spec", classify_spec, "group descriptor")->required();
    classify->add_option("-p,--p", classify_p, "prime")->required();
    classify->add_option("--conductor", conductor,
                         "conductor override (defaults to exp(G))");

    // verify <id> [--group spec] [--p prime] [--n n] [--kind kind]
    auto* verify = app.add_subcommand("verify", "verify a named statement");
    std::string verify_id;
    std::string verify_group;
    std::uint64_t verify_p = 0;
    unsigned verify_n = 0;
    std::string verify_kind;
    verify->fallthrough();
    verify->add_option("id", verify_id,
                       "thm1.1 | prop1.6 | prop1.7 | prop1.8 | cor1.9 | lemma3.1 | sec3basis | "
                       "prop4.2 | example6.1")
        ->required();
    verify->add_option("--group", verify_group, "group descriptor");
    verify->add_option("--p", verify_p, "prime");
    verify->add_option("--n", verify_n, "two-power exponent parameter");
    verify->add_option("--kind", verify_kind, "dihedral | quaternion | quasidihedral");

    // corpus [--filter glob]
    auto* corpus = app.add_subcommand("corpus", "sweep the built-in corpus");
    std::string filter;
    corpus->fallthrough();
    corpus->add_option("--filter", filter, "glob or substring filter on group specs");

    // table <spec>
    auto* table = app.add_subcommand("table", "print the exact character table");
    std::string table_spec;
    table->fallthrough();
    table->add_option("spec", table_spec, "group descriptor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        ReportFormat fmt = parse_format(format);
        auto t0 = std::chrono::steady_clock::now();
        if (*classify) {
            GroupPtr G = Group::build(classify_spec);
            if (conductor && conductor < G->exponent()) {
                std::cerr << "warning: conductor " << conductor << " is smaller than exp(G) = "
                          << G->exponent() << "\n";
            }
            GroupClassification C = classify_group(G, classify_p, conductor, jobs);
            std::cout << render_classification(C, fmt, timing ? elapsed_ms(t0) : -1);
            return C.violations > 0 ? 2 : 0;
        }
        if (*verify) {
            VerifyOptions opt;
            opt.group_spec = verify_group;
            if (verify_p) opt.p = verify_p;
            if (verify_n) opt.n = verify_n;
            opt.kind = verify_kind;
            opt.jobs = jobs;
            VerifyResult V = run_verify(verify_id, opt);
            std::cout << render_verify(V, fmt, timing ? elapsed_ms(t0) : -1);
            return V.verdict == Verdict::FAIL ? 2 : 0;
        }
        if (*corpus) {
            CorpusReport R = run_corpus(filter, jobs);
            std::cout << render_corpus(R, fmt, timing ? elapsed_ms(t0) : -1);
            return R.total_violations > 0 ? 2 : 0;
        }
        if (*table) {
            CharacterTable T = character_table(Group::build(table_spec));
            std::cout << render_table(T, fmt);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
