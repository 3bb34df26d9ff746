#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homkernel/homkernel.h"

/* Thin shell over the shared library: flags in, one JSON report out.
 * Exit 0 means the report was computed, whatever its verdicts say.
 * Exit 2 flags a usage problem, 3 a document/content problem, 4 a bug. */

int main(int argc, char** argv) {
    CLI::App app{"exact homological checks over bound quiver algebras on a prime field"};
    app.allow_extras();

    std::string input_path;
    uint64_t seed = 0;
    int cap = 16;
    int trials = 0;
    uint32_t field = 0;
    bool pretty = false;
    bool compact = false;
    bool timing = false;
    app.add_option("--input", input_path, "input document (JSON file)");
    app.add_option("--seed", seed, "seed for randomized searches and oracle replay");
    app.add_option("--cap", cap, "length bound for resolve and coresolve");
    app.add_option("--count", trials, "oracle trial count; 0 keeps each oracle's default");
    app.add_option("--field", field, "override the document's prime");
    app.add_flag("--json", compact, "compact one-line report (default)");
    app.add_flag("--pretty", pretty, "indented report")->excludes("--json");
    app.add_flag("--timing", timing, "add wall-clock milliseconds to the report");
    app.footer(
        "commands:\n"
        "  basis | hom M N | ext I M N | tor I M N | resolve M | coresolve M | endo M\n"
        "  check tilting T N | check cotilting U N W | check ringel M N\n"
        "  check kernel-tilting T N | check kernel-cotilting U N W\n"
        "  scan orthogonality M... [--cogenerator W] | oracle NAME");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::vector<std::string> cmd = app.remaining();
    if (cmd.empty()) {
        std::fprintf(stderr, "error: no command given; try --help\n");
        return 2;
    }
    if (cmd.front().rfind("-", 0) == 0) {
        std::fprintf(stderr, "error: unknown flag: %s\n", cmd.front().c_str());
        return 2;
    }

    std::string input;
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) {
            std::fprintf(stderr, "error: cannot read input file: %s\n", input_path.c_str());
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        input = ss.str();
    }

    hk_session* session = hk_open();
    if (!session) {
        std::fprintf(stderr, "error: cannot open a session\n");
        return 4;
    }
    std::vector<const char*> tokens;
    tokens.reserve(cmd.size());
    for (const std::string& t : cmd) tokens.push_back(t.c_str());

    char* report = nullptr;
    int rc = hk_run(session, input.empty() ? nullptr : input.c_str(),
                    static_cast<int>(tokens.size()), tokens.data(), seed, cap, trials, field,
                    pretty ? 1 : 0, timing ? 1 : 0, &report);
    if (rc == HK_OK) {
        std::printf("%s\n", report);
        hk_string_free(report);
        hk_close(session);
        return 0;
    }
    std::fprintf(stderr, "error: %s\n", hk_last_error(session));
    hk_close(session);
    if (rc == HK_EINVAL) return 2;
    if (rc == HK_EINTERNAL) return 4;
    return 3;
}
