#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "homkernel/homkernel.h"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const char* name) { return std::string(HK_FIXTURES_DIR) + "/" + name; }

struct Session {
    hk_session* s = hk_open();
    ~Session() { hk_close(s); }
};

int run(hk_session* s, const char* doc, const std::vector<const char*>& tokens, std::string* report,
        uint64_t seed = 0) {
    char* out = nullptr;
    int rc = hk_run(s, doc, static_cast<int>(tokens.size()), tokens.data(), seed, 16, 0, 0, 0, 0, &out);
    if (report) report->clear();
    if (out) {
        if (report) *report = out;
        hk_string_free(out);
    }
    return rc;
}

}  // namespace

TEST_CASE("computes a report and hands ownership to the caller") {
    Session ses;
    REQUIRE(ses.s != nullptr);
    std::string doc = read_file(fixture("fix_n3.json"));
    std::string report;
    int rc = run(ses.s, doc.c_str(), {"ext", "2", "S1", "S3"}, &report);
    CHECK(rc == HK_OK);
    CHECK(std::string(hk_last_error(ses.s)).empty());
    CHECK(report.find("\"degree\":2") != std::string::npos);
    CHECK(report.find("\"dimension\":1") != std::string::npos);
    CHECK(report.find("\"schema_version\":1") != std::string::npos);
}

TEST_CASE("classifies failures by return code") {
    Session ses;
    std::string doc = read_file(fixture("fix_n3.json"));
    std::string report;

    CHECK(run(ses.s, "{broken", {"basis"}, &report) == HK_EPARSE);
    CHECK(report.empty());
    CHECK(!std::string(hk_last_error(ses.s)).empty());

    CHECK(run(ses.s, doc.c_str(), {"hom", "S1", "missing"}, &report) == HK_EREF);
    CHECK(std::string(hk_last_error(ses.s)).find("missing") != std::string::npos);

    CHECK(run(ses.s, doc.c_str(), {"ext", "-1", "S1", "S3"}, &report) == HK_EINVAL);

    CHECK(run(ses.s, nullptr, {"basis"}, &report) == HK_EINVAL);  // document required

    // a later success clears the stored message
    CHECK(run(ses.s, doc.c_str(), {"basis"}, &report) == HK_OK);
    CHECK(std::string(hk_last_error(ses.s)).empty());
    CHECK(report.find("\"dimension\":5") != std::string::npos);
}

TEST_CASE("rejects malformed calls without touching the output slot") {
    Session ses;
    const char* tokens[] = {"basis"};
    CHECK(hk_run(nullptr, nullptr, 1, tokens, 0, 16, 0, 0, 0, 0, nullptr) == HK_EINVAL);
    CHECK(hk_run(ses.s, nullptr, 1, tokens, 0, 16, 0, 0, 0, 0, nullptr) == HK_EINVAL);
    char* out = reinterpret_cast<char*>(&ses);  // sentinel, must be overwritten to null on failure
    CHECK(hk_run(ses.s, nullptr, -1, tokens, 0, 16, 0, 0, 0, 0, &out) == HK_EINVAL);
    const char* holed[] = {"basis", nullptr};
    CHECK(hk_run(ses.s, nullptr, 2, holed, 0, 16, 0, 0, 0, 0, &out) == HK_EINVAL);
    CHECK(out == nullptr);
    CHECK(hk_last_error(nullptr)[0] == '\0');
    hk_string_free(nullptr);  // must be a no-op
}

TEST_CASE("runs oracles without any document") {
    Session ses;
    char* out = nullptr;
    const char* tokens[] = {"oracle", "ext_routes"};
    int rc = hk_run(ses.s, nullptr, 2, tokens, 2026, 16, 10, 0, 0, 0, &out);
    CHECK(rc == HK_OK);
    REQUIRE(out != nullptr);
    std::string report = out;
    hk_string_free(out);
    CHECK(report.find("\"passed\":true") != std::string::npos);
    CHECK(report.find("\"trials\":10") != std::string::npos);
}

TEST_CASE("identical calls give identical bytes") {
    Session ses;
    std::string doc = read_file(fixture("fix_a2.json"));
    std::string first, second;
    CHECK(run(ses.s, doc.c_str(), {"check", "tilting", "DA", "1"}, &first, 7) == HK_OK);
    CHECK(run(ses.s, doc.c_str(), {"check", "tilting", "DA", "1"}, &second, 7) == HK_OK);
    CHECK(first == second);
    CHECK(first.find("\"verdict\":\"satisfied\"") != std::string::npos);
}

TEST_CASE("reports a version string") {
    std::string v = hk_version();
    CHECK(!v.empty());
}
