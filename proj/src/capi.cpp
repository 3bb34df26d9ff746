#include "homkernel/homkernel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "common.hpp"
#include "session.hpp"

struct hk_session {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

hk_session* hk_open(void) { return new (std::nothrow) hk_session(); }

void hk_close(hk_session* session) { delete session; }

const char* hk_last_error(const hk_session* session) {
    return session ? session->last_error.c_str() : "";
}

void hk_string_free(char* text) { std::free(text); }

const char* hk_version(void) { return "1.0.0"; }

int hk_run(hk_session* session, const char* input_json, int argc, const char* const* argv,
           uint64_t seed, int cap, int trials, uint32_t field, int pretty, int timing,
           char** report_json) {
    if (!session) return HK_EINVAL;
    if (report_json) *report_json = nullptr;
    if (!report_json || argc < 0 || (argc > 0 && !argv)) {
        session->last_error = "bad call: missing output slot or malformed argument vector";
        return HK_EINVAL;
    }
    try {
        std::vector<std::string> args;
        args.reserve(static_cast<size_t>(argc));
        for (int i = 0; i < argc; ++i) {
            if (!argv[i]) {
                session->last_error = "bad call: null command token";
                return HK_EINVAL;
            }
            args.emplace_back(argv[i]);
        }
        hk::SessionOptions opt;
        opt.seed = seed;
        opt.cap = cap;
        opt.trials = trials;
        opt.field_override = field;
        opt.pretty = pretty != 0;
        opt.timing = timing != 0;
        std::string report =
            hk::run_command(input_json ? std::string(input_json) : std::string(), args, opt);
        char* out = dup_string(report);
        if (!out) {
            session->last_error = "out of memory while copying the report";
            return HK_EINTERNAL;
        }
        *report_json = out;
        session->last_error.clear();
        return HK_OK;
    } catch (const hk::error& e) {
        session->last_error = e.what();
        return static_cast<int>(e.code);
    } catch (const std::exception& e) {
        session->last_error = std::string("internal: ") + e.what();
        return HK_EINTERNAL;
    } catch (...) {
        session->last_error = "internal: unidentified failure";
        return HK_EINTERNAL;
    }
}

}  // extern "C"
