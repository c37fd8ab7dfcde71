// Acceptance suite runner: one pass/fail line per criterion, exact arithmetic.
#include <cstdio>

#include "bisetkit/acceptance.hpp"
#include "bisetkit/context.hpp"

int main() {
    bisetkit::Options opts;
    opts.use_cache = false;
    bisetkit::Context ctx(opts);
    auto results = bisetkit::run_acceptance(ctx);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("criterion %2d [%s] %s (%.1fs)%s%s\n", r.number, r.pass ? "pass" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : " — ", r.detail.c_str());
        std::fflush(stdout);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
