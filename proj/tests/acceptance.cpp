#include <cstdio>
#include <cstdlib>
#include <string>

#include <centerfocus/verify.hpp>

// One line per criterion; exit status 1 if any criterion fails.
int main(int argc, char** argv) {
    std::uint64_t seed = 20240601;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    bool failed = false;
    for (const auto& c : cf::run_reference_suite(seed)) {
        const auto v = c.verdict();
        const bool ok = v != cf::Verdict::fail;
        failed = failed || !ok;
        std::printf("criterion %2d  %s  %6.2fs / %4.0fs  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.seconds, c.limit_seconds,
                    c.title.c_str(), v == cf::Verdict::logged ? "  [logged discrepancy]" : "");
        for (const auto& ch : c.checks) {
            if (ch.verdict == cf::Verdict::pass) continue;
            std::printf("      %s: expected %s, got %s (%s)\n", ch.name.c_str(), ch.expected.c_str(), ch.got.c_str(),
                        cf::to_string(ch.verdict).c_str());
        }
    }
    std::printf("%s\n", failed ? "acceptance: FAIL" : "acceptance: PASS");
    return failed ? 1 : 0;
}
