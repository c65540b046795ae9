#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kpd/random.hpp"
#include "kpd/suite.hpp"

using namespace kpd;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

std::string run(SuiteConfig c, int* code = nullptr) {
    std::ostringstream out;
    const int rc = run_suite(c, out);
    if (code) *code = rc;
    return out.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("kpd-test-" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("instance seeds") {
    CHECK(instance_seed(42, "hp/rat", 0) == instance_seed(42, "hp/rat", 0));
    CHECK(instance_seed(42, "hp/rat", 0) != instance_seed(42, "hp/rat", 1));
    CHECK(instance_seed(42, "hp/rat", 0) != instance_seed(42, "hp/gf:7", 0));
    CHECK(instance_seed(42, "hp/rat", 0) != instance_seed(43, "hp/rat", 0));
    Generator a(rat(), 9), b(rat(), 9);
    for (int t = 0; t < 20; ++t) CHECK(a.square(3) == b.square(3));
}

TEST_CASE("suite output is deterministic and independent of job count") {
    SuiteConfig c;
    c.suite_id = "all";
    c.seed = 7;
    c.trials = 20;
    c.artifacts = scratch("det").string();
    const std::string once = run(c);
    CHECK(once == run(c));
    c.jobs = 4;
    CHECK(once == run(c));
    c.seed = 8;
    CHECK(once != run(c));
}

TEST_CASE("configuration errors") {
    SuiteConfig c;
    c.suite_id = "nope";
    CHECK_ERRC(run(c), Errc::invalid_argument);
    c.suite_id = "monequiv";
    c.field = gf(7);
    CHECK_ERRC(run(c), Errc::unsupported_field);
    c.suite_id = "exp";
    c.field = rat();
    CHECK_ERRC(run(c), Errc::unsupported_field);
}

TEST_CASE("every suite id runs clean on its default fields") {
    for (const auto& id : suite_ids()) {
        if (id == "false-completion") continue;
        SuiteConfig c;
        c.suite_id = id;
        c.trials = 10;
        c.seed = 3;
        c.artifacts = scratch("ids").string();
        int code = -1;
        const std::string out = run(c, &code);
        CHECK_MESSAGE(code == 0, id);
        CHECK(out.find(" FAIL ") == std::string::npos);
        CHECK(out.find("# total:") != std::string::npos);
    }
}

TEST_CASE("a failing control writes a replay that reproduces") {
    SuiteConfig c;
    c.suite_id = "false-completion";
    c.trials = 30;
    c.seed = 5;
    const fs::path dir = scratch("replay");
    c.artifacts = dir.string();
    int code = -1;
    const std::string out = run(c, &code);
    CHECK(code == 1);
    REQUIRE(out.find(" FAIL ") != std::string::npos);
    REQUIRE(fs::exists(dir));

    std::size_t replays = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++replays;
        REQUIRE(fs::exists(entry.path() / "report.txt"));
        std::ostringstream again;
        CHECK(replay(entry.path().string(), again) == 1);
        CHECK(again.str().find(" FAIL ") != std::string::npos);
        // The replay line names the same directory as the original run.
        CHECK(out.find(entry.path().string()) != std::string::npos);
    }
    CHECK(replays > 0);
    fs::remove_all(dir);
}

TEST_CASE("replay of a damaged directory is an input error") {
    const fs::path dir = scratch("damaged");
    fs::create_directories(dir);
    std::ofstream(dir / "report.txt") << "law nonsense\n";
    std::ostringstream out;
    CHECK_THROWS_AS(replay(dir.string(), out), Error);
    CHECK_THROWS_AS(replay((dir / "missing").string(), out), Error);
    fs::remove_all(dir);
}
