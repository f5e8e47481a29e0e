#include <doctest.h>

#include "signrep/presets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace signrep;

namespace {

std::string render(const RunReport& r, OutputFormat format) {
    std::ostringstream os;
    emit(r, format, os);
    return os.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

PresetOptions quick() {
    PresetOptions o;
    o.instances = 50;
    return o;
}

}  // namespace

TEST_CASE("registry") {
    const auto& names = preset_names();
    const std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == names.size());
    for (const char* n : {"dsp2", "sign2", "dspm", "degree", "general-lower", "weak", "weak-roots", "vandermonde",
                          "size-parity", "size-ip", "constructors"})
        CHECK(unique.count(n) == 1);
    CHECK_THROWS_AS(run_preset("no-such-preset"), std::invalid_argument);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("every preset names a criterion and passes") {
    for (const auto& name : preset_names()) {
        const auto r = run_preset(name, quick());
        CAPTURE(name);
        CHECK(r.criterion.rfind("AC", 0) == 0);
        CHECK_FALSE(r.cases.empty());
        CHECK(r.pass);
        for (const auto& c : r.cases) {
            CAPTURE(c.label);
            CHECK(c.pass);
            CHECK(c.error.empty());
            CHECK_FALSE(c.claim.empty());
        }
    }
}

TEST_CASE("output formats") {
    const auto r = run_preset("dsp2", quick());
    REQUIRE(r.cases.size() == 3);

    const auto j = nlohmann::json::parse(render(r, OutputFormat::Json));
    for (const char* key : {"preset", "criterion", "cases", "pass"}) CHECK(j.contains(key));
    CHECK_FALSE(j.contains("wall_time"));
    CHECK(j["cases"].size() == r.cases.size());
    CHECK(to_json(r, true).contains("wall_time"));

    const auto csv = render(r, OutputFormat::Csv);
    CHECK(line_count(csv) == r.cases.size() + 1);
    CHECK(csv.rfind("preset,case,quantity,parameters,computed,relation,expected,pass\n", 0) == 0);

    const auto table = render(r, OutputFormat::Table);
    CHECK(table.find("dsp2") != std::string::npos);
    CHECK(line_count(table) >= r.cases.size() + 1);
}

TEST_CASE("output is deterministic across runs and worker counts") {
    for (const char* name : {"dsp2", "size-parity", "vandermonde", "weak"}) {
        auto o = quick();
        const auto first = render(run_preset(name, o), OutputFormat::Json);
        CHECK(render(run_preset(name, o), OutputFormat::Json) == first);
        o.workers = 3;
        CHECK(render(run_preset(name, o), OutputFormat::Json) == first);
    }
    auto o = quick();
    const auto a = render(run_preset("vandermonde", o), OutputFormat::Csv);
    o.seed = 2;
    CHECK(render(run_preset("vandermonde", o), OutputFormat::Csv) != a);
}

TEST_CASE("a cap hit is reported, not thrown") {
    auto o = quick();
    o.subset_cap = 3;
    const auto r = run_preset("dsp2", o);
    CHECK_FALSE(r.pass);
    const bool any_error = std::any_of(r.cases.begin(), r.cases.end(), [](const PresetCase& c) { return !c.error.empty(); });
    CHECK(any_error);
}
