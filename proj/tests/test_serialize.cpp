#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cihomol/construct.hpp"
#include "cihomol/serialize.hpp"
#include "cihomol/suites.hpp"

using namespace cihomol;

namespace {

// minimal validator for the JSON-Schema subset the shipped schema uses:
// type, required, properties, items, enum, const, additionalProperties
bool schema_valid(const nlohmann::json& schema, const nlohmann::json& value,
                  std::string& why) {
    if (schema.contains("const") && value != schema["const"]) {
        why = "const mismatch";
        return false;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit = hit || value == e;
        if (!hit) {
            why = "enum mismatch";
            return false;
        }
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "boolean" && value.is_boolean()) ||
                  (t == "number" && value.is_number());
        if (!ok) {
            why = "type mismatch: expected " + t;
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& r : schema["required"])
            if (!value.contains(r.get<std::string>())) {
                why = "missing required field " + r.get<std::string>();
                return false;
            }
    if (value.is_object()) {
        const nlohmann::json props =
            schema.value("properties", nlohmann::json::object());
        for (const auto& [k, v] : value.items()) {
            if (props.contains(k)) {
                if (!schema_valid(props[k], v, why)) {
                    why = k + ": " + why;
                    return false;
                }
            } else if (schema.contains("additionalProperties")) {
                if (!schema_valid(schema["additionalProperties"], v, why)) {
                    why = k + ": " + why;
                    return false;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!schema_valid(schema["items"], item, why)) return false;
    return true;
}

} // namespace

TEST_CASE("module JSON round-trips byte-exactly on canonical files") {
    Ring r24(Fp(5), {2, 4});
    Module h2 = quotient_by_form_power(r24, LinearForm::variable(r24, 1), 2);
    std::string text = module_to_json(h2);
    Module back = module_from_json(text);
    CHECK(back == h2);
    CHECK(module_to_json(back) == text);

    Module k = residue_field(r24);
    std::string ktext = module_to_json(k);
    CHECK(ktext.find("\"dim\":1") != std::string::npos);
    CHECK(module_from_json(ktext).dim() == 1);
}

TEST_CASE("module files are validated on parse") {
    // non-commuting actions are rejected with the offending indices
    std::string bad = R"({"actions":[[0,1,0,0],[0,0,1,0]],"dim":2,"ring":"p=5;exps=2,2"})";
    CHECK_THROWS_WITH_AS(module_from_json(bad), doctest::Contains("0,1 do not commute"),
                         std::invalid_argument);
    std::string unreduced = R"({"actions":[[0,7,0,0],[0,0,0,0]],"dim":2,"ring":"p=5;exps=2,2"})";
    CHECK_THROWS_WITH_AS(module_from_json(unreduced), doctest::Contains("not reduced"),
                         std::invalid_argument);
    std::string short_action = R"({"actions":[[0],[0]],"dim":2,"ring":"p=5;exps=2,2"})";
    CHECK_THROWS_AS(module_from_json(short_action), std::invalid_argument);
    CHECK_THROWS_AS(module_from_json("{"), std::invalid_argument);
}

TEST_CASE("save/load through files") {
    namespace fs = std::filesystem;
    fs::path f = fs::temp_directory_path() / "cihomol-mod-test.json";
    Ring r22(Fp(3), {2, 2});
    Module m = quotient_by_form_power(r22, LinearForm::variable(r22, 0), 1);
    save_module(m, f);
    CHECK(load_module(f) == m);
    // file contents are the canonical bytes
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == module_to_json(m));
    fs::remove(f);
    CHECK_THROWS_AS(load_module(f), std::invalid_argument);
}

TEST_CASE("suite report JSON validates against the shipped schema") {
    std::ifstream in(CIHOMOL_SCHEMA_PATH);
    REQUIRE(in.good());
    nlohmann::json schema = nlohmann::json::parse(in);

    Ring r24(Fp(5), {2, 4});
    SuiteOptions opt;
    opt.max_deg = 4;
    opt.trials = 16;
    SuiteReport rep = lemma_h_suite(r24, LinearForm::variable(r24, 1), opt);
    nlohmann::json doc = nlohmann::json::parse(report_to_json(rep));
    std::string why;
    CHECK_MESSAGE(schema_valid(schema, doc, why), why);

    // a mangled report must fail validation
    nlohmann::json bad = doc;
    bad["checks"][0]["verdict"] = "maybe";
    CHECK(!schema_valid(schema, bad, why));
    nlohmann::json missing = doc;
    missing.erase("pass");
    CHECK(!schema_valid(schema, missing, why));
}

TEST_CASE("content hash is stable and collision-averse on family members") {
    Ring r24(Fp(5), {2, 4});
    auto fam = h_family(r24, LinearForm::variable(r24, 1));
    CHECK(content_hash(fam[0]).size() == 16);
    CHECK(content_hash(fam[0]) == content_hash(fam[0]));
    CHECK(content_hash(fam[0]) != content_hash(fam[1]));
}
