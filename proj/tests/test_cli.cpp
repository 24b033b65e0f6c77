#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <regex>
#include <cstdlib>
#include <sstream>

#include "twistconj/cli.hpp"
#include "twistconj/errors.hpp"
#include "twistconj/reid.hpp"
#include "twistconj/textio.hpp"

using namespace twistconj;
using json = nlohmann::json;

namespace {

// Validator for the subset of JSON Schema the published schema uses:
// type, const, enum, pattern, properties/required/additionalProperties,
// items, oneOf.
bool schema_validate(const json& schema, const json& v, std::string& err)
{
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const json& sub : schema["oneOf"]) {
            std::string sub_err;
            if (schema_validate(sub, v, sub_err))
                ++hits;
        }
        if (hits != 1) {
            err = "oneOf matched " + std::to_string(hits) + " branches";
            return false;
        }
        return true;
    }
    if (schema.contains("const")) {
        if (v != schema["const"]) {
            err = "const mismatch at " + v.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const json& e : schema["enum"])
            if (v == e)
                found = true;
        if (!found) {
            err = "enum mismatch at " + v.dump();
            return false;
        }
    }
    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object")
                return v.is_object();
            if (t == "array")
                return v.is_array();
            if (t == "string")
                return v.is_string();
            if (t == "integer")
                return v.is_number_integer();
            if (t == "number")
                return v.is_number();
            if (t == "boolean")
                return v.is_boolean();
            if (t == "null")
                return v.is_null();
            return false;
        };
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = matches(t.get<std::string>());
        else
            for (const json& alt : t)
                ok = ok || matches(alt.get<std::string>());
        if (!ok) {
            err = "type mismatch at " + v.dump();
            return false;
        }
    }
    if (schema.contains("pattern") && v.is_string()) {
        const std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(v.get<std::string>(), re)) {
            err = "pattern mismatch at " + v.dump();
            return false;
        }
    }
    if (v.is_object() && schema.contains("properties")) {
        const json& props = schema["properties"];
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!v.contains(key.get<std::string>())) {
                    err = "missing required key " + key.dump();
                    return false;
                }
        const bool closed =
            schema.contains("additionalProperties") && schema["additionalProperties"] == false;
        for (const auto& [key, val] : v.items()) {
            if (!props.contains(key)) {
                if (closed) {
                    err = "unexpected key " + key;
                    return false;
                }
                continue;
            }
            if (!schema_validate(props[key], val, err))
                return false;
        }
    }
    if (v.is_array() && schema.contains("items")) {
        for (const json& item : v)
            if (!schema_validate(schema["items"], item, err))
                return false;
    }
    return true;
}

json published_schema()
{
    std::ifstream in(TWISTCONJ_SOURCE_DIR "/docs/output-schema.json");
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

void check_schema(const Envelope& e)
{
    std::string err;
    const json parsed = json::parse(render_json(e));
    const bool ok = schema_validate(published_schema(), parsed, err);
    INFO(err, " in ", parsed.dump(2));
    CHECK(ok);
}

} // namespace

TEST_CASE("classify command")
{
    const Envelope b1 = cmd_classify("((0,0),0)", "phi");
    CHECK(b1.doc["result"]["class"] == "B1");
    CHECK(b1.verdict_ok);
    check_schema(b1);

    const Envelope b4 = cmd_classify("((1,0),1)", "phi");
    CHECK(b4.doc["result"]["class"] == "B4");
    CHECK(b4.doc["result"]["parity"] == 1);
    check_schema(b4);

    SUBCASE("representative and witness replay through the group operations")
    {
        const Group g;
        for (const char* text : {"((0,0),0)", "((3,-2),5)", "((-7,4),-6)", "((0,1),2)"}) {
            const Envelope e = cmd_classify(text, "phi");
            const Elem elem = parse_elem(text);
            const Elem rep = parse_elem(e.doc["result"]["representative"].get<std::string>());
            const Elem w = parse_elem(e.doc["result"]["witness"].get<std::string>());
            CHECK(g.twisted_conj(w, rep, g.phi()) == elem);
        }
    }
    SUBCASE("parse errors name the position")
    {
        CHECK_THROWS_AS(cmd_classify("((1),2)", "phi"), ParseError);
        try {
            cmd_classify("((1),2)", "phi");
        } catch (const ParseError& e) {
            CHECK(e.position == 3);
            CHECK(std::string(e.what()).find("position 3") != std::string::npos);
        }
    }
    SUBCASE("unsupported twists propagate")
    {
        CHECK_THROWS_AS(cmd_classify("((0,0),0)", "phi^2"), UnsupportedTwistError);
    }
}

TEST_CASE("reidemeister command")
{
    const Envelope four = cmd_reidemeister("phi");
    CHECK(four.doc["result"]["finite"] == true);
    CHECK(four.doc["result"]["value"] == "4");
    check_schema(four);

    const Envelope inf = cmd_reidemeister("phi^2");
    CHECK(inf.doc["result"]["finite"] == false);
    CHECK(inf.doc["result"]["reason"] == "level-preserving");
    check_schema(inf);

    const Envelope degen = cmd_reidemeister("M=[[-1,0],[1,1]];eps=-1");
    CHECK(degen.doc["result"]["finite"] == false);
    CHECK(degen.doc["result"]["reason"] == "degenerate-cokernel");
    check_schema(degen);
}

TEST_CASE("chartable command")
{
    const Envelope e = cmd_chartable();
    check_schema(e);
    CHECK(e.doc["result"]["determinant"] == -16);
    CHECK(e.doc["result"]["values"] ==
          json::parse("[[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]]"));
    CHECK(e.doc["exact"] == true);

    SUBCASE("CSV carries the same table")
    {
        const std::string csv = render_csv(e);
        CHECK(csv.find("character,B1,B2,B3,B4\n") != std::string::npos);
        CHECK(csv.find("rho1,1,1,1,1\n") != std::string::npos);
        CHECK(csv.find("pi,1,1,-1,-1\n") != std::string::npos);
        CHECK(csv.find("rho2,1,-1,1,-1\n") != std::string::npos);
        CHECK(csv.find("rho2_tensor_pi,1,-1,-1,1\n") != std::string::npos);
        CHECK(csv.find("determinant,-16\n") != std::string::npos);
    }
}

TEST_CASE("congruence command")
{
    const Envelope e = cmd_congruence("A", 12);
    check_schema(e);
    CHECK(e.doc["result"]["all_hold"] == true);
    CHECK(e.verdict_ok);
    CHECK(e.doc["result"]["rows"].size() == 12);
    CHECK(e.doc["result"]["rows"][1]["lhs"] == "4");
    CHECK(e.doc["result"]["rows"][2]["lhs"] == "15");

    CHECK(cmd_congruence("A^2", 10).doc["result"]["all_hold"] == true);
    CHECK(cmd_congruence("-A", 10).doc["result"]["all_hold"] == true);
    // order-4 rotation: powers 1..3 are nondegenerate, power 4 is not
    CHECK(cmd_congruence("[[0,-1],[1,0]]", 3).doc["result"]["all_hold"] == true);

    SUBCASE("degenerate powers are reported with the failing exponent")
    {
        try {
            cmd_congruence("[[1,0],[0,1]]", 4);
            FAIL("expected InfiniteReidemeisterError");
        } catch (const InfiniteReidemeisterError& err) {
            CHECK(err.power == 1);
        }
    }
}

TEST_CASE("orbits command")
{
    const Envelope e = cmd_orbits(2);
    check_schema(e);
    CHECK(e.doc["result"]["count"] == 2);
    CHECK(e.doc["result"]["orbits"][0]["points"] == json::array({"(0,0)"}));
    CHECK(e.doc["result"]["orbits"][1]["points"] ==
          json::array({"(0,1/2)", "(1/2,0)", "(1/2,1/2)"}));
    CHECK(e.doc["result"]["orbits"][1]["mu_perm"] == json::array({1, 0, 2}));
}

TEST_CASE("oracle command")
{
    const BoxSpec box{4, 2, 6, 2};
    const Envelope e = cmd_oracle("phi", box, 1, 12345);
    check_schema(e);
    CHECK(e.verdict_ok);
    CHECK(e.doc["result"]["block_count"] == 4);
    CHECK(e.doc["result"]["mismatch_count"] == 0);
    CHECK(e.doc["result"]["analytic"]["matches_blocks"] == true);
    CHECK(e.doc["result"]["level_table_ok"] == true);

    SUBCASE("level-preserving twists skip the class comparison")
    {
        const Envelope p2 = cmd_oracle("phi^2", BoxSpec{3, 1, 4, 1}, 1, 12345);
        check_schema(p2);
        CHECK(p2.doc["result"]["class_check"]["supported"] == false);
        CHECK(p2.doc["result"]["analytic"]["finite"] == false);
        CHECK(!p2.doc["result"].contains("level_table"));
    }
}

TEST_CASE("output is deterministic and formats carry identical information")
{
    const Envelope a = cmd_classify("((3,5),-2)", "phi");
    const Envelope b = cmd_classify("((3,5),-2)", "phi");
    CHECK(render_json(a) == render_json(b));
    CHECK(render_csv(a) == render_csv(b));

    const Envelope o1 = cmd_oracle("phi", BoxSpec{3, 1, 4, 1}, 1, 1);
    const Envelope o2 = cmd_oracle("phi", BoxSpec{3, 1, 4, 1}, 2, 1);
    // jobs is echoed in inputs but the result payload is identical
    CHECK(o1.doc["result"] == o2.doc["result"]);

    SUBCASE("CSV flattening covers every JSON leaf")
    {
        const std::string csv = render_csv(a);
        CHECK(csv.find("command,classify\n") != std::string::npos);
        const std::string cls = a.doc["result"]["class"].get<std::string>();
        CHECK(csv.find("result.class," + cls) != std::string::npos);
        CHECK(csv.find("result.parity,") != std::string::npos);
        CHECK(csv.find("exact,true\n") != std::string::npos);
    }
}

TEST_CASE("process exit codes")
{
    auto run = [](const std::string& args) {
        const std::string cmd = std::string(TWISTCONJ_BIN) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run("reidemeister phi") == 0);
    CHECK(run("classify \"((0,0),0)\" phi --format csv") == 0);
    CHECK(run("congruence A 8") == 0);
    CHECK(run("classify \"((1),2)\"") == 2);      // parse error
    CHECK(run("classify \"((0,0),0)\" phi^2") == 2); // unsupported twist
    CHECK(run("bogus-subcommand") != 0);
}

TEST_CASE("every command's JSON validates against the published schema")
{
    // collected here so a schema edit cannot silently skip a command
    check_schema(cmd_classify("((2,-1),3)", "phi"));
    check_schema(cmd_reidemeister("M=[[0,-2],[2,0]];eps=-1"));
    check_schema(cmd_chartable());
    check_schema(cmd_congruence("A", 5));
    check_schema(cmd_orbits(3));
    check_schema(cmd_oracle("phi", BoxSpec{2, 1, 3, 1}, 1, 7));
    check_schema(cmd_oracle("M=[[1,0],[0,1]];eps=+1", BoxSpec{2, 1, 2, 1}, 1, 7));
}
