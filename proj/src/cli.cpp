#include "twistconj/cli.hpp"

#include <sstream>

#include "twistconj/errors.hpp"
#include "twistconj/reps.hpp"
#include "twistconj/textio.hpp"

namespace twistconj {

using json = nlohmann::ordered_json;

namespace {

Envelope make_envelope(const char* command, json inputs, json result, bool exact = true)
{
    Envelope e;
    e.doc = json{{"command", command},
                 {"inputs", std::move(inputs)},
                 {"result", std::move(result)},
                 {"exact", exact}};
    return e;
}

json coset_json(const std::vector<Int>& coset)
{
    json a = json::array();
    for (const Int& c : coset)
        a.push_back(c.get_str());
    return a;
}

} // namespace

Envelope cmd_classify(const std::string& element, const std::string& twist)
{
    const Group group;
    const Twist t = parse_twist(group, twist);
    const Elem e = parse_elem(element);

    ConjContext ctx(group, t);
    const ClassId id = class_id(ctx, e);
    const Elem rep = class_representative(ctx, id);
    const auto witness = are_twisted_conjugate(ctx, rep, e);
    if (!witness)
        throw std::logic_error("classify: representative not conjugate to input");

    json result{{"parity", id.parity}, {"coset", coset_json(id.coset)}};
    const auto name = class_name(ctx, id);
    result["class"] = name ? json(*name) : json(nullptr);
    result["representative"] = format_elem(rep);
    result["witness"] = format_elem(witness->g);

    return make_envelope(
        "classify",
        json{{"element", format_elem(e)}, {"twist", format_twist(group, t)}},
        std::move(result));
}

Envelope cmd_reidemeister(const std::string& twist)
{
    const Group group;
    const Twist t = parse_twist(group, twist);
    const ReidemeisterInfo info = reidemeister_info(group, t);

    json result;
    if (info.count.is_finite()) {
        result = json{{"finite", true}, {"value", info.count.value().get_str()}};
    } else {
        const char* reason = info.reason == ReidemeisterInfo::Reason::level_preserving
                                 ? "level-preserving"
                                 : "degenerate-cokernel";
        result = json{{"finite", false}, {"reason", reason}};
    }
    return make_envelope("reidemeister", json{{"twist", format_twist(group, t)}},
                         std::move(result));
}

Envelope cmd_chartable()
{
    const DualSystem ds;
    const CharacterTable table = ds.character_table();

    json values = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c)
            row.push_back(to_long(table.values.at(r, c)));
        values.push_back(std::move(row));
    }
    json reps = json::array();
    for (const Elem& e : table.representatives)
        reps.push_back(format_elem(e));

    return make_envelope("chartable", json::object(),
                         json{{"rows", table.row_names},
                              {"columns", table.col_names},
                              {"representatives", std::move(reps)},
                              {"values", std::move(values)},
                              {"determinant", to_long(table.determinant)}});
}

Envelope cmd_congruence(const std::string& matrix, long n_max)
{
    const Group group;
    const IntMat f = parse_matrix(group, matrix);
    const std::vector<CongruenceRow> rows = congruence_check(f, n_max);

    bool all_hold = true;
    json jrows = json::array();
    for (const CongruenceRow& r : rows) {
        all_hold = all_hold && r.holds;
        jrows.push_back(json{{"n", r.n}, {"lhs", r.lhs.get_str()}, {"holds", r.holds}});
    }
    Envelope e = make_envelope("congruence",
                               json{{"matrix", f.str()}, {"n_max", n_max}},
                               json{{"rows", std::move(jrows)}, {"all_hold", all_hold}});
    e.verdict_ok = all_hold;
    return e;
}

Envelope cmd_orbits(long q_max)
{
    const DualSystem ds;
    const std::vector<OrbitRep> orbits = ds.invariant_orbits(q_max);

    json jorbits = json::array();
    for (const OrbitRep& orbit : orbits) {
        json points = json::array();
        for (const TorusPoint& p : orbit.points)
            points.push_back(p.str());
        jorbits.push_back(json{{"size", orbit.size()},
                               {"points", std::move(points)},
                               {"alpha_perm", orbit.alpha_perm},
                               {"mu_perm", *orbit.mu_perm}});
    }
    return make_envelope("orbits", json{{"q_max", q_max}},
                         json{{"count", orbits.size()}, {"orbits", std::move(jorbits)}});
}

Envelope cmd_oracle(const std::string& twist, const BoxSpec& box, int jobs, std::uint64_t seed)
{
    const Group group;
    const Twist t = parse_twist(group, twist);
    const CrossReport report = cross_validate(group, t, box, jobs);
    const Partition& part = report.partition;

    json mismatches = json::array();
    for (const Mismatch& m : report.mismatches)
        mismatches.push_back(json{{"kind", m.kind},
                                  {"conjugator", format_elem(m.conjugator)},
                                  {"h", format_elem(m.h)},
                                  {"image", format_elem(m.image)},
                                  {"detail", m.detail}});

    json analytic;
    if (report.analytic_finite) {
        analytic = json{{"finite", true},
                        {"value", report.analytic.value().get_str()},
                        {"matches_blocks", report.block_count_matches}};
    } else {
        analytic = json{{"finite", false}};
    }

    json result{{"block_count", part.block_count},
                {"block_sizes", part.block_sizes},
                {"merge_events", part.merge_events},
                {"bridge_links", part.bridge_links},
                {"replay_checked", report.replay_checked},
                {"class_check",
                 json{{"supported", report.class_check_supported},
                      {"pairs_checked", report.class_pairs_checked}}},
                {"conjugacy_check",
                 json{{"checked", report.conjugacy_checked},
                      {"skipped_degenerate", report.conjugacy_skipped_degenerate}}},
                {"analytic", std::move(analytic)},
                {"mismatch_count", report.mismatch_total},
                {"mismatches", std::move(mismatches)}};

    if (!report.level_table.empty()) {
        json cells = json::array();
        for (const LevelCell& cell : report.level_table)
            cells.push_back(json{{"j", cell.j},
                                 {"class", cell.cls},
                                 {"condition", cell.condition},
                                 {"count", cell.count},
                                 {"ok", cell.ok}});
        result["level_table"] = std::move(cells);
        result["level_table_ok"] = report.level_table_ok;
    }

    Envelope e = make_envelope("oracle",
                               json{{"twist", format_twist(group, t)},
                                    {"bounds",
                                     json{{"v_bound", box.v_bound},
                                          {"n_bound", box.n_bound},
                                          {"conj_v_bound", box.conj_v_bound},
                                          {"conj_z_bound", box.conj_z_bound}}},
                                    {"jobs", jobs},
                                    {"seed", seed}},
                               std::move(result));
    e.verdict_ok = report.ok();
    return e;
}

std::string render_json(const Envelope& e)
{
    return e.doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const json& v)
{
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Flattens the envelope to key,value rows; arrays of objects become one row
// per entry. Carries exactly the information of the JSON form.
void csv_walk(const std::string& prefix, const json& v, std::ostringstream& os)
{
    if (v.is_object()) {
        for (const auto& [key, val] : v.items())
            csv_walk(prefix.empty() ? key : prefix + "." + key, val, os);
        return;
    }
    if (v.is_array()) {
        const bool scalars = std::all_of(v.begin(), v.end(),
                                         [](const json& x) { return !x.is_structured(); });
        if (scalars) {
            os << prefix;
            for (const json& x : v)
                os << "," << csv_escape(x);
            os << "\n";
            return;
        }
        std::size_t i = 0;
        for (const json& x : v)
            csv_walk(prefix + "." + std::to_string(i++), x, os);
        return;
    }
    os << prefix << "," << csv_escape(v) << "\n";
}

} // namespace

std::string render_csv(const Envelope& e)
{
    // chartable gets the natural tabular layout; everything else flattens.
    std::ostringstream os;
    if (e.doc["command"] == "chartable") {
        const json& r = e.doc["result"];
        os << "character";
        for (const auto& c : r["columns"])
            os << "," << c.get<std::string>();
        os << "\n";
        for (std::size_t i = 0; i < r["rows"].size(); ++i) {
            os << r["rows"][i].get<std::string>();
            for (const auto& x : r["values"][i])
                os << "," << x.dump();
            os << "\n";
        }
        os << "representatives";
        for (const auto& rep : r["representatives"])
            os << "," << csv_escape(rep);
        os << "\n";
        os << "determinant," << r["determinant"].dump() << "\n";
        os << "exact," << e.doc["exact"].dump() << "\n";
        return os.str();
    }
    csv_walk("", e.doc, os);
    return os.str();
}

} // namespace twistconj
