#include "lie/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lie {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "md" || text == "markdown") return OutputFormat::markdown;
    throw std::invalid_argument("unknown format '" + text + "'");
}

namespace {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json to_json(const NilpotentOrbit& o) {
    json j;
    j["partition"] = to_json(o.partition);
    j["label"] = o.label ? json(to_string(*o.label)) : json(nullptr);
    return j;
}

NilpotentOrbit orbit_from_json(const json& j) {
    NilpotentOrbit o;
    o.partition = partition_from_json(j.at("partition"));
    if (!j.at("label").is_null())
        o.label = j.at("label").get<std::string>() == "I" ? OrbitLabel::I : OrbitLabel::II;
    return o;
}

json to_json(const LeviRef& levi) {
    json j;
    if (const auto* lc = std::get_if<LeviClassical>(&levi)) {
        j["blocks"] = to_json(lc->blocks);
        j["residual"] = lc->residual;
        j["label"] = lc->label ? json(to_string(*lc->label)) : json(nullptr);
    } else {
        const auto& er = std::get<ExcLeviRef>(levi);
        j["algebra"] = er.algebra.name();
        j["row"] = er.row_index;
        j["name"] = er.name;
    }
    return j;
}

LeviRef levi_from_json(const json& j) {
    if (j.contains("blocks")) {
        LeviClassical lc;
        lc.blocks = partition_from_json(j.at("blocks"));
        lc.residual = j.at("residual").get<int>();
        if (!j.at("label").is_null())
            lc.label = j.at("label").get<std::string>() == "I" ? OrbitLabel::I : OrbitLabel::II;
        return lc;
    }
    ExcLeviRef er;
    er.algebra = AlgebraId::parse(j.at("algebra").get<std::string>());
    er.row_index = j.at("row").get<int>();
    er.name = j.at("name").get<std::string>();
    return er;
}

json to_json(const Sheet& s) {
    json j;
    j["levi"] = to_json(s.levi);
    j["rigid_orbit"] = s.rigid_orbit ? to_json(*s.rigid_orbit) : json(nullptr);
    j["rigid_dim"] = s.rigid_dim;
    j["induced_orbit"] = s.induced_orbit ? to_json(*s.induced_orbit) : json(nullptr);
    j["orbit_dim"] = s.orbit_dim;
    j["center_dim"] = s.center_dim;
    j["sheet_dim"] = s.sheet_dim;
    return j;
}

Sheet sheet_from_json(const json& j) {
    Sheet s;
    s.levi = levi_from_json(j.at("levi"));
    if (!j.at("rigid_orbit").is_null()) s.rigid_orbit = orbit_from_json(j.at("rigid_orbit"));
    s.rigid_dim = j.at("rigid_dim").get<int>();
    if (!j.at("induced_orbit").is_null()) s.induced_orbit = orbit_from_json(j.at("induced_orbit"));
    s.orbit_dim = j.at("orbit_dim").get<int>();
    s.center_dim = j.at("center_dim").get<int>();
    s.sheet_dim = j.at("sheet_dim").get<int>();
    return s;
}

json to_json(const StratumReport& r) {
    json j;
    j["two_m"] = r.orbit_dim;
    j["dim_gm"] = r.dim_gm;
    j["sheet_count"] = r.sheet_count;
    json sheets = json::array();
    for (const auto& s : r.sheets) sheets.push_back(to_json(s));
    j["sheets"] = std::move(sheets);
    return j;
}

StratumReport stratum_from_json(const json& j) {
    StratumReport r;
    r.orbit_dim = j.at("two_m").get<int>();
    r.m = r.orbit_dim / 2;
    r.dim_gm = j.at("dim_gm").get<int>();
    r.sheet_count = j.at("sheet_count").get<int>();
    for (const auto& s : j.at("sheets")) r.sheets.push_back(sheet_from_json(s));
    return r;
}

std::string orbit_text(const std::optional<NilpotentOrbit>& o) {
    if (!o) return "-";
    std::string s = to_exponent_string(o->partition);
    if (o->label) s += "_" + to_string(*o->label);
    return s;
}

std::string levi_text(const LeviRef& levi) {
    if (const auto* lc = std::get_if<LeviClassical>(&levi)) {
        std::string s = "(" + (lc->blocks.empty() ? std::string("-") : to_exponent_string(lc->blocks)) +
                        ";" + std::to_string(lc->residual) + ")";
        if (lc->label) s += "_" + to_string(*lc->label);
        return s;
    }
    return std::get<ExcLeviRef>(levi).name;
}

std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows, OutputFormat fmt) {
    std::ostringstream out;
    auto join = [&](const std::vector<std::string>& cells, const char* sep, const char* lead,
                    const char* tail) {
        out << lead;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << sep;
            out << cells[i];
        }
        out << tail << '\n';
    };
    if (fmt == OutputFormat::csv) {
        join(header, ",", "", "");
        for (const auto& row : rows) join(row, ",", "", "");
    } else {
        join(header, " | ", "| ", " |");
        std::vector<std::string> rule(header.size(), "---");
        join(rule, " | ", "| ", " |");
        for (const auto& row : rows) join(row, " | ", "| ", " |");
    }
    return out.str();
}

}  // namespace

std::vector<OrbitRow> orbit_rows(const AlgebraId& alg) {
    std::vector<OrbitRow> rows;
    if (alg.classical()) {
        for (const auto& o : nilpotent_orbits(alg)) {
            OrbitRow row;
            row.orbit = o;
            if (alg.kind == AlgebraKind::A) {
                row.dim = orbit_dim_a(o.partition, alg.standard_rep_size());
                row.z = o.partition.largest() - 1;
                row.rigid = o.partition.largest() <= 1;
            } else {
                row.dim = orbit_dim_eps(o.partition, alg.epsilon());
                row.z = z_of(o.partition, alg.epsilon()).z;
                row.rigid = is_rigid(o.partition, alg.epsilon());
            }
            rows.push_back(std::move(row));
        }
    } else {
        auto rigid = exc_rigid_dims(alg);
        auto dims = orbit_dims(alg);
        for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
            OrbitRow row;
            row.dim = *it;
            row.rigid = std::count(rigid.begin(), rigid.end(), *it) > 0;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string render_orbits(const AlgebraId& alg, const std::vector<OrbitRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = alg.name();
        json arr = json::array();
        for (const auto& r : rows) {
            json j;
            j["orbit"] = r.orbit ? to_json(*r.orbit) : json(nullptr);
            j["dim"] = r.dim;
            j["z"] = r.z ? json(*r.z) : json(nullptr);
            j["rigid"] = r.rigid;
            arr.push_back(std::move(j));
        }
        doc["orbits"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({orbit_text(r.orbit), std::to_string(r.dim),
                         r.z ? std::to_string(*r.z) : "-", r.rigid ? "yes" : "no"});
    return table({"orbit", "2m", "z", "rigid"}, cells, fmt);
}

std::string render_sheets(const AlgebraId& alg, const std::vector<Sheet>& sheets, OutputFormat fmt,
                          bool trace) {
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = alg.name();
        json arr = json::array();
        for (const auto& s : sheets) {
            json j = to_json(s);
            if (trace && s.induced_orbit && alg.classical() && alg.kind != AlgebraKind::A) {
                json steps = json::array();
                for (const auto& st : z_of(s.induced_orbit->partition, alg.epsilon()).steps) {
                    json sj;
                    sj["index"] = st.index;
                    sj["case"] = std::string(1, st.case_tag);
                    sj["result"] = to_json(st.result);
                    steps.push_back(std::move(sj));
                }
                j["trace"] = std::move(steps);
            }
            arr.push_back(std::move(j));
        }
        doc["sheets"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& s : sheets) {
        std::vector<std::string> row{levi_text(s.levi),
                                     s.rigid_orbit ? orbit_text(s.rigid_orbit) : std::to_string(s.rigid_dim),
                                     orbit_text(s.induced_orbit),
                                     std::to_string(s.orbit_dim),
                                     std::to_string(s.center_dim),
                                     std::to_string(s.sheet_dim)};
        if (trace && s.induced_orbit && alg.classical() && alg.kind != AlgebraKind::A) {
            std::string tr;
            for (const auto& st : z_of(s.induced_orbit->partition, alg.epsilon()).steps) {
                if (!tr.empty()) tr += " ";
                tr += "j=" + std::to_string(st.index) + st.case_tag + "->" +
                      to_exponent_string(st.result);
            }
            row.push_back(tr.empty() ? "rigid" : tr);
        }
        cells.push_back(std::move(row));
    }
    std::vector<std::string> header{"levi", "rigid_orbit", "induced_orbit", "2m", "z(l)", "sheet_dim"};
    if (trace) header.push_back("trace");
    return table(header, cells, fmt);
}

std::string render_gm(const AlgebraId& alg, const std::vector<StratumReport>& reports,
                      OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = alg.name();
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        doc["strata"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : reports) {
        std::string parts, zs, dims;
        for (const auto& s : r.sheets) {
            if (!parts.empty()) parts += " / ", zs += " / ", dims += " / ";
            parts += s.induced_orbit ? orbit_text(s.induced_orbit) : levi_text(s.levi);
            zs += std::to_string(s.center_dim);
            dims += std::to_string(s.sheet_dim);
        }
        cells.push_back({std::to_string(r.orbit_dim), parts, zs, dims, std::to_string(r.dim_gm),
                         std::to_string(r.sheet_count)});
    }
    const char* z_col = alg.kind == AlgebraKind::A ? "d1-1" : "z";
    return table({"2m", alg.classical() ? "orbits" : "levi", z_col, "sheet_dims", "dim_gm", "sheets"},
                 cells, fmt);
}

std::string render_rigid(const AlgebraId& alg, OutputFormat fmt) {
    if (alg.classical()) {
        auto rows = rigid_orbits(alg);
        if (fmt == OutputFormat::json) {
            json doc;
            doc["algebra"] = alg.name();
            json arr = json::array();
            for (const auto& ro : rows) {
                json j;
                j["orbit"] = to_json(ro.orbit);
                j["dim"] = ro.dim;
                arr.push_back(std::move(j));
            }
            doc["rigid_orbits"] = std::move(arr);
            return doc.dump(2) + "\n";
        }
        std::vector<std::vector<std::string>> cells;
        for (const auto& ro : rows)
            cells.push_back({orbit_text(ro.orbit), std::to_string(ro.dim)});
        return table({"orbit", "dim"}, cells, fmt);
    }
    auto dims = exc_rigid_dims(alg);
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = alg.name();
        doc["rigid_dims"] = json(dims);
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (int d : dims) cells.push_back({std::to_string(d)});
    return table({"dim"}, cells, fmt);
}

std::string render_jordan(const AlgebraId& alg, const std::vector<JordanClass>& classes,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json doc;
        doc["algebra"] = alg.name();
        json arr = json::array();
        for (const auto& jc : classes) {
            json j;
            j["levi"] = to_json(LeviRef{jc.levi});
            json gl = json::array();
            for (const auto& p : jc.gl_orbits) gl.push_back(to_json(p));
            j["gl_orbits"] = std::move(gl);
            j["residual_orbit"] = jc.residual_orbit ? to_json(*jc.residual_orbit) : json(nullptr);
            j["dim"] = jc.dim;
            j["dense_in_sheet"] = jc.dense_in_sheet;
            arr.push_back(std::move(j));
        }
        doc["jordan_classes"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& jc : classes) {
        std::string gl;
        for (const auto& p : jc.gl_orbits) {
            if (!gl.empty()) gl += " ";
            gl += to_exponent_string(p);
        }
        cells.push_back({levi_text(LeviRef{jc.levi}), gl.empty() ? "-" : gl,
                         orbit_text(jc.residual_orbit), std::to_string(jc.dim),
                         jc.dense_in_sheet ? "yes" : "no"});
    }
    return table({"levi", "gl_orbits", "residual_orbit", "dim", "dense"}, cells, fmt);
}

std::string render_verify(const std::vector<verify::CheckResult>& results, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& r : results) {
            json j;
            j["id"] = r.id;
            j["title"] = r.title;
            j["passed"] = r.passed;
            j["failures"] = json(r.failures);
            j["warnings"] = json(r.warnings);
            arr.push_back(std::move(j));
        }
        json doc;
        doc["checks"] = std::move(arr);
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ": " << r.title << '\n';
        for (const auto& w : r.warnings) out << "      warning: " << w << '\n';
        for (const auto& f : r.failures) out << "      failure: " << f << '\n';
    }
    return out.str();
}

std::vector<OrbitRow> parse_orbits_json(const std::string& doc) {
    json j = json::parse(doc);
    std::vector<OrbitRow> rows;
    for (const auto& e : j.at("orbits")) {
        OrbitRow r;
        if (!e.at("orbit").is_null()) r.orbit = orbit_from_json(e.at("orbit"));
        r.dim = e.at("dim").get<int>();
        if (!e.at("z").is_null()) r.z = e.at("z").get<int>();
        r.rigid = e.at("rigid").get<bool>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Sheet> parse_sheets_json(const std::string& doc) {
    json j = json::parse(doc);
    std::vector<Sheet> out;
    for (const auto& e : j.at("sheets")) out.push_back(sheet_from_json(e));
    return out;
}

std::vector<StratumReport> parse_gm_json(const std::string& doc) {
    json j = json::parse(doc);
    std::vector<StratumReport> out;
    for (const auto& e : j.at("strata")) out.push_back(stratum_from_json(e));
    return out;
}

}  // namespace lie
