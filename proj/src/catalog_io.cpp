#include "nrlab/catalog_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nrlab {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

CayleyTable table_from_json(const std::filesystem::path& path, const ordered_json& j,
                            const char* key, int order) {
    if (!j.contains(key)) fail(path, std::string("missing ") + key + " table");
    const ordered_json& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
        fail(path, std::string(key) + " must be an array of " + std::to_string(order) +
                       " rows");
    std::vector<std::vector<Element>> data;
    for (const ordered_json& row : rows) {
        if (!row.is_array()) fail(path, std::string(key) + " rows must be arrays");
        std::vector<Element> r;
        for (const ordered_json& cell : row) {
            if (!cell.is_number_integer())
                fail(path, std::string(key) + " entries must be integers");
            r.push_back(cell.get<Element>());
        }
        data.push_back(std::move(r));
    }
    try {
        return CayleyTable::from_rows(data);
    } catch (const std::invalid_argument& e) {
        fail(path, std::string(key) + ": " + e.what());
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string flatten_witness(const ordered_json& witness) {
    std::string out;
    for (auto it = witness.begin(); it != witness.end(); ++it) {
        if (!out.empty()) out += ';';
        out += it.key();
        out += '=';
        if (it.value().is_string())
            out += it.value().get<std::string>();
        else
            out += it.value().dump();
    }
    return out;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json row;
    row["structure"] = v.structure;
    row["spec"] = v.spec;
    if (v.derivation) row["derivation"] = *v.derivation;
    row["status"] = to_string(v.status);
    if (v.witness) {
        ordered_json w = ordered_json::object();
        for (const auto& [name, value] : v.witness->bindings) w[name] = value;
        if (!v.witness->note.empty()) w["note"] = v.witness->note;
        row["witness"] = std::move(w);
    }
    if (v.timing_us) row["timing"] = *v.timing_us;
    return row;
}

} // namespace

StructureTables read_structure_tables(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        fail(path, e.what());
    }
    if (!j.is_object()) fail(path, "top level must be a JSON object");
    if (!j.contains("order") || !j.at("order").is_number_integer())
        fail(path, "missing integer order field");
    const int order = j.at("order").get<int>();
    if (order < 1) fail(path, "order must be positive");

    StructureTables t{"", table_from_json(path, j, "add", order),
                      table_from_json(path, j, "mul", order)};
    if (j.contains("name")) {
        if (!j.at("name").is_string()) fail(path, "name must be a string");
        t.name = j.at("name").get<std::string>();
    }
    return t;
}

NearRing read_structure(const std::filesystem::path& path) {
    StructureTables t = read_structure_tables(path);
    if (t.name.empty()) t.name = path.stem().string();
    ValidationResult r = validate_near_ring(t.add, t.mul, t.name);
    if (!r.ok()) {
        std::ostringstream os;
        os << r.violations.size() << " axiom violation(s):";
        for (const Violation& v : r.violations) os << "\n  " << to_string(v);
        fail(path, os.str());
    }
    return *std::move(r.near_ring);
}

std::string structure_to_json(const NearRing& n) {
    std::ostringstream os;
    os << "{\n";
    if (!n.name.empty()) os << "  \"name\": \"" << n.name << "\",\n";
    os << "  \"order\": " << n.order << ",\n";
    auto emit_table = [&](const char* key, const CayleyTable& t) {
        os << "  \"" << key << "\": [\n";
        for (Element r = 0; r < t.order; ++r) {
            os << "    [";
            for (Element c = 0; c < t.order; ++c) {
                if (c) os << ", ";
                os << t.at(r, c);
            }
            os << (r + 1 < t.order ? "],\n" : "]\n");
        }
        os << "  ]";
    };
    emit_table("add", n.add_table);
    os << ",\n";
    emit_table("mul", n.mul_table);
    os << "\n}\n";
    return os.str();
}

void write_structure(const NearRing& n, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open file for writing");
    out << structure_to_json(n);
    if (!out) fail(path, "write failed");
}

std::string verdict_to_jsonl(const Verdict& v) { return verdict_to_json(v).dump(); }

const char* kVerdictCsvHeader = "structure,spec,derivation,status,witness,timing";

std::string verdict_to_csv_row(const Verdict& v) {
    return jsonl_line_to_csv_row(verdict_to_jsonl(v));
}

std::vector<std::string> read_jsonl_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::vector<std::string> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            ordered_json parsed = ordered_json::parse(line);
            if (!parsed.is_object()) throw std::runtime_error("not a JSON object");
            lines.push_back(parsed.dump());
        } catch (const std::exception& e) {
            fail(path, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return lines;
}

std::string jsonl_line_to_csv_row(const std::string& line) {
    const ordered_json row = ordered_json::parse(line);
    auto field = [&](const char* key) -> std::string {
        if (!row.contains(key)) return "";
        const ordered_json& v = row.at(key);
        if (v.is_string()) return v.get<std::string>();
        if (key == std::string("witness") && v.is_object()) return flatten_witness(v);
        return v.dump();
    };
    std::string out;
    bool first = true;
    for (const char* key : {"structure", "spec", "derivation", "status", "witness", "timing"}) {
        if (!first) out += ',';
        first = false;
        out += csv_escape(field(key));
    }
    return out;
}

} // namespace nrlab
