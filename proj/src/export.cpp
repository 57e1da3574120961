#include "latsurg/export.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace latsurg {

namespace {

using nlohmann::json;

std::string number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string cell_json(Cell c) { return "[" + std::to_string(c.x) + "," + std::to_string(c.y) + "]"; }

std::string sides_json(const std::array<BoundaryType, 4>& sides) {
    std::string out = "[";
    for (std::size_t s = 0; s < 4; ++s) {
        out += s ? ",\"" : "\"";
        out += boundary_char(sides[s]);
        out += '"';
    }
    return out + "]";
}

void write_report(std::ostream& out, const ResourceReport& r) {
    out << "{\"footprint\":" << r.footprint << ",\"num_steps\":" << r.num_steps << ",\"volume\":" << r.volume
        << ",\"code_distance\":" << r.code_distance << ",\"physical_qubits\":" << r.physical_qubits
        << ",\"est_execution_seconds\":" << number(r.est_execution_seconds)
        << ",\"preparation_seconds\":" << number(r.preparation_seconds) << ",\"qubit_count\":" << r.qubit_count
        << ",\"gate_count\":" << r.gate_count << ",\"t_count\":" << r.t_count << "}";
}

void write_layout(std::ostream& out, const LayoutGrid& g) {
    out << "{\"width\":" << g.width() << ",\"height\":" << g.height() << ",\"cells\":[";
    for (std::size_t i = 0; i < g.kinds().size(); ++i)
        out << (i ? ",\"" : "\"") << to_string(g.kinds()[i]) << '"';
    out << "],\"qubits\":[";
    for (std::size_t q = 0; q < g.num_qubits(); ++q)
        out << (q ? "," : "") << cell_json(g.qubit_cell(q));
    out << "],\"anchor\":" << cell_json(g.distillation_anchor()) << "}";
}

constexpr SurgeryOpKind kAllOpKinds[] = {
    SurgeryOpKind::InitAncillaPlus, SurgeryOpKind::InitAncillaZero,   SurgeryOpKind::MeasureZZ,
    SurgeryOpKind::MeasureXX,       SurgeryOpKind::MeasurePatchZ,     SurgeryOpKind::MeasurePatchX,
    SurgeryOpKind::DirectH,         SurgeryOpKind::DirectS,           SurgeryOpKind::RequestMagicState,
    SurgeryOpKind::RotatePatch,     SurgeryOpKind::TrackPauliX,       SurgeryOpKind::TrackPauliZ,
    SurgeryOpKind::ConditionalS,    SurgeryOpKind::ConditionalPauli,
};

// Field access with the JSON path in every error message.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    Reader field(const std::string& key) const {
        if (!j_.is_object())
            fail("expected an object");
        if (!j_.contains(key))
            throw ExportError(child(key) + ": missing field");
        return {j_.at(key), child(key)};
    }
    Reader item(std::size_t i) const { return {j_.at(i), path_ + "[" + std::to_string(i) + "]"}; }

    const json& array() const {
        if (!j_.is_array())
            fail("expected an array");
        return j_;
    }
    std::size_t size() const { return array().size(); }
    bool is_null() const { return j_.is_null(); }

    std::size_t count() const {
        if (!j_.is_number_unsigned())
            fail("expected a non-negative integer");
        return j_.get<std::size_t>();
    }
    long long integer() const {
        if (!j_.is_number_integer())
            fail("expected an integer");
        return j_.get<long long>();
    }
    int coordinate() const { return static_cast<int>(integer()); }
    double real() const {
        if (!j_.is_number())
            fail("expected a number");
        return j_.get<double>();
    }
    std::string text() const {
        if (!j_.is_string())
            fail("expected a string");
        return j_.get<std::string>();
    }
    Cell cell() const {
        if (size() != 2)
            fail("expected an [x, y] pair");
        return {item(0).coordinate(), item(1).coordinate()};
    }

    [[noreturn]] void fail(const std::string& what) const { throw ExportError(path_ + ": " + what); }

private:
    std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json& j_;
    std::string path_;
};

ResourceReport read_report(const Reader& r) {
    ResourceReport out;
    out.footprint = r.field("footprint").count();
    out.num_steps = r.field("num_steps").count();
    out.volume = r.field("volume").count();
    out.code_distance = r.field("code_distance").integer();
    out.physical_qubits = r.field("physical_qubits").count();
    out.est_execution_seconds = r.field("est_execution_seconds").real();
    out.preparation_seconds = r.field("preparation_seconds").real();
    out.qubit_count = r.field("qubit_count").count();
    out.gate_count = r.field("gate_count").count();
    out.t_count = r.field("t_count").count();
    return out;
}

LayoutGrid read_layout(const Reader& r) {
    const auto width = r.field("width").count();
    const auto height = r.field("height").count();
    const auto cells = r.field("cells");
    if (cells.size() != width * height)
        cells.fail("expected width * height entries");
    std::vector<CellKind> kinds;
    kinds.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto kind = cell_kind_from_string(cells.item(i).text());
        if (!kind)
            cells.item(i).fail("unknown cell kind");
        kinds.push_back(*kind);
    }
    const auto qubits = r.field("qubits");
    std::vector<Cell> qubit_cells;
    for (std::size_t q = 0; q < qubits.size(); ++q)
        qubit_cells.push_back(qubits.item(q).cell());
    try {
        return LayoutGrid(width, height, std::move(kinds), std::move(qubit_cells), r.field("anchor").cell());
    } catch (const LayoutError& e) {
        r.fail(e.what());
    }
}

}  // namespace

std::string report_to_json(const ResourceReport& report) {
    std::ostringstream out;
    write_report(out, report);
    return out.str();
}

std::string layout_to_json(const LayoutGrid& layout) {
    std::ostringstream out;
    write_layout(out, layout);
    return out.str();
}

std::string layout_to_ascii(const LayoutGrid& layout) {
    std::string out;
    for (std::size_t y = 0; y < layout.height(); ++y) {
        for (std::size_t x = 0; x < layout.width(); ++x) {
            const Cell c{static_cast<int>(x), static_cast<int>(y)};
            char ch = '.';
            switch (layout.kind(c)) {
                case CellKind::Data: ch = 'Q'; break;
                case CellKind::AncillaRoute: ch = '+'; break;
                case CellKind::Distillation: ch = c == layout.distillation_anchor() ? '*' : 'M'; break;
                case CellKind::Unused: ch = '.'; break;
            }
            out += ch;
        }
        out += '\n';
    }
    return out;
}

void write_assembly(std::ostream& out, const Assembly& a, const ResourceReport& report) {
    out << "{\"version\":" << kAssemblyFormatVersion << ",\n\"dims\":[" << a.layout.width() << ","
        << a.layout.height() << "," << a.num_steps << "],\n\"distance\":" << report.code_distance
        << ",\n\"cells\":[";
    for (std::size_t i = 0; i < a.cuboids.size(); ++i) {
        const auto& c = a.cuboids[i];
        out << (i ? ",\n" : "\n") << "{\"x\":" << c.x << ",\"y\":" << c.y << ",\"t\":" << c.t << ",\"kind\":\""
            << to_string(c.kind) << "\",\"op\":";
        if (c.op)
            out << *c.op;
        else
            out << "null";
        out << ",\"sides\":" << (c.sides ? sides_json(*c.sides) : "null") << "}";
    }
    out << "],\n\"report\":";
    write_report(out, report);
    out << ",\n\"layout\":";
    write_layout(out, a.layout);
    out << ",\n\"schedule\":[";
    for (std::size_t i = 0; i < a.schedule.size(); ++i) {
        const auto& s = a.schedule[i];
        out << (i ? ",\n" : "\n") << "{\"instruction\":" << s.instruction << ",\"kind\":\"" << to_string(s.kind)
            << "\",\"start\":" << s.start << ",\"duration\":" << s.duration
            << ",\"patch\":" << (s.patch ? cell_json(*s.patch) : "null") << ",\"route\":[";
        for (std::size_t k = 0; k < s.route.size(); ++k)
            out << (k ? "," : "") << cell_json(s.route[k]);
        out << "]}";
    }
    out << "],\n\"distillations\":[";
    for (std::size_t i = 0; i < a.distillations.size(); ++i) {
        const auto& d = a.distillations[i];
        out << (i ? "," : "") << "{\"request\":" << d.request << ",\"start\":" << d.start
            << ",\"duration\":" << d.duration << "}";
    }
    out << "]}\n";
}

std::string assembly_to_string(const Assembly& assembly, const ResourceReport& report) {
    std::ostringstream out;
    write_assembly(out, assembly, report);
    return out.str();
}

void export_assembly(const Assembly& assembly, const ResourceReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ExportError(path.string() + ": cannot open for writing");
    write_assembly(out, assembly, report);
    out.flush();
    if (!out)
        throw ExportError(path.string() + ": write failed");
}

AssemblyDocument read_assembly(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ExportError(std::string("malformed JSON: ") + e.what());
    }
    const Reader root(j, "");
    if (root.field("version").integer() != kAssemblyFormatVersion)
        root.field("version").fail("unsupported version");

    AssemblyDocument doc;
    doc.report = read_report(root.field("report"));
    if (root.field("distance").integer() != doc.report.code_distance)
        root.field("distance").fail("differs from report.code_distance");

    auto& a = doc.assembly;
    a.layout = read_layout(root.field("layout"));
    const auto dims = root.field("dims");
    if (dims.size() != 3 || dims.item(0).count() != a.layout.width() || dims.item(1).count() != a.layout.height())
        dims.fail("does not match the layout");
    a.num_steps = dims.item(2).count();

    const auto cells = root.field("cells");
    const auto footprint = a.layout.footprint();
    if (cells.size() != footprint * a.num_steps)
        cells.fail("expected width * height * steps records");
    a.cuboids.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto rec = cells.item(i);
        auto& c = a.cuboids[i];
        c.x = rec.field("x").coordinate();
        c.y = rec.field("y").coordinate();
        c.t = rec.field("t").count();
        const Cell expected = a.layout.cell_at(i % footprint);
        if (c.x != expected.x || c.y != expected.y || c.t != i / footprint)
            rec.fail("records must cover every cell in (t, y, x) order");
        const auto kind = cuboid_kind_from_string(rec.field("kind").text());
        if (!kind)
            rec.field("kind").fail("unknown cuboid kind");
        c.kind = *kind;
        if (const auto op = rec.field("op"); !op.is_null())
            c.op = op.count();
        if (const auto sides = rec.field("sides"); !sides.is_null()) {
            if (sides.size() != 4)
                sides.fail("expected 4 entries");
            std::array<BoundaryType, 4> s{};
            for (std::size_t k = 0; k < 4; ++k) {
                const auto t = sides.item(k).text();
                if (t != "X" && t != "Z")
                    sides.item(k).fail("expected \"X\" or \"Z\"");
                s[k] = t == "X" ? BoundaryType::X : BoundaryType::Z;
            }
            c.sides = s;
        }
    }

    const auto sched = root.field("schedule");
    for (std::size_t i = 0; i < sched.size(); ++i) {
        const auto rec = sched.item(i);
        ScheduledOp s;
        s.instruction = rec.field("instruction").count();
        const auto kind_text = rec.field("kind").text();
        bool known = false;
        for (const auto k : kAllOpKinds) {
            if (to_string(k) == kind_text) {
                s.kind = k;
                known = true;
            }
        }
        if (!known)
            rec.field("kind").fail("unknown instruction kind");
        s.start = rec.field("start").count();
        s.duration = rec.field("duration").count();
        if (const auto patch = rec.field("patch"); !patch.is_null())
            s.patch = patch.cell();
        const auto route = rec.field("route");
        for (std::size_t k = 0; k < route.size(); ++k)
            s.route.push_back(route.item(k).cell());
        a.schedule.push_back(std::move(s));
    }

    const auto dist = root.field("distillations");
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const auto rec = dist.item(i);
        a.distillations.push_back(
            {rec.field("request").count(), rec.field("start").count(), rec.field("duration").count()});
    }
    return doc;
}

AssemblyDocument import_assembly(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ExportError(path.string() + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return read_assembly(buf.str());
    } catch (const ExportError& e) {
        throw ExportError(path.string() + ": " + e.what());
    }
}

}  // namespace latsurg
