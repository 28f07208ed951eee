#include "persista/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace persista {
namespace io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

double parse_number(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError(where + ": not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw ParseError(where + ": not a finite number: '" + s + "'");
    return v;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    struct NodeDecl {
        long id;
        std::string label;
        int line;
    };
    std::vector<NodeDecl> nodes;
    struct EdgeDecl {
        std::string a, b;
        double w;
        int line;
    };
    std::vector<EdgeDecl> edge_decls;

    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (toks[0] == "node") {
            if (toks.size() != 3) throw ParseError(where + ": expected 'node <id> <label>'");
            long id = static_cast<long>(parse_number(toks[1], where));
            nodes.push_back({id, toks[2], lineno});
        } else if (toks[0] == "edge") {
            if (toks.size() != 4)
                throw ParseError(where + ": expected 'edge <label_a> <label_b> <weight>'");
            edge_decls.push_back({toks[1], toks[2], parse_number(toks[3], where), lineno});
        } else {
            throw ParseError(where + ": unknown directive '" + toks[0] + "'");
        }
    }

    std::sort(nodes.begin(), nodes.end(),
              [](const NodeDecl& a, const NodeDecl& b) { return a.id < b.id; });
    WeightedGraph g;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        if (n.id != static_cast<long>(i))
            throw ParseError("line " + std::to_string(n.line) + ": node ids must be dense 0.." +
                             std::to_string(nodes.size() - 1) + " (got " +
                             std::to_string(n.id) + ")");
        if (g.has_node(n.label))
            throw ParseError("line " + std::to_string(n.line) + ": duplicate label '" +
                             n.label + "'");
        g.add_node(n.label);
    }
    for (const auto& e : edge_decls) {
        const std::string where = "line " + std::to_string(e.line);
        if (!g.has_node(e.a)) throw ParseError(where + ": edge references undeclared node '" + e.a + "'");
        if (!g.has_node(e.b)) throw ParseError(where + ": edge references undeclared node '" + e.b + "'");
        try {
            g.add_edge(e.a, e.b, e.w);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(where + ": " + ex.what());
        }
    }
    return g;
}

std::string write_graph(const WeightedGraph& g) {
    std::ostringstream os;
    for (VertexId v = 0; v < g.node_count(); ++v)
        os << "node " << v << ' ' << g.label(v) << '\n';
    for (const auto& e : g.edges())
        os << "edge " << g.label(e.a) << ' ' << g.label(e.b) << ' '
           << ordered_json(e.weight).dump() << '\n';
    return os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') quoted = false;
            else field.push_back(c);
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? static_cast<std::size_t>(-1)
                              : static_cast<std::size_t>(it - header.begin());
}

}  // namespace

PointsData parse_points(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty file: missing CSV header");
    auto header = split_csv(line);

    std::size_t ci = column_index(header, "id");
    std::size_t cl = column_index(header, "label");
    if (ci == static_cast<std::size_t>(-1)) throw ParseError("header: missing column 'id'");
    if (cl == static_cast<std::size_t>(-1)) throw ParseError("header: missing column 'label'");
    std::size_t cx = column_index(header, "x"), cy = column_index(header, "y");
    std::size_t clat = column_index(header, "lat"), clon = column_index(header, "lon");
    bool planar = cx != static_cast<std::size_t>(-1) && cy != static_cast<std::size_t>(-1);
    bool geo = clat != static_cast<std::size_t>(-1) && clon != static_cast<std::size_t>(-1);
    if (planar == geo)
        throw ParseError("header: need either columns 'x,y' or 'lat,lon'");
    std::size_t cv = column_index(header, "vote");

    auto kind = planar ? CoordinateKind::Planar : CoordinateKind::Geographic;
    PointsData out;
    out.all = PointCloud(kind);
    out.leave = PointCloud(kind);
    out.remain = PointCloud(kind);
    out.has_vote = cv != static_cast<std::size_t>(-1);

    int row = 1;
    long expected_id = 0;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv(line);
        const std::string where = "row " + std::to_string(row);
        if (fields.size() != header.size())
            throw ParseError(where + ": expected " + std::to_string(header.size()) +
                             " fields, got " + std::to_string(fields.size()));
        long id = static_cast<long>(parse_number(fields[ci], where));
        if (id != expected_id++)
            throw ParseError(where + ": ids must be dense in order (expected " +
                             std::to_string(expected_id - 1) + ", got " + std::to_string(id) + ")");
        double c0 = parse_number(fields[planar ? cx : clat], where);
        double c1 = parse_number(fields[planar ? cy : clon], where);
        try {
            out.all.add_point(c0, c1, fields[cl]);
            if (out.has_vote) {
                const std::string& vote = fields[cv];
                if (vote == "leave")
                    out.leave.add_point(c0, c1, fields[cl]);
                else if (vote == "remain")
                    out.remain.add_point(c0, c1, fields[cl]);
                else
                    throw ParseError(where + ": vote must be leave|remain, got '" + vote + "'");
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(where + ": " + ex.what());
        }
    }
    return out;
}

BarcodeDocument make_document(const Barcode& b, const std::string& value_kind,
                              const ReducedBoundaryMatrix* reduction,
                              const FilteredComplex* complex) {
    BarcodeDocument doc;
    doc.max_dim = b.max_dim;
    doc.value_kind = value_kind;
    for (int d = 0; d <= b.max_dim; ++d) {
        for (const Bar& bar : b.bars[d]) {
            BarRecord rec;
            rec.dim = d;
            rec.birth = bar.birth;
            if (bar.finite()) rec.death = bar.death;
            if (reduction && complex) {
                auto it = std::find_if(reduction->pairs.begin(), reduction->pairs.end(),
                                       [&](const PersistencePair& p) {
                                           return p.birth_pos == bar.birth_pos;
                                       });
                if (it != reduction->pairs.end()) {
                    Representative rep = representative(*reduction, *it);
                    std::vector<std::vector<VertexId>> tuples;
                    for (std::size_t pos : rep.chain)
                        tuples.push_back(complex->cell(pos).simplex.vertices);
                    std::sort(tuples.begin(), tuples.end());
                    rec.representative = std::move(tuples);
                }
            }
            doc.bars.push_back(std::move(rec));
        }
    }
    std::stable_sort(doc.bars.begin(), doc.bars.end(),
                     [](const BarRecord& a, const BarRecord& b2) {
                         if (a.dim != b2.dim) return a.dim < b2.dim;
                         if (a.birth != b2.birth) return a.birth < b2.birth;
                         if (a.death.has_value() != b2.death.has_value())
                             return a.death.has_value();  // null (infinite) last
                         if (a.death && b2.death && *a.death != *b2.death)
                             return *a.death < *b2.death;
                         return false;
                     });
    return doc;
}

std::string write_barcode(const BarcodeDocument& doc) {
    ordered_json j;
    j["max_dim"] = doc.max_dim;
    j["value_kind"] = doc.value_kind;
    j["bars"] = ordered_json::array();
    for (const BarRecord& b : doc.bars) {
        ordered_json jb;
        jb["dim"] = b.dim;
        jb["birth"] = b.birth;
        jb["death"] = b.death ? ordered_json(*b.death) : ordered_json(nullptr);
        jb["representative"] =
            b.representative ? ordered_json(*b.representative) : ordered_json(nullptr);
        j["bars"].push_back(std::move(jb));
    }
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw ParseError("schema violation at " + path + ": " + what);
}

}  // namespace

BarcodeDocument read_barcode(std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object()) schema_error("/", "expected object");
    if (!j.contains("max_dim") || !j["max_dim"].is_number_integer())
        schema_error("/max_dim", "expected integer");
    if (!j.contains("value_kind") || !j["value_kind"].is_string())
        schema_error("/value_kind", "expected string");
    if (!j.contains("bars") || !j["bars"].is_array()) schema_error("/bars", "expected array");

    BarcodeDocument doc;
    doc.max_dim = j["max_dim"].get<int>();
    doc.value_kind = j["value_kind"].get<std::string>();
    if (doc.value_kind != "year" && doc.value_kind != "distance_km" &&
        doc.value_kind != "euclidean")
        schema_error("/value_kind", "must be year|distance_km|euclidean");

    for (std::size_t i = 0; i < j["bars"].size(); ++i) {
        const auto& jb = j["bars"][i];
        const std::string path = "/bars/" + std::to_string(i);
        if (!jb.is_object()) schema_error(path, "expected object");
        if (!jb.contains("dim") || !jb["dim"].is_number_integer())
            schema_error(path + "/dim", "expected integer");
        if (!jb.contains("birth") || !jb["birth"].is_number())
            schema_error(path + "/birth", "expected number");
        if (!jb.contains("death") || !(jb["death"].is_number() || jb["death"].is_null()))
            schema_error(path + "/death", "expected number or null");
        BarRecord rec;
        rec.dim = jb["dim"].get<int>();
        if (rec.dim < 0 || rec.dim > doc.max_dim)
            schema_error(path + "/dim", "out of range 0..max_dim");
        rec.birth = jb["birth"].get<double>();
        if (!jb["death"].is_null()) {
            rec.death = jb["death"].get<double>();
        }
        if (jb.contains("representative") && !jb["representative"].is_null()) {
            if (!jb["representative"].is_array())
                schema_error(path + "/representative", "expected array or null");
            std::vector<std::vector<VertexId>> tuples;
            for (std::size_t k = 0; k < jb["representative"].size(); ++k) {
                const auto& jt = jb["representative"][k];
                if (!jt.is_array())
                    schema_error(path + "/representative/" + std::to_string(k),
                                 "expected array of vertex ids");
                std::vector<VertexId> tuple;
                for (const auto& v : jt) {
                    if (!v.is_number_integer())
                        schema_error(path + "/representative/" + std::to_string(k),
                                     "expected integer vertex id");
                    tuple.push_back(v.get<VertexId>());
                }
                tuples.push_back(std::move(tuple));
            }
            rec.representative = std::move(tuples);
        }
        doc.bars.push_back(std::move(rec));
    }
    return doc;
}

std::string write_barcode_csv(const BarcodeDocument& doc) {
    std::ostringstream os;
    os << "dim,birth,death\n";
    for (const BarRecord& b : doc.bars) {
        os << b.dim << ',' << ordered_json(b.birth).dump() << ',';
        if (b.death) os << ordered_json(*b.death).dump();
        os << '\n';
    }
    return os.str();
}

namespace {

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string axis_label(double v) {
    return ordered_json(v).dump();
}

}  // namespace

std::string render_barcode_svg(const BarcodeDocument& doc, const SvgOptions& opt) {
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    for (const BarRecord& b : doc.bars) {
        vmin = std::min(vmin, b.birth);
        vmax = std::max(vmax, b.birth);
        if (b.death) {
            vmin = std::min(vmin, *b.death);
            vmax = std::max(vmax, *b.death);
        }
    }
    if (doc.bars.empty()) {
        vmin = 0.0;
        vmax = 1.0;
    }
    if (vmin == vmax) {
        vmin -= 0.5;
        vmax += 0.5;
    }

    const double x0 = opt.margin;
    const double x1 = opt.width - opt.margin;
    auto xpos = [&](double v) { return x0 + (v - vmin) / (vmax - vmin) * (x1 - x0); };

    const int header_h = 20;
    const int total_rows = static_cast<int>(doc.bars.size());
    const int groups = doc.max_dim + 1;
    const int axis_y =
        opt.margin / 2 + groups * header_h + total_rows * opt.row_height + opt.row_height;
    const int height = axis_y + 40;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << opt.width << ' ' << height
       << "\">\n";

    int y = opt.margin / 2;
    for (int d = 0; d <= doc.max_dim; ++d) {
        os << "  <g class=\"dim\" data-dim=\"" << d << "\">\n";
        os << "    <text x=\"" << opt.margin / 4 << "\" y=\"" << y + header_h - 6
           << "\" font-size=\"12\">dim " << d << "</text>\n";
        y += header_h;
        for (const BarRecord& b : doc.bars) {
            if (b.dim != d) continue;
            double bx = xpos(b.birth);
            double by = y + opt.row_height / 2.0;
            if (b.death) {
                os << "    <line class=\"bar\" data-dim=\"" << d << "\" data-birth=\""
                   << axis_label(b.birth) << "\" data-death=\"" << axis_label(*b.death)
                   << "\" x1=\"" << fmt2(bx) << "\" y1=\"" << fmt2(by) << "\" x2=\""
                   << fmt2(xpos(*b.death)) << "\" y2=\"" << fmt2(by)
                   << "\" stroke=\"#1f77b4\" stroke-width=\"3\"/>\n";
            } else {
                double ex = x1 + opt.margin / 3.0;
                os << "    <line class=\"bar infinite\" data-dim=\"" << d
                   << "\" data-birth=\"" << axis_label(b.birth)
                   << "\" data-death=\"inf\" x1=\"" << fmt2(bx) << "\" y1=\"" << fmt2(by)
                   << "\" x2=\"" << fmt2(ex) << "\" y2=\"" << fmt2(by)
                   << "\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
                os << "    <path class=\"arrow\" d=\"M " << fmt2(ex) << ' ' << fmt2(by - 4)
                   << " L " << fmt2(ex + 7) << ' ' << fmt2(by) << " L " << fmt2(ex) << ' '
                   << fmt2(by + 4) << " Z\" fill=\"#d62728\"/>\n";
            }
            y += opt.row_height;
        }
        os << "  </g>\n";
    }

    const double ay = axis_y;
    os << "  <g class=\"axis\">\n";
    os << "    <line x1=\"" << fmt2(x0) << "\" y1=\"" << fmt2(ay) << "\" x2=\"" << fmt2(x1)
       << "\" y2=\"" << fmt2(ay) << "\" stroke=\"black\"/>\n";
    os << "    <text x=\"" << fmt2(x0) << "\" y=\"" << fmt2(ay + 16)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << axis_label(vmin) << "</text>\n";
    os << "    <text x=\"" << fmt2(x1) << "\" y=\"" << fmt2(ay + 16)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << axis_label(vmax) << "</text>\n";
    os << "    <text x=\"" << fmt2((x0 + x1) / 2) << "\" y=\"" << fmt2(ay + 32)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << doc.value_kind << "</text>\n";
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace io
}  // namespace persista
