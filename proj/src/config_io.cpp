#include "curvegraph/config_io.hpp"

#include <fstream>
#include <sstream>

namespace curvegraph {

namespace {

using nlohmann::json;

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object())
        throw StructuralError(where + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw StructuralError(where + " lacks required field '" + key + "'");
    return *it;
}

long long int_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer())
        throw StructuralError(where + "." + key + " must be an integer");
    return v.get<long long>();
}

std::string string_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string())
        throw StructuralError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

long long int_at(const json& arr, std::size_t i, const std::string& where) {
    if (!arr[i].is_number_integer())
        throw StructuralError(where + "[" + std::to_string(i) + "] must be an integer");
    return arr[i].get<long long>();
}

} // namespace

ConfigDocument parse_config(const json& j) {
    ConfigDocument doc;

    const json& surf = field(j, "surface", "document");
    doc.config.surface.genus = static_cast<int>(int_field(surf, "genus", "surface"));
    doc.config.surface.punctures = static_cast<int>(int_field(surf, "punctures", "surface"));
    doc.config.surface.boundary = static_cast<int>(int_field(surf, "boundary", "surface"));
    if (doc.config.surface.genus < 0 || doc.config.surface.punctures < 0 ||
        doc.config.surface.boundary < 0)
        throw StructuralError("surface fields must be nonnegative");

    const json& curves = field(j, "curves", "document");
    if (!curves.is_array() || curves.empty())
        throw StructuralError("curves must be a nonempty array");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string where = "curves[" + std::to_string(i) + "]";
        Curve c;
        c.name = string_field(curves[i], "name", where);
        std::string cls = string_field(curves[i], "class", where);
        if (cls == "A")
            c.cls = CurveClass::A;
        else if (cls == "B")
            c.cls = CurveClass::B;
        else
            throw StructuralError(where + ".class must be \"A\" or \"B\", got \"" + cls + "\"");
        if (auto it = curves[i].find("separating"); it != curves[i].end()) {
            if (!it->is_boolean()) throw StructuralError(where + ".separating must be a boolean");
            c.separating = it->get<bool>();
        }
        doc.config.curves.push_back(std::move(c));
    }
    const std::size_t n = doc.config.curves.size();

    const json& mat = field(j, "intersections", "document");
    if (!mat.is_array() || mat.size() != n)
        throw StructuralError("intersections must be a " + std::to_string(n) + "x" +
                              std::to_string(n) + " array");
    doc.config.intersections.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "intersections[" + std::to_string(i) + "]";
        if (!mat[i].is_array() || mat[i].size() != n)
            throw StructuralError(where + " must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) {
            long long e = int_at(mat[i], k, where);
            if (e < 0) throw StructuralError(where + "[" + std::to_string(k) + "] is negative");
            doc.config.intersections[i][k] = e;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (doc.config.intersections[i][k] != doc.config.intersections[k][i])
                throw StructuralError(
                    "intersections[" + std::to_string(i) + "][" + std::to_string(k) + "] = " +
                    std::to_string(doc.config.intersections[i][k]) + " but intersections[" +
                    std::to_string(k) + "][" + std::to_string(i) + "] = " +
                    std::to_string(doc.config.intersections[k][i]));

    if (auto it = j.find("witnesses"); it != j.end()) {
        if (!it->is_array()) throw StructuralError("witnesses must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "witnesses[" + std::to_string(i) + "]";
            Witness w;
            w.name = string_field((*it)[i], "name", where);
            const json& row = field((*it)[i], "intersections", where);
            if (!row.is_array() || row.size() != n)
                throw StructuralError(where + ".intersections must have " + std::to_string(n) +
                                      " entries");
            for (std::size_t k = 0; k < n; ++k) {
                long long e = int_at(row, k, where + ".intersections");
                if (e < 0)
                    throw StructuralError(where + ".intersections[" + std::to_string(k) +
                                          "] is negative");
                w.row.push_back(e);
            }
            doc.config.witnesses.push_back(std::move(w));
        }
    }

    const json& word = field(j, "word", "document");
    if (!word.is_array()) throw StructuralError("word must be an array of curve names");
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!word[i].is_string())
            throw StructuralError("word[" + std::to_string(i) + "] must be a string");
        doc.word.letters.push_back(word[i].get<std::string>());
    }

    doc.config.check_structure();
    for (const std::string& letter : doc.word.letters)
        if (!doc.config.curve_index(letter))
            throw StructuralError("word letter " + letter + " is not a configuration curve");

    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_string()) throw StructuralError("seed must be a string");
        doc.seed = it->get<std::string>();
        if (!doc.config.curve_index(doc.seed))
            throw StructuralError("seed " + doc.seed + " is not a configuration curve");
    }
    if (auto it = j.find("witness"); it != j.end()) {
        if (!it->is_string()) throw StructuralError("witness must be a string");
        doc.witness = it->get<std::string>();
        if (!doc.config.witness_index(doc.witness))
            throw StructuralError("witness " + doc.witness + " is not a declared witness");
    }
    return doc;
}

ConfigDocument load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StructuralError(path + ": " + e.what());
    }
    try {
        return parse_config(j);
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

json to_json(const ConfigDocument& doc) {
    json j;
    j["surface"] = {{"genus", doc.config.surface.genus},
                    {"punctures", doc.config.surface.punctures},
                    {"boundary", doc.config.surface.boundary}};
    j["curves"] = json::array();
    for (const Curve& c : doc.config.curves)
        j["curves"].push_back({{"name", c.name},
                               {"class", std::string(curve_class_name(c.cls))},
                               {"separating", c.separating}});
    j["intersections"] = doc.config.intersections;
    j["witnesses"] = json::array();
    for (const Witness& w : doc.config.witnesses)
        j["witnesses"].push_back({{"name", w.name}, {"intersections", w.row}});
    j["word"] = doc.word.letters;
    if (!doc.seed.empty()) j["seed"] = doc.seed;
    if (!doc.witness.empty()) j["witness"] = doc.witness;
    return j;
}

json to_json(const FamilyInstance& inst) {
    ConfigDocument doc{inst.config, inst.word, inst.seed, inst.witness};
    return to_json(doc);
}

namespace {

void write_file(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StructuralError("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw StructuralError("write to " + path + " failed");
}

} // namespace

void save_config(const ConfigDocument& doc, const std::string& path) {
    write_file(to_json(doc), path);
}

void save_config(const FamilyInstance& inst, const std::string& path) {
    write_file(to_json(inst), path);
}

json rational_json(const Rational& r) {
    return {{"num", std::to_string(r.num())}, {"den", std::to_string(r.den())}};
}

json to_json(const LowerBoundRecord& rec) {
    json j;
    j["kind"] = "lower";
    j["group"] = std::string(group_kind_name(rec.group));
    j["parameters"] = {{"genus", rec.surface.genus},
                       {"punctures", rec.surface.punctures},
                       {"boundary", rec.surface.boundary}};
    j["q"] = rec.q;
    j["r"] = rec.r;
    j["k"] = rec.k;
    j["w"] = rec.w;
    j["bound"] = rational_json(rec.bound);
    if (rec.published_w) {
        j["published_w"] = *rec.published_w;
        j["published_bound"] = rational_json(*rec.published_bound);
    }
    j["derivation"] = rec.derivation;
    return j;
}

json to_json(const UpperBoundCertificate& cert) {
    json j;
    j["kind"] = "upper";
    j["seed"] = cert.seed;
    j["witness"] = cert.witness;
    j["mode"] = std::string(certify_mode_name(cert.mode));
    j["j"] = cert.j;
    j["bound"] = rational_json(cert.bound);
    j["trace"] = cert.trace;
    return j;
}

json to_json(const SpectralResult& res) {
    json j;
    j["dilatation"] = res.dilatation;
    j["residual"] = res.residual;
    j["iterations"] = res.iterations;
    if (res.primitivity_exponent) j["primitivity_exponent"] = *res.primitivity_exponent;
    if (res.diagonal_exponent) j["diagonal_exponent"] = *res.diagonal_exponent;
    return j;
}

json to_json(const ValidationReport& rep) {
    json j;
    j["passed"] = rep.passed();
    j["pseudo_anosov"] = rep.pseudo_anosov();
    j["checks"] = json::array();
    for (const ValidationCheck& c : rep.checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["assumptions"] = rep.assumptions;
    return j;
}

std::string render_text(const LowerBoundRecord& rec) {
    std::ostringstream out;
    const Surface& s = rec.surface;
    out << "group: " << group_kind_name(rec.group) << "\n";
    out << "surface: genus " << s.genus << ", punctures " << s.punctures << ", boundary "
        << s.boundary << " (chi = " << euler_characteristic(s) << ", complexity = "
        << complexity(s) << ")\n";
    for (const std::string& line : rec.derivation) out << "  " << line << "\n";
    out << "q = " << rec.q << ", r = " << rec.r << ", k = " << rec.k;
    if (rec.published_w)
        out << ", w = " << rec.w << " (derived); published w = " << *rec.published_w << "\n";
    else
        out << ", w = " << rec.w << "\n";
    out << "lower bound: " << rec.bound.str();
    if (rec.published_bound) out << " (derived); published lower bound: " << rec.published_bound->str();
    out << "\n";
    return out.str();
}

std::string render_text(const UpperBoundCertificate& cert, bool include_trace) {
    std::ostringstream out;
    out << "seed: " << cert.seed << ", witness: " << cert.witness << "\n";
    out << "iterations with witness untouched: j = " << cert.j << "\n";
    out << "upper bound: " << cert.bound.str() << "\n";
    if (include_trace) {
        for (std::size_t t = 0; t < cert.trace.size(); ++t) {
            out << "  t=" << t << ": {";
            for (std::size_t i = 0; i < cert.trace[t].size(); ++i)
                out << (i ? ", " : "") << cert.trace[t][i];
            out << "}\n";
        }
    }
    return out.str();
}

std::string render_text(const SpectralResult& res) {
    std::ostringstream out;
    out.precision(15);
    out << "dilatation: " << res.dilatation << "\n";
    out << "residual: " << res.residual << " after " << res.iterations << " iterations\n";
    if (res.primitivity_exponent)
        out << "primitivity exponent: " << *res.primitivity_exponent << "\n";
    if (res.diagonal_exponent)
        out << "diagonal-positive exponent: " << *res.diagonal_exponent << "\n";
    return out.str();
}

std::string render_text(const ValidationReport& rep) {
    std::ostringstream out;
    for (const ValidationCheck& c : rep.checks) {
        out << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    for (const std::string& a : rep.assumptions) out << "assumed: " << a << "\n";
    return out.str();
}

} // namespace curvegraph
