#include "superlie/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace superlie {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- shape ---

const json& need(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing key \"") + key + "\" in " + where);
    return *it;
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const std::string& k : allowed) ok = ok || it.key() == k;
        if (!ok)
            throw ParseError("unknown key \"" + it.key() + "\" in " + where);
    }
}

std::string need_string(const json& v, const char* where) {
    if (!v.is_string()) throw ParseError(std::string(where) + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> label_list(const json& v, const char* where) {
    if (!v.is_array()) throw ParseError(std::string(where) + " must be an array of labels");
    std::vector<std::string> out;
    for (const json& e : v) out.push_back(need_string(e, where));
    return out;
}

Field parse_field(const json& spec) {
    if (!spec.is_object()) throw ParseError("\"field\" must be an object");
    std::string type = need_string(need(spec, "type", "\"field\""), "\"field\".\"type\"");
    if (type == "rational") {
        reject_unknown_keys(spec, {"type"}, "\"field\"");
        return Field::rationals();
    }
    if (type == "prime") {
        reject_unknown_keys(spec, {"type", "p"}, "\"field\"");
        const json& p = need(spec, "p", "\"field\"");
        if (!p.is_number_integer() || p.get<std::int64_t>() < 0)
            throw ParseError("\"field\".\"p\" must be a non-negative integer");
        return Field::prime(p.get<std::uint64_t>());  // Error for characteristic 2, 3, composite
    }
    throw ParseError("\"field\".\"type\" must be \"rational\" or \"prime\"");
}

SuperSpace parse_space(const json& spec, const char* where) {
    if (!spec.is_object()) throw ParseError(std::string(where) + " must be an object");
    reject_unknown_keys(spec, {"even", "odd"}, where);
    return SuperSpace(label_list(need(spec, "even", where), where),
                      label_list(need(spec, "odd", where), where));
}

// ------------------------------------------------------------- entries ---

std::size_t resolved(const SuperSpace& space, const std::string& label) {
    auto idx = space.index_of(label);
    if (!idx) throw Error("unknown label '" + label + "'");
    return *idx;
}

/// Fills table[i][j] from the entry list and derives each graded-skew
/// mirror; an explicit entry that contradicts an earlier one (directly or
/// through its mirror) is an error.
void apply_entries(const json& entries, const char* list_name, const SuperSpace& src,
                   const SuperSpace& dst, const Field& field,
                   std::vector<std::vector<Vec>>& table) {
    if (!entries.is_array())
        throw ParseError(std::string("\"") + list_name + "\" must be an array");
    std::vector<std::vector<bool>> known(src.dim(), std::vector<bool>(src.dim(), false));
    for (const json& e : entries) {
        if (!e.is_object())
            throw ParseError(std::string("\"") + list_name + "\" entries must be objects");
        reject_unknown_keys(e, {"left", "right", "value"}, "entry");
        std::string lname = need_string(need(e, "left", "entry"), "\"left\"");
        std::string rname = need_string(need(e, "right", "entry"), "\"right\"");
        std::size_t i = resolved(src, lname);
        std::size_t j = resolved(src, rname);
        int expected_parity = (src.parity(i) + src.parity(j)) % 2;

        const json& terms = need(e, "value", "entry");
        if (!terms.is_array()) throw ParseError("\"value\" must be an array of [label, scalar]");
        Vec value = zero_vec(field, dst.dim());
        for (const json& t : terms) {
            if (!t.is_array() || t.size() != 2)
                throw ParseError("\"value\" terms must be [label, scalar] pairs");
            std::string tname = need_string(t[0], "value label");
            std::size_t k = resolved(dst, tname);
            if (dst.parity(k) != expected_parity)
                throw Error("parity violation: (" + lname + ", " + rname +
                            ") entry has a component on '" + tname + "'");
            value[k] = value[k] + field.parse(need_string(t[1], "value scalar"));
        }

        Scalar sign = (src.parity(i) * src.parity(j)) % 2 != 0 ? field.one() : -field.one();
        Vec mirror = scale(sign, value);
        if ((known[i][j] && !(table[i][j] == value)) ||
            (i != j && known[j][i] && !(table[j][i] == mirror)))
            throw Error("conflicting entry for (" + lname + ", " + rname + ")");
        table[i][j] = value;
        known[i][j] = true;
        if (i != j) {
            table[j][i] = std::move(mirror);
            known[j][i] = true;
        }
    }
}

json entries_to_json(const SuperSpace& src, const SuperSpace& dst,
                     const std::vector<std::vector<Vec>>& table) {
    json list = json::array();
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i; j < src.dim(); ++j) {
            if (is_zero_vec(table[i][j])) continue;
            json terms = json::array();
            for (std::size_t k = 0; k < dst.dim(); ++k)
                if (!table[i][j][k].is_zero())
                    terms.push_back(json::array({dst.label(k), table[i][j][k].str()}));
            list.push_back({{"left", src.label(i)}, {"right", src.label(j)}, {"value", terms}});
        }
    return list;
}

json space_to_json(const SuperSpace& s) {
    return {{"even", s.even_labels()}, {"odd", s.odd_labels()}};
}

json field_to_json(const Field& f) {
    if (f.is_rational()) return {{"type", "rational"}};
    return {{"type", "prime"}, {"p", f.modulus()}};
}

json dims_to_json(const DimPair& d) {
    return {{"even", d.even}, {"odd", d.odd}};
}

void put_dims(json& out, const char* key, const std::optional<DimPair>& d) {
    if (d) out[key] = dims_to_json(*d);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

// ----------------------------------------------------------------- parse ---

bool InputDocument::operator==(const InputDocument& o) const {
    if (!(field == o.field) || is_lie != o.is_lie) return false;
    if (is_lie)
        return algebra.space == o.algebra.space && algebra.table == o.algebra.table;
    return map == o.map;
}

InputDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("document must be an object");

    InputDocument doc;
    doc.field = parse_field(need(root, "field", "document"));
    std::string kind = need_string(need(root, "kind", "document"), "\"kind\"");
    SuperSpace space = parse_space(need(root, "space", "document"), "\"space\"");

    if (kind == "lie") {
        reject_unknown_keys(root, {"field", "kind", "space", "brackets"}, "document");
        doc.is_lie = true;
        doc.algebra.field = doc.field;
        doc.algebra.space = space;
        doc.algebra.table = zero_table(doc.field, space);
        apply_entries(need(root, "brackets", "document"), "brackets", space, space, doc.field,
                      doc.algebra.table);
        return doc;
    }
    if (kind == "sske") {
        reject_unknown_keys(root, {"field", "kind", "space", "target", "values"}, "document");
        doc.is_lie = false;
        doc.map.field = doc.field;
        doc.map.v = space;
        doc.map.w = parse_space(need(root, "target", "document"), "\"target\"");
        doc.map.tensor = zero_tensor(doc.field, doc.map.v, doc.map.w);
        apply_entries(need(root, "values", "document"), "values", doc.map.v, doc.map.w,
                      doc.field, doc.map.tensor);
        return doc;
    }
    throw ParseError("\"kind\" must be \"lie\" or \"sske\"");
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string emit_document(const InputDocument& doc) {
    json root;
    root["field"] = field_to_json(doc.field);
    root["kind"] = doc.is_lie ? "lie" : "sske";
    if (doc.is_lie) {
        root["space"] = space_to_json(doc.algebra.space);
        root["brackets"] =
            entries_to_json(doc.algebra.space, doc.algebra.space, doc.algebra.table);
    } else {
        root["space"] = space_to_json(doc.map.v);
        root["target"] = space_to_json(doc.map.w);
        root["values"] = entries_to_json(doc.map.v, doc.map.w, doc.map.tensor);
    }
    return root.dump(2) + "\n";
}

InputDocument document_from_lie(const LieSuper& L) {
    InputDocument doc;
    doc.field = L.field;
    doc.is_lie = true;
    doc.algebra = L;
    return doc;
}

InputDocument document_from_sske(const SkewSuperMap& f) {
    InputDocument doc;
    doc.field = f.field;
    doc.is_lie = false;
    doc.map = f;
    return doc;
}

std::string document_fingerprint(const InputDocument& doc) {
    const std::string text = emit_document(doc);
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xF];
    return out;
}

std::string format_linear(const SuperSpace& space, const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < space.dim(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += v[k].str() + "*" + space.label(k);
    }
    return out.empty() ? "0" : out;
}

// --------------------------------------------------------------- analyze ---

namespace {

void fill_map_report(ReportDocument& r, const SkewSuperMap& f) {
    r.map_dimension = f.dimension();
    r.map_rank = f.rank();
    r.radical_dims = radical(f).dims();
    r.relation_dims = jacobi_span(f).subspace.dims();
    r.multiplier_report = multiplier(f);
    EpicenterReport e = epicenter(f, false);
    r.epicenter_dims = e.subspace.dims();
    for (const Vec& b : e.subspace.basis_vectors(f.w, f.field))
        r.epicenter_basis.push_back(format_linear(f.w, b));
    r.capable = e.capable;
    if (f.rank().total() == 1) r.classification = classify_rank_one(f).str();
}

}  // namespace

ReportDocument analyze_document(const InputDocument& doc) {
    ReportDocument r;
    r.fingerprint = document_fingerprint(doc);
    r.kind = doc.is_lie ? "lie" : "sske";
    r.field_name = doc.field.describe();

    if (doc.is_lie) {
        const LieSuper& L = doc.algebra;
        require_valid(L);
        r.input_dims = L.space.dims();
        NilClass cls = nilpotency_class_leq2(L);
        r.class_tag = to_string(cls);
        r.derived_dims = derived_subalgebra(L).dims();
        r.center_dims = center(L).dims();
        if (cls == NilClass::abelian) {
            r.capable = is_capable_lie(L);
        } else if (cls == NilClass::class_two) {
            fill_map_report(r, from_lie(L));
        }
        return r;
    }

    const SkewSuperMap& f = doc.map;
    require_valid(f);
    r.input_dims = f.dimension();
    fill_map_report(r, f);
    LieSuper rebuilt = to_lie(f);
    r.rebuilt_dims = rebuilt.space.dims();
    r.class_tag = to_string(nilpotency_class_leq2(rebuilt));
    r.derived_dims = derived_subalgebra(rebuilt).dims();
    r.center_dims = center(rebuilt).dims();
    return r;
}

std::string report_to_text(const ReportDocument& r) {
    std::ostringstream out;
    out << "kind: " << r.kind << "\n";
    out << "field: " << r.field_name << "\n";
    out << "fingerprint: " << r.fingerprint << "\n";
    out << "input dims: " << r.input_dims.str() << "\n";
    if (r.class_tag) out << "class: " << *r.class_tag << "\n";
    if (r.derived_dims) out << "derived subalgebra: " << r.derived_dims->str() << "\n";
    if (r.center_dims) out << "center: " << r.center_dims->str() << "\n";
    if (r.map_dimension) out << "map dimension: " << r.map_dimension->str() << "\n";
    if (r.map_rank) out << "map rank: " << r.map_rank->str() << "\n";
    if (r.radical_dims) out << "radical: " << r.radical_dims->str() << "\n";
    if (r.relation_dims) out << "relation space: " << r.relation_dims->str() << "\n";
    if (r.multiplier_report) {
        out << "multiplier quotient: " << r.multiplier_report->quotient_dims.str() << "\n";
        out << "multiplier kernel: " << r.multiplier_report->kernel_rho_dims.str() << "\n";
        out << "multiplier total: " << r.multiplier_report->total_dims.str() << "\n";
    }
    if (r.epicenter_dims) out << "epicenter: " << r.epicenter_dims->str() << "\n";
    for (const std::string& b : r.epicenter_basis) out << "epicenter basis: " << b << "\n";
    if (r.capable) out << "capable: " << yes_no(*r.capable) << "\n";
    if (r.classification) out << "classification: " << *r.classification << "\n";
    if (r.rebuilt_dims) out << "rebuilt algebra dims: " << r.rebuilt_dims->str() << "\n";
    return out.str();
}

std::string report_to_json(const ReportDocument& r) {
    json out;
    out["kind"] = r.kind;
    out["field"] = r.field_name;
    out["fingerprint"] = r.fingerprint;
    out["input_dims"] = dims_to_json(r.input_dims);
    if (r.class_tag) out["class"] = *r.class_tag;
    put_dims(out, "derived_dims", r.derived_dims);
    put_dims(out, "center_dims", r.center_dims);
    put_dims(out, "map_dimension", r.map_dimension);
    put_dims(out, "map_rank", r.map_rank);
    put_dims(out, "radical_dims", r.radical_dims);
    put_dims(out, "relation_dims", r.relation_dims);
    if (r.multiplier_report) {
        out["multiplier"] = {{"quotient", dims_to_json(r.multiplier_report->quotient_dims)},
                             {"kernel", dims_to_json(r.multiplier_report->kernel_rho_dims)},
                             {"total", dims_to_json(r.multiplier_report->total_dims)}};
    }
    put_dims(out, "epicenter_dims", r.epicenter_dims);
    if (r.epicenter_dims) out["epicenter_basis"] = r.epicenter_basis;
    if (r.capable) out["capable"] = *r.capable;
    if (r.classification) out["classification"] = *r.classification;
    put_dims(out, "rebuilt_dims", r.rebuilt_dims);
    return out.dump(2) + "\n";
}

}  // namespace superlie
