#pragma once

#include "superlie/invariants.hpp"

namespace superlie {

/// File-format failure: unreadable file, malformed text, missing or
/// mistyped fields.  Semantic problems inside a well-formed document
/// (unknown labels, parity violations, bad scalars, bad characteristic)
/// raise plain Error instead.
class ParseError : public Error {
public:
    using Error::Error;
};

/// One algebra or one map per document.
struct InputDocument {
    Field field = Field::rationals();
    bool is_lie = true;
    LieSuper algebra;  // meaningful when is_lie
    SkewSuperMap map;  // meaningful when !is_lie

    bool operator==(const InputDocument& o) const;
};

/// Parses a structured-text document.  Shape:
///   { "field": {"type": "rational"} or {"type": "prime", "p": 5},
///     "kind": "lie" | "sske",
///     "space": {"even": [labels], "odd": [labels]},
///     "brackets": [{"left": l, "right": r, "value": [[label, scalar]]}] }
/// For kind sske, "target" gives the second space and the entry list is
/// named "values".  Omitted pairs are zero; the mirror of each entry is
/// derived from graded skew-symmetry, and an explicit conflicting mirror
/// is an error.  Scalars are exact strings ("1", "-3", "2/5").
InputDocument parse_document(const std::string& text);
/// parse_document on the file contents; ParseError when unreadable.
InputDocument load_document(const std::string& path);

/// Canonical byte-stable emission; parse_document(emit_document(d)) == d.
std::string emit_document(const InputDocument& doc);

InputDocument document_from_lie(const LieSuper& L);
InputDocument document_from_sske(const SkewSuperMap& f);

/// Analysis results for one document; optional fields are absent when the
/// input class makes them meaningless (e.g. map data for an abelian
/// algebra).  All dimension pairs serialize as {"even": e, "odd": o}.
struct ReportDocument {
    std::string fingerprint;  // hash of the canonical input document
    std::string kind;         // "lie" | "sske"
    std::string field_name;
    DimPair input_dims;

    // algebra-level data (lie input, or the rebuilt algebra of a map)
    std::optional<std::string> class_tag;
    std::optional<DimPair> derived_dims;
    std::optional<DimPair> center_dims;

    // map-level data (class-two lie input, or sske input)
    std::optional<DimPair> map_dimension;
    std::optional<DimPair> map_rank;
    std::optional<DimPair> radical_dims;
    std::optional<DimPair> relation_dims;  // X_f
    std::optional<MultiplierReport> multiplier_report;
    std::optional<DimPair> epicenter_dims;
    std::vector<std::string> epicenter_basis;  // formatted target vectors
    std::optional<bool> capable;
    std::optional<std::string> classification;  // rank-one tag, when rank is 1
    std::optional<DimPair> rebuilt_dims;        // dims of the rebuilt algebra
};

/// Validates the document (throws Error listing the violations) and runs
/// the invariant suite appropriate to its kind and class.
ReportDocument analyze_document(const InputDocument& doc);

std::string report_to_text(const ReportDocument& r);
std::string report_to_json(const ReportDocument& r);

/// 16-hex-digit FNV-1a fingerprint of the canonical document text.
std::string document_fingerprint(const InputDocument& doc);

/// "c1*l1 + c2*l2" with exact coefficient strings, in basis order.
std::string format_linear(const SuperSpace& space, const Vec& v);

}  // namespace superlie
