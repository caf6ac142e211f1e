// Input documents: parsing, validation, and JSON (de)serialization.
//
// A document bundles one model with optional polytope data, optional class
// tables, optional subtorus blocks, and optional candidate tuples, all in a
// versioned JSON schema. Loading validates everything it can see and leaves
// the result ready for the command layer.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "equiloc/classes.hpp"
#include "equiloc/model.hpp"
#include "equiloc/polynomial.hpp"
#include "equiloc/relations.hpp"

namespace equiloc {

using OrderedJson = nlohmann::ordered_json;

/// One lower-rank piece of a decomposition: the points of the ambient model
/// it covers, the ambient linear form its grading variable stands for, and a
/// self-contained sub-model (with its own xi and optional table/polytope).
struct SubtorusBlock {
    std::string name;
    LinearForm residual_form = LinearForm({1});
    std::vector<std::string> points; // ambient ids, aligned with sub-model order
    GKMModel model;
    CircleSpec spec;
    std::optional<GeneratingClassTable> specialized_classes;
};

/// A named candidate restriction tuple to test for class membership,
/// optionally annotated with the verdict the author expects.
struct CandidateTuple {
    std::string name;
    std::vector<std::string> variables;
    CohomologyTuple values;
    std::optional<bool> expected_pass;
};

struct InputDocument {
    std::string name;
    GKMModel model;
    std::optional<std::vector<Int>> xi;
    std::string residual_variable = "u";
    std::optional<GeneratingClassTable> classes;             // full coefficient ring
    std::optional<GeneratingClassTable> specialized_classes; // residual grading
    std::optional<GeneratingClassTable> alt_classes;         // alternative full table
    std::optional<std::map<std::string, MultiPolynomial>> euler_row;
    std::vector<SubtorusBlock> subtori;
    std::vector<CandidateTuple> tuples;
    std::string digest; // fnv1a over the raw input bytes

    /// The circle direction, which must have been given in the file or
    /// injected by the caller. Throws validation_error when absent.
    CircleSpec spec() const;
};

/// 64-bit FNV-1a of the raw bytes, rendered as "fnv1a:<16 hex digits>".
std::string fnv1a_digest(const std::string& bytes);

/// Parse and validate a document from JSON text. `xi_override` replaces the
/// file's xi before any xi-dependent validation runs. Structural problems
/// and schema violations throw validation_error with a path.
InputDocument parse_document(const std::string& json_text,
                             const std::optional<std::vector<Int>>& xi_override = std::nullopt);

/// Read a file and parse it. Missing or unreadable files are structural
/// errors.
InputDocument load_document(const std::string& path,
                            const std::optional<std::vector<Int>>& xi_override = std::nullopt);

/// Polynomial JSON form: an array of [exponent-vector, coefficient-string]
/// pairs in the canonical term order, e.g. 2u^3 - u -> [[[3],"2"],[[1],"-1"]].
/// The zero polynomial is the empty array.
OrderedJson polynomial_to_json(const MultiPolynomial& p);
MultiPolynomial polynomial_from_json(const OrderedJson& value,
                                     const std::vector<std::string>& variables,
                                     const std::string& path);

/// Class table as {"variables": [...], "rows": {base: {point: poly}}}; zero
/// entries stay omitted.
OrderedJson table_to_json(const GeneratingClassTable& table);

/// One relation as {"coefficients": {id: int-string}, "modulus": text,
/// "power": int, "degree": int, "from": id-or-null, "text": rendering}.
OrderedJson relation_to_json(const DivisibilityRelation& relation,
                             const std::vector<std::string>& point_order,
                             const std::vector<std::string>& variables);

} // namespace equiloc
