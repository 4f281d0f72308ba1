#ifndef YBWB_JSON_IO_HPP
#define YBWB_JSON_IO_HPP

#include <string>
#include <variant>

#include "ybwb/quantum.hpp"
#include "ybwb/report.hpp"
#include "ybwb/tensor.hpp"
#include "ybwb/triples.hpp"

namespace ybwb {

using AnyTensor2 = std::variant<QTensor2, PTensor2>;

/// Canonical tensor format:
///   { "n": int, "ring": "Q" | "Q[t]",
///     "terms": [ { "idx": [i,j,k,l], "coeff": "num/den" | ["num/den",...] } ] }
/// with 1-based indices and terms sorted lexicographically by idx.
/// Round-trips are bit-exact on canonical output.
std::string tensor_to_json(const QTensor2& t);
std::string tensor_to_json(const PTensor2& t);
AnyTensor2 tensor_from_json(const std::string& text);

/// Three-tensors use the same format with six-entry idx arrays.
std::string tensor3_to_json(const QTensor3& t);
QTensor3 tensor3_from_json(const std::string& text);

/// Wedge-form text, e.g. "2 e12^e32 - 1/3 e11^e33"; parseable back into
/// the same tensor. Requires a skew input.
std::string tensor_to_pretty(const QTensor2& t, int n_hint = 0);
QTensor2 tensor_from_pretty(const std::string& text, int n);

/// Triples: { "n": int, "pi1": [..], "pi2": [..], "T": [[src,dst],..] }.
std::string triple_to_json(const Triple& t);
Triple triple_from_json(const std::string& text);

/// Big matrices: { "n2": int, "entries": [ {"r":..,"c":..,"coeff":..} ] }.
std::string bigmatrix_to_json(const PBigMatrix& m);
std::string bigmatrix_to_json(const QBigMatrix& m);
std::variant<QBigMatrix, PBigMatrix> bigmatrix_from_json(const std::string& text);

/// Report records:
///   { "construction":.., "n":.., "i"?:.., "seed"?:..,
///     "identities": [{"name":..,"status":"exact|up-to-sign|failed","sign"?:..}],
///     "carrier"?: {"dim":.., "matches_parabolic":..} }
std::string report_to_json(const Report& r);

}  // namespace ybwb

#endif
