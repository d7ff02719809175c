#pragma once

#include <json.hpp>

#include "matseq/matcore.hpp"
#include "matseq/similarity.hpp"

namespace matseq::json_io {

using Json = nlohmann::ordered_json;

// Every reader throws Error(InvalidInput) on schema violations.

Ring ring_from_json(const Json& j);
Json ring_to_json(const Ring& r);

/// Z: decimal string (or JSON integer); Q: "p/q" or "p"; GF(p): integer;
/// Q(sqrt d): {"a", "b", "d"} meaning a + b sqrt(d), where d may be any
/// rational multiple-of-a-square of the ring radicand; Q[t]: rational strings,
/// low degree first.
Scalar scalar_from_json(const Json& j, const Ring& r);
Json scalar_to_json(const Scalar& x);

Mat2 mat_from_json(const Json& j, const Ring& r);
Json mat_to_json(const Mat2& m);

/// {"ring": ..., "matrices": [[[a, b], [c, d]], ...]}
MatSeq seq_from_json(const Json& j);
Json seq_to_json(const MatSeq& s);
Json matrices_to_json(const MatSeq& s);

/// {"ring", "n", "values"}
PhiVector phi_from_json(const Json& j);
Json phi_to_json(const PhiVector& v);

/// {"ring", "n", "traces", "proj"}, or {"ring", "n", "values"} holding the 2n
/// traces followed by the projective coordinates.
PsiValue psi_from_json(const Json& j);
Json psi_to_json(const PsiValue& v);

}  // namespace matseq::json_io
