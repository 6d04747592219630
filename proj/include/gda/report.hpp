#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gda/equivalence.hpp"
#include "gda/invariants.hpp"
#include "gda/normalize.hpp"

namespace gda {

using Json = nlohmann::ordered_json;

// Every top-level document carries "schema": "gda.<kind>/<version>".
inline constexpr int kSchemaVersion = 1;

Json schema_tag(const std::string& kind);

Json to_json(const DTuple& d);
Json to_json(const CanonicalForm& cf);
Json to_json(const Presentation& p, const UnitMonomial& m);
Json to_json(const WeakIsomorphism& w, const Presentation& target);
Json to_json(const Certificate& c);
Json to_json(const LemmaReport& r);
Json to_json(const RewriteStep& s);

Json normalize_document(const FactorList& fs, const NormalizeResult& r);
Json verdict_document(const Verdict& v, const Presentation& target);
Json invariant_document(const FactorList& fs, int max_k);
Json lemma_document(const std::vector<LemmaReport>& reports);

}  // namespace gda
