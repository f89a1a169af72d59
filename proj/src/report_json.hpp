#pragma once

#include <string>

#include "json.hpp"

#include "cubic.hpp"

namespace vbc {

using Json = nlohmann::ordered_json;

// Integers ride as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; rationals always as strings ("0", "1/2", "-5/8").
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& r);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

// {rank, gram: [[...]]}
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json signature_to_json(const Signature& s);
Json discriminant_to_json(const DiscriminantGroup& d);

// {tau, n, pic_gram, det_pic, det_M, brauer_kind, clifford_relation, admissible}
Json case_report_to_json(const CaseReport& r);

Json glue_audit_to_json(const GlueAudit& a);

Json theorem_run_to_json(const TheoremRun& r);

Json inverse_lookup_to_json(const Int& c);

// status per cell: "yes", "no", or "excluded"; tau ascending, then n
Json admissible_table_to_json(long n_max);

Json abbv_to_json();

}  // namespace vbc
