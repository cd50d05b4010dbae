#pragma once

#include <string>

#include <json.hpp>

#include "ekrgl/ekr.hpp"
#include "ekrgl/spread.hpp"
#include "ekrgl/symbase.hpp"

namespace ekrgl {

// Certificates use insertion-ordered JSON so identical runs serialize to
// identical bytes.  Big integers are emitted as decimal strings.
using Json = nlohmann::ordered_json;

std::string big_str(const BigInt& x);

Json field_record(const FieldPtr& f);     // {p, d, modulus: [c_0..c_d]}
Json matrix_record(const MatF& m);        // {rows, cols, entries, key}
Json params_record(const GroupParams& p); // {n, field}
Json family_record(const Family& fam);    // {params, size, member_keys, members when <= 64}
Json subspace_record(const Subspace& s);  // {ambient, dim, basis}
Json audit_record(const AuditReport& rep);
Json spread_record(const Spread& s);      // {n, l, field, members}
Json bound_record(const BoundClaim& c);

Json gl_certificate(const GlVerification& v);
Json sn_certificate(const SnVerification& v);
Json spread_certificate(const Spread& s, const PartitionCheck& partition,
                        const Family* coclique, const CocliqueMaximalityReport* maximality);
Json audit_certificate(int n, unsigned q, const AuditReport& rep);

// FNV-1a 64-bit hash (hex) of the compact dump with "timings_ms" removed, so
// re-runs hash identically regardless of wall time.
std::string content_hash(const Json& cert);

// Certificate files are named {stem}_{hash}.json where the stem encodes the
// job parameters (e.g. gl_ekr_n2_q3_exhaustive); the stem doubles as the
// cache-lookup prefix.
std::string gl_stem(int n, unsigned q, VerifyMode mode);
std::string sn_stem(int n, bool extremal);
std::string spread_stem(int n, int l, unsigned q, bool with_coclique);
std::string audit_stem(int n, unsigned q);
std::string certificate_stem(const Json& cert); // stem recovered from a certificate
std::string certificate_filename(const Json& cert);

void write_certificate_file(const std::string& path, const Json& cert);
Json read_certificate_file(const std::string& path);

} // namespace ekrgl
