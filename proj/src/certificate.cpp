#include "ekrgl/certificate.hpp"

#include <cstdint>
#include <fstream>

#include "ekrgl/errors.hpp"

namespace ekrgl {

std::string big_str(const BigInt& x) { return x.str(); }

Json field_record(const FieldPtr& f) {
    if (!f) throw Error("cannot serialize a null field");
    if (f->base() && f->base()->base())
        throw Error("tower fields are internal and never serialized");
    Json rec;
    rec["p"] = f->characteristic();
    rec["d"] = f->degree();
    rec["modulus"] = f->modulus();
    return rec;
}

Json matrix_record(const MatF& m) {
    Json rec;
    rec["rows"] = m.rows;
    rec["cols"] = m.cols;
    rec["entries"] = m.e;
    rec["key"] = matrix_key(m);
    return rec;
}

Json params_record(const GroupParams& p) {
    Json rec;
    rec["n"] = p.n;
    rec["field"] = field_record(p.field);
    return rec;
}

Json family_record(const Family& fam) {
    Json rec;
    rec["params"] = params_record(fam.params);
    rec["size"] = fam.size();
    rec["member_keys"] = fam.keys();
    if (fam.size() <= 64) {
        Json members = Json::array();
        for (const MatF& m : fam.members) members.push_back(matrix_record(m));
        rec["members"] = members;
    }
    return rec;
}

Json subspace_record(const Subspace& s) {
    Json rec;
    rec["ambient"] = s.ambient;
    rec["dim"] = s.dim;
    rec["basis"] = matrix_record(s.basis);
    return rec;
}

namespace {

const char* equality_name(AuditReport::Equality e) {
    switch (e) {
        case AuditReport::Equality::Met: return "met";
        case AuditReport::Equality::Violated: return "violated";
        default: return "not_applicable";
    }
}

} // namespace

Json audit_record(const AuditReport& rep) {
    Json rec;
    rec["v"] = big_str(rep.v);
    rec["clique_size"] = rep.clique_size;
    rec["coclique_size"] = rep.coclique_size;
    rec["product"] = big_str(rep.product);
    rec["inequality_holds"] = rep.inequality_holds;
    rec["equality_case"] = equality_name(rep.equality_case);
    rec["intersection_size"] = rep.intersection_size;
    Json wit = Json::array();
    for (const MatF& m : rep.intersection) wit.push_back(matrix_record(m));
    rec["witnesses"] = wit;
    return rec;
}

Json spread_record(const Spread& s) {
    Json rec;
    rec["n"] = s.n;
    rec["l"] = s.l;
    rec["field"] = field_record(s.field);
    rec["size"] = s.size();
    if (s.size() <= 64) {
        Json members = Json::array();
        for (const Subspace& m : s.members) members.push_back(subspace_record(m));
        rec["members"] = members;
    }
    return rec;
}

Json bound_record(const BoundClaim& c) {
    Json rec;
    rec["n"] = c.n;
    rec["q"] = c.q;
    rec["bound"] = big_str(c.bound);
    rec["group_order"] = big_str(c.group_order);
    rec["alpha"] = big_str(c.alpha);
    return rec;
}

Json gl_certificate(const GlVerification& v) {
    Json cert;
    cert["schema_version"] = 1;
    cert["kind"] = "gl_ekr";
    cert["n"] = v.n;
    cert["q"] = v.q;
    cert["mode"] = v.mode == VerifyMode::Exhaustive ? "exhaustive" : "certificate";
    cert["bound"] = big_str(v.claim.bound);
    cert["group_order"] = big_str(v.claim.group_order);
    cert["alpha"] = big_str(v.claim.alpha);
    Json wit;
    wit["clique"] = family_record(v.clique);
    wit["coclique"] = family_record(v.coclique);
    wit["audit"] = audit_record(v.audit);
    cert["witnesses"] = wit;
    cert["verdict"] = v.pass ? "pass" : "fail";
    return cert;
}

Json sn_certificate(const SnVerification& v) {
    Json cert;
    cert["schema_version"] = 1;
    cert["kind"] = "sn_ekr";
    cert["n"] = v.n;
    cert["bound"] = big_str(v.bound);
    cert["max_clique_size"] = v.max_clique_size;
    cert["extremal_checked"] = v.extremal_checked;
    cert["extremal_all_cosets"] =
        v.extremal_all_cosets ? Json(*v.extremal_all_cosets) : Json(nullptr);
    cert["max_clique_count"] = v.max_clique_count ? Json(*v.max_clique_count) : Json(nullptr);
    cert["verdict"] = v.pass ? "pass" : "fail";
    return cert;
}

Json spread_certificate(const Spread& s, const PartitionCheck& partition,
                        const Family* coclique, const CocliqueMaximalityReport* maximality) {
    Json cert;
    cert["schema_version"] = 1;
    cert["kind"] = "spread";
    Json body = spread_record(s);
    cert["spread"] = body;
    Json pc;
    pc["ok"] = partition.ok;
    pc["vectors_checked"] = partition.vectors_checked;
    if (partition.first_bad_key) pc["first_bad_key"] = *partition.first_bad_key;
    cert["partition"] = pc;

    bool verdict = partition.ok;
    if (coclique) {
        Json fam = family_record(*coclique);
        fam["source_spread"] = content_hash(body);
        cert["coclique"] = fam;
    }
    if (maximality) {
        Json mx;
        mx["size"] = maximality->size;
        mx["bound"] = big_str(maximality->bound);
        mx["meets_bound"] = maximality->meets_bound;
        mx["pairwise_trivial"] = maximality->pairwise_trivial;
        mx["covered"] = big_str(maximality->covered);
        mx["capacity"] = big_str(maximality->capacity);
        mx["within_capacity"] = maximality->within_capacity;
        mx["packing_equality"] = maximality->packing_equality;
        if (maximality->exhaustive_alpha) mx["exhaustive_alpha"] = *maximality->exhaustive_alpha;
        cert["maximality"] = mx;
        verdict = verdict && maximality->meets_bound && maximality->pairwise_trivial &&
                  maximality->within_capacity;
    }
    cert["verdict"] = verdict ? "pass" : "fail";
    return cert;
}

Json audit_certificate(int n, unsigned q, const AuditReport& rep) {
    Json cert;
    cert["schema_version"] = 1;
    cert["kind"] = "audit";
    cert["n"] = n;
    cert["q"] = q;
    cert["audit"] = audit_record(rep);
    bool verdict = rep.valid && rep.inequality_holds &&
                   rep.equality_case == AuditReport::Equality::Met;
    cert["verdict"] = verdict ? "pass" : "fail";
    return cert;
}

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return s;
}

} // namespace

std::string content_hash(const Json& cert) {
    Json stripped = cert;
    stripped.erase("timings_ms");
    return hex64(fnv1a(stripped.dump()));
}

std::string gl_stem(int n, unsigned q, VerifyMode mode) {
    return "gl_ekr_n" + std::to_string(n) + "_q" + std::to_string(q) + "_" +
           (mode == VerifyMode::Exhaustive ? "exhaustive" : "certificate");
}

std::string sn_stem(int n, bool extremal) {
    return "sn_ekr_n" + std::to_string(n) + (extremal ? "_ext" : "");
}

std::string spread_stem(int n, int l, unsigned q, bool with_coclique) {
    return "spread_n" + std::to_string(n) + "_l" + std::to_string(l) + "_q" + std::to_string(q) +
           (with_coclique ? "_cc" : "");
}

std::string audit_stem(int n, unsigned q) {
    return "audit_n" + std::to_string(n) + "_q" + std::to_string(q);
}

std::string certificate_stem(const Json& cert) {
    std::string kind = cert.at("kind").get<std::string>();
    if (kind == "gl_ekr") {
        VerifyMode mode = cert.at("mode").get<std::string>() == "exhaustive"
                              ? VerifyMode::Exhaustive
                              : VerifyMode::Certificate;
        return gl_stem(cert.at("n").get<int>(), cert.at("q").get<unsigned>(), mode);
    }
    if (kind == "sn_ekr")
        return sn_stem(cert.at("n").get<int>(), cert.at("extremal_checked").get<bool>());
    if (kind == "spread") {
        const Json& s = cert.at("spread");
        unsigned p = s.at("field").at("p").get<unsigned>();
        unsigned d = s.at("field").at("d").get<unsigned>();
        unsigned q = 1;
        for (unsigned i = 0; i < d; ++i) q *= p;
        return spread_stem(s.at("n").get<int>(), s.at("l").get<int>(), q,
                           cert.contains("coclique"));
    }
    if (kind == "audit")
        return audit_stem(cert.at("n").get<int>(), cert.at("q").get<unsigned>());
    throw Error("unknown certificate kind");
}

std::string certificate_filename(const Json& cert) {
    return certificate_stem(cert) + "_" + content_hash(cert) + ".json";
}

void write_certificate_file(const std::string& path, const Json& cert) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open certificate file for writing: " + path);
    out << cert.dump(2) << "\n";
}

Json read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open certificate file: " + path);
    return Json::parse(in);
}

} // namespace ekrgl
