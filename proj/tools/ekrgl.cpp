#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ekrgl/certificate.hpp"
#include "ekrgl/ekr.hpp"
#include "ekrgl/errors.hpp"
#include "ekrgl/spread.hpp"
#include "ekrgl/symbase.hpp"

namespace fs = std::filesystem;
using namespace ekrgl;

namespace {

struct GlobalOpts {
    bool json = false;
    std::string output_dir;
    bool force = false;
    unsigned jobs = 1;
    std::uint64_t max_vertices = 512;
    std::uint64_t seed = 17;
};

struct Emitted {
    Json cert;
    std::string path;
    bool cached = false;
    double ms = 0.0;
};

bool is_hex16(const std::string& s) {
    if (s.size() != 16) return false;
    for (char c : s)
        if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// {stem}_{16-hex}.json inside dir, if present.
std::optional<std::string> find_cached(const std::string& dir, const std::string& stem) {
    std::error_code ec;
    std::vector<std::string> hits;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.size() != stem.size() + 1 + 16 + 5) continue;
        if (name.compare(0, stem.size() + 1, stem + "_") != 0) continue;
        if (name.compare(name.size() - 5, 5, ".json") != 0) continue;
        if (!is_hex16(name.substr(stem.size() + 1, 16))) continue;
        hits.push_back(entry.path().string());
    }
    if (hits.empty()) return std::nullopt;
    std::sort(hits.begin(), hits.end());
    return hits.front();
}

template <typename ComputeFn>
Emitted emit_with_cache(const GlobalOpts& g, const std::string& stem, ComputeFn&& compute) {
    fs::create_directories(g.output_dir);
    if (!g.force) {
        if (std::optional<std::string> hit = find_cached(g.output_dir, stem)) {
            Emitted e;
            e.cert = read_certificate_file(*hit);
            e.path = *hit;
            e.cached = true;
            return e;
        }
    }
    auto t0 = std::chrono::steady_clock::now();
    Json cert = compute();
    auto t1 = std::chrono::steady_clock::now();
    Emitted e;
    e.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    Json timings;
    timings["total"] = e.ms;
    cert["timings_ms"] = timings;
    e.path = (fs::path(g.output_dir) / certificate_filename(cert)).string();
    // write via a private temp name so concurrent jobs never interleave
    std::ostringstream tmp;
    tmp << e.path << ".tmp." << std::this_thread::get_id();
    write_certificate_file(tmp.str(), cert);
    fs::rename(tmp.str(), e.path);
    e.cert = std::move(cert);
    return e;
}

// -------------------------------------------------------------------------
// jobs (shared between single commands and campaigns)

struct JobSpec {
    std::string kind; // gl_ekr | sn_ekr | spread | audit
    int n = 0;
    unsigned q = 0;
    int l = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    bool extremal = false;
    bool emit_coclique = false;
    std::string label;
};

Family certificate_coclique(const GroupParams& params) {
    Spread s = construct_spread(params.n, 2 * params.n, params.field);
    NormalizeResult norm = normalize_spread(s, 0, s.size() - 1);
    return extract_coclique(norm.spread);
}

Emitted run_job(const JobSpec& job, const GlobalOpts& g) {
    if (job.kind == "gl_ekr") {
        return emit_with_cache(g, gl_stem(job.n, job.q, job.mode), [&] {
            GroupParams params{job.n, field_of_order(job.q)};
            VerifyOptions opts;
            opts.max_vertices = g.max_vertices;
            opts.seed = g.seed;
            return gl_certificate(verify_theorem(params, job.mode, opts));
        });
    }
    if (job.kind == "sn_ekr") {
        return emit_with_cache(g, sn_stem(job.n, job.extremal),
                               [&] { return sn_certificate(verify_sn(job.n, job.extremal)); });
    }
    if (job.kind == "spread") {
        return emit_with_cache(g, spread_stem(job.n, job.l, job.q, job.emit_coclique), [&] {
            FieldPtr field = field_of_order(job.q);
            Spread s = construct_spread(job.n, job.l, field);
            PartitionCheck partition = verify_partition(s);
            if (!job.emit_coclique) return spread_certificate(s, partition, nullptr, nullptr);
            NormalizeResult norm = normalize_spread(s, 0, s.size() - 1);
            Family coclique = extract_coclique(norm.spread);
            CocliqueMaximalityReport maximality = coclique_maximality_audit(coclique);
            return spread_certificate(s, partition, &coclique, &maximality);
        });
    }
    if (job.kind == "audit") {
        return emit_with_cache(g, audit_stem(job.n, job.q), [&] {
            GroupParams params{job.n, field_of_order(job.q)};
            VecF e1;
            e1.field = params.field;
            e1.e.assign(static_cast<std::size_t>(params.n), 0);
            e1.e[0] = 1;
            Family clique = build_extremal(params, e1);
            Family coclique = certificate_coclique(params);
            return audit_certificate(job.n, job.q, clique_coclique_audit(clique, coclique));
        });
    }
    throw Error("unknown job kind: " + job.kind);
}

std::string job_sizes(const Json& cert) {
    std::string kind = cert.at("kind").get<std::string>();
    std::ostringstream out;
    if (kind == "gl_ekr") {
        const Json& audit = cert.at("witnesses").at("audit");
        out << "C=" << audit.at("clique_size").get<std::size_t>()
            << " A=" << audit.at("coclique_size").get<std::size_t>();
    } else if (kind == "sn_ekr") {
        out << "max=" << cert.at("max_clique_size").get<std::size_t>();
        if (!cert.at("max_clique_count").is_null())
            out << " cliques=" << cert.at("max_clique_count").get<std::size_t>();
    } else if (kind == "spread") {
        out << "members=" << cert.at("spread").at("size").get<std::size_t>();
        if (cert.contains("coclique"))
            out << " A=" << cert.at("coclique").at("size").get<std::size_t>();
    } else if (kind == "audit") {
        const Json& audit = cert.at("audit");
        out << "C=" << audit.at("clique_size").get<std::size_t>()
            << " A=" << audit.at("coclique_size").get<std::size_t>();
    }
    return out.str();
}

int finish_single(const Emitted& e, const GlobalOpts& g, const std::string& heading) {
    std::string verdict = e.cert.at("verdict").get<std::string>();
    std::cout << heading << ": " << job_sizes(e.cert) << " verdict=" << verdict
              << (e.cached ? " (cached)" : "") << " -> " << e.path << "\n";
    if (g.json) std::cout << e.cert.dump(2) << "\n";
    return verdict == "pass" ? 0 : 1;
}

// -------------------------------------------------------------------------
// commands

int run_bound(int n, unsigned q, const GlobalOpts& g) {
    BoundClaim claim = ekr_bound(n, q);
    std::cout << "bound=" << big_str(claim.bound) << " |GL|=" << big_str(claim.group_order)
              << " alpha=" << big_str(claim.alpha) << "\n";
    if (g.json) std::cout << bound_record(claim).dump(2) << "\n";
    return 0;
}

int run_spread(int n, int l, unsigned q, bool emit_coclique, const GlobalOpts& g) {
    if (l % std::max(n, 1) != 0 || n < 1 || l < 1)
        throw NotDivisible("n must divide l");
    if (emit_coclique && l != 2 * n)
        throw Error("--emit-coclique requires l = 2n");
    JobSpec job;
    job.kind = "spread";
    job.n = n;
    job.l = l;
    job.q = q;
    job.emit_coclique = emit_coclique;
    Emitted e = run_job(job, g);
    std::ostringstream heading;
    heading << "spread n=" << n << " l=" << l << " q=" << q;
    return finish_single(e, g, heading.str());
}

int run_verify_gl(int n, unsigned q, const std::string& mode, const GlobalOpts& g) {
    JobSpec job;
    job.kind = "gl_ekr";
    job.n = n;
    job.q = q;
    job.mode = mode == "certificate" ? VerifyMode::Certificate : VerifyMode::Exhaustive;
    Emitted e = run_job(job, g);
    std::ostringstream heading;
    heading << "verify gl n=" << n << " q=" << q << " mode=" << mode;
    return finish_single(e, g, heading.str());
}

int run_verify_sn(int n, bool extremal, const GlobalOpts& g) {
    JobSpec job;
    job.kind = "sn_ekr";
    job.n = n;
    job.extremal = extremal;
    Emitted e = run_job(job, g);
    std::ostringstream heading;
    heading << "verify sn n=" << n << (extremal ? " extremal" : "");
    return finish_single(e, g, heading.str());
}

// -------------------------------------------------------------------------
// campaign

bool parse_bool_token(const std::string& v, bool& out) {
    if (v == "1" || v == "true") { out = true; return true; }
    if (v == "0" || v == "false") { out = false; return true; }
    return false;
}

std::vector<JobSpec> parse_campaign(const std::string& path, const GlobalOpts& g) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open campaign config: " + path);
    std::vector<JobSpec> jobs;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error("campaign config line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = line.substr(0, line.find('#'));
        std::istringstream tokens(text);
        std::string tok;
        JobSpec job;
        bool any = false, has_n = false, has_q = false, has_l = false;
        std::string mode_str;
        while (tokens >> tok) {
            any = true;
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos) fail("expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            try {
                if (key == "kind") job.kind = value;
                else if (key == "n") { job.n = std::stoi(value); has_n = true; }
                else if (key == "q") { job.q = static_cast<unsigned>(std::stoul(value)); has_q = true; }
                else if (key == "l") { job.l = std::stoi(value); has_l = true; }
                else if (key == "mode") mode_str = value;
                else if (key == "extremal") {
                    if (!parse_bool_token(value, job.extremal)) fail("extremal must be 0/1");
                } else if (key == "emit_coclique") {
                    if (!parse_bool_token(value, job.emit_coclique)) fail("emit_coclique must be 0/1");
                } else fail("unknown key '" + key + "'");
            } catch (const std::invalid_argument&) {
                fail("value for '" + key + "' is not a number: '" + value + "'");
            } catch (const std::out_of_range&) {
                fail("value for '" + key + "' is out of range: '" + value + "'");
            }
        }
        if (!any) continue;

        // reject anything violating the target module's preconditions now,
        // before any job runs
        if (job.kind.empty()) fail("missing kind=gl_ekr|sn_ekr|spread|audit");
        if (!has_n || job.n < 1) fail("every job needs n >= 1");
        if (job.kind == "gl_ekr" || job.kind == "spread" || job.kind == "audit") {
            if (!has_q) fail(job.kind + " needs q");
            try {
                field_of_order(job.q);
            } catch (const Error& e) {
                fail(std::string(e.what()));
            }
        }
        if (job.kind == "gl_ekr") {
            if (!mode_str.empty() && mode_str != "exhaustive" && mode_str != "certificate")
                fail("mode must be exhaustive or certificate");
            job.mode = mode_str == "certificate" ? VerifyMode::Certificate : VerifyMode::Exhaustive;
            if (job.mode == VerifyMode::Exhaustive &&
                gl_order(job.n, job.q) > BigInt(g.max_vertices))
                fail("group order exceeds --max-vertices for exhaustive mode");
        } else if (job.kind == "sn_ekr") {
            if (job.n > 5) fail("sn_ekr is exhaustive and requires n <= 5");
        } else if (job.kind == "spread") {
            if (!has_l) fail("spread needs l");
            if (job.l < 1 || job.l % job.n != 0) fail("n must divide l");
            if (job.emit_coclique && job.l != 2 * job.n) fail("emit_coclique requires l = 2n");
            BigInt cells = big_pow(job.q, static_cast<unsigned>(job.l));
            if (cells > BigInt(kPartitionCap)) fail("q^l exceeds the partition verification cap");
        } else if (job.kind != "audit") {
            fail("unknown kind '" + job.kind + "'");
        }

        std::ostringstream label;
        label << "kind=" << job.kind << " n=" << job.n;
        if (job.kind == "gl_ekr" || job.kind == "spread" || job.kind == "audit")
            label << " q=" << job.q;
        if (job.kind == "spread") label << " l=" << job.l;
        if (job.kind == "gl_ekr")
            label << " mode=" << (job.mode == VerifyMode::Certificate ? "certificate" : "exhaustive");
        if (job.kind == "sn_ekr" && job.extremal) label << " extremal=1";
        if (job.kind == "spread" && job.emit_coclique) label << " emit_coclique=1";
        job.label = label.str();
        jobs.push_back(std::move(job));
    }
    if (jobs.empty()) throw Error("campaign config has no jobs");
    return jobs;
}

int run_campaign(const std::string& config, const GlobalOpts& g) {
    std::vector<JobSpec> jobs = parse_campaign(config, g);
    struct Row {
        Emitted emitted;
        std::string error;
    };
    std::vector<Row> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                rows[i].emitted = run_job(jobs[i], g);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    std::size_t nthreads = std::min<std::size_t>(std::max(1u, g.jobs), jobs.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::printf("%-44s %-8s %-22s %10s  %s\n", "job", "verdict", "sizes", "ms", "certificate");
    bool all_pass = true;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Row& row = rows[i];
        if (!row.error.empty()) {
            std::printf("%-44s %-8s %-22s %10s  %s\n", jobs[i].label.c_str(), "error", "-", "-",
                        row.error.c_str());
            all_pass = false;
            continue;
        }
        std::string verdict = row.emitted.cert.at("verdict").get<std::string>();
        std::string sizes = job_sizes(row.emitted.cert);
        char ms[32];
        if (row.emitted.cached)
            std::snprintf(ms, sizeof ms, "%s", "cached");
        else
            std::snprintf(ms, sizeof ms, "%.1f", row.emitted.ms);
        std::printf("%-44s %-8s %-22s %10s  %s\n", jobs[i].label.c_str(), verdict.c_str(),
                    sizes.c_str(), ms, row.emitted.path.c_str());
        all_pass = all_pass && verdict == "pass";
    }
    return all_pass ? 0 : 1;
}

constexpr const char* kCampaignGrammar =
    "Campaign config: one job per line, '#' starts a comment.  Each line is\n"
    "whitespace-separated key=value tokens:\n"
    "  kind=gl_ekr n=2 q=3 mode=exhaustive|certificate\n"
    "  kind=sn_ekr n=4 extremal=0|1\n"
    "  kind=spread n=2 l=4 q=2 emit_coclique=0|1\n"
    "  kind=audit n=2 q=5\n"
    "Every job is validated against the target module's preconditions before\n"
    "any job runs; a bad line reports its number and exits with code 2.\n";

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    const char* env_dir = std::getenv("EKRGL_OUTPUT_DIR");
    g.output_dir = env_dir && *env_dir ? env_dir : ".";

    CLI::App app{"exact verification of the Erdos-Ko-Rado bound for invertible-matrix groups"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "also print certificates as JSON to stdout");
    app.add_option("--output-dir", g.output_dir,
                   "certificate directory (default: $EKRGL_OUTPUT_DIR or .)");
    app.add_flag("--force", g.force, "recompute even when a cached certificate exists");
    app.add_option("--jobs", g.jobs, "max concurrent campaign jobs")->check(CLI::PositiveNumber);
    app.add_option("--max-vertices", g.max_vertices, "group-size cap for exhaustive searches");
    app.add_option("--seed", g.seed, "seed for sampled transitivity checks");

    int n = 0, l = 0;
    unsigned q = 0;
    std::string mode = "exhaustive";
    bool extremal = false, emit_coclique = false;
    std::string config;

    CLI::App* bound = app.add_subcommand("bound", "print the intersecting-family bound for GL_n(F_q)");
    bound->add_option("-n", n, "matrix dimension")->required();
    bound->add_option("-q", q, "field order (prime power)")->required();

    CLI::App* spread = app.add_subcommand("spread", "construct and verify an n-spread of F_q^l");
    spread->add_option("-n", n, "subspace dimension")->required();
    spread->add_option("-l", l, "ambient dimension (n must divide l)")->required();
    spread->add_option("-q", q, "field order (prime power)")->required();
    spread->add_flag("--emit-coclique", emit_coclique,
                     "normalize, extract the coclique and audit maximality (requires l = 2n)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification job and write a certificate");
    verify->require_subcommand(1);
    CLI::App* vgl = verify->add_subcommand("gl", "verify the bound for GL_n(F_q)");
    vgl->add_option("-n", n, "matrix dimension")->required();
    vgl->add_option("-q", q, "field order (prime power)")->required();
    vgl->add_option("--mode", mode, "exhaustive (search) or certificate (constructed witnesses)")
        ->check(CLI::IsMember({"exhaustive", "certificate"}));
    CLI::App* vsn = verify->add_subcommand("sn", "verify the (n-1)! baseline on S_n");
    vsn->add_option("-n", n, "number of points (<= 5)")->required();
    vsn->add_flag("--extremal", extremal, "also check all maximum cliques are point-map cosets (n <= 4)");

    CLI::App* campaign = app.add_subcommand("campaign", "run every job in a config file");
    campaign->add_option("config", config, "campaign config file")
        ->required()
        ->check(CLI::ExistingFile);
    campaign->footer(kCampaignGrammar);

    for (CLI::App* sub : {bound, spread, verify, vgl, vsn, campaign}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bound) return run_bound(n, q, g);
        if (*spread) return run_spread(n, l, q, emit_coclique, g);
        if (*verify) {
            if (*vgl) return run_verify_gl(n, q, mode, g);
            return run_verify_sn(n, extremal, g);
        }
        return run_campaign(config, g);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
