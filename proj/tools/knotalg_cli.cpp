// Command-line front end: single-knot invariants, certificate
// verification, bound aggregation, and batch JSON reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "knotalg/knotalg.hpp"

namespace {

using namespace knotalg;

struct KnotInput {
    std::string matrix;  // integer matrix grammar, e.g. "-1,1;0,-1"
    std::string table;   // CSV file
    std::string name;    // row name within the table
};

void add_knot_options(CLI::App* cmd, KnotInput& in) {
    cmd->add_option("-m,--matrix", in.matrix,
                    "Seifert matrix, rows ';'-separated, entries ','-separated");
    cmd->add_option("-t,--table", in.table, "knot table CSV file");
    cmd->add_option("-n,--name", in.name, "knot name within the table");
}

SeifertMatrix resolve_knot(const KnotInput& in) {
    if (!in.matrix.empty()) return validate_seifert(IntMatrix::parse(in.matrix));
    if (in.table.empty()) throw io_error("need --matrix or --table/--name");
    for (const KnotRecord& rec : parse_table(in.table))
        if (rec.name == in.name) return rec.matrix();
    throw io_error("knot '" + in.name + "' not found in " + in.table);
}

void write_or_print(const std::string& text, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw io_error("cannot write: " + json_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bounds on the algebraic unknotting number from Seifert matrices"};
    app.require_subcommand(1);

    KnotInput input;
    std::vector<long> primes = default_nakanishi_primes();
    std::string theta_str = "1/2";
    SearchOptions search;
    std::string json_path;
    std::string cert_path;
    std::string cert_dir;
    unsigned threads = 1;

    auto* alex = app.add_subcommand("alex", "Alexander polynomial");
    add_knot_options(alex, input);

    auto* sig = app.add_subcommand("sig", "signature / Levine-Tristram signature");
    add_knot_options(sig, input);
    sig->add_option("--theta", theta_str, "omega = exp(2*pi*i*theta), rational in (0,1)");

    auto* nak = app.add_subcommand("nakanishi", "mod-p Nakanishi lower bound");
    add_knot_options(nak, input);
    nak->add_option("--primes", primes, "primes for the mod-p Smith normal forms");

    auto* blanch = app.add_subcommand("blanchfield", "Blanchfield pairing table");
    add_knot_options(blanch, input);

    auto* certify = app.add_subcommand("certify", "verify a certificate file");
    add_knot_options(certify, input);
    certify->add_option("--cert", cert_path, "certificate file")->required();
    certify->add_option("--radius", search.radius, "diagonalization search radius");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds for one knot");
    add_knot_options(bounds, input);
    bounds->add_option("--primes", primes, "primes for the Nakanishi bound");
    bounds->add_option("--cert", cert_path, "optional certificate file");
    bounds->add_option("--degree-bound", search.degree_bound, "search: max exponent");
    bounds->add_option("--height-bound", search.height_bound, "search: max |coefficient|");
    bounds->add_option("--radius", search.radius, "diagonalization search radius");

    auto* report = app.add_subcommand("report", "batch report over a knot table");
    report->add_option("-t,--table", input.table, "knot table CSV file")->required();
    report->add_option("--primes", primes, "primes for the Nakanishi bound");
    report->add_option("--certs", cert_dir, "directory with <name>.cert files");
    report->add_option("--degree-bound", search.degree_bound, "search: max exponent");
    report->add_option("--height-bound", search.height_bound, "search: max |coefficient|");
    report->add_option("--radius", search.radius, "diagonalization search radius");
    report->add_option("--json", json_path, "write the JSON report to this file");
    report->add_option("--threads", threads, "worker threads (output is thread-count independent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (alex->parsed()) {
            std::cout << alexander_polynomial(resolve_knot(input)).render() << "\n";
        } else if (sig->parsed()) {
            const SeifertMatrix v = resolve_knot(input);
            mpq_class theta(theta_str);
            theta.canonicalize();
            if (theta == mpq_class(1, 2)) {
                std::cout << signature_at_minus_one(v) << "\n";
            } else {
                std::cout << levine_tristram_signature(v, theta).value << "\n";
            }
        } else if (nak->parsed()) {
            const SeifertMatrix v = resolve_knot(input);
            std::cout << nakanishi_lower_bound(Presentation{v.alexander_presentation()}, primes)
                      << "\n";
        } else if (blanch->parsed()) {
            const BlanchfieldPresentation b = blanchfield_table(resolve_knot(input));
            std::cout << "Delta = " << b.delta.render() << "\n";
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    std::cout << "Bl(e" << i + 1 << ",e" << j + 1 << ") = "
                              << b.table[i][j].render() << "\n";
            const PairingAuditReport audit = pairing_audit(b);
            std::cout << "audit: hermitian=" << (audit.hermitian_ok ? "pass" : "FAIL")
                      << " annihilation=" << (audit.annihilation_ok ? "pass" : "FAIL")
                      << " sesquilinear=" << (audit.sesquilinear_ok ? "pass" : "FAIL") << "\n";
        } else if (certify->parsed()) {
            const SeifertMatrix v = resolve_knot(input);
            std::ifstream in(cert_path);
            if (!in) throw io_error("cannot open certificate: " + cert_path);
            std::ostringstream body;
            body << in.rdbuf();
            const Certificate cert = Certificate::parse(body.str());
            try {
                const CheckedBound checked = verify_certificate(v, cert, search.radius);
                std::cout << "PASS: n = " << checked.n << ", (n+, n-) = (" << checked.n_plus
                          << ", " << checked.n_minus << ")\n";
            } catch (const certificate_error& e) {
                std::cout << "FAIL: " << e.what() << "\n";
                return 1;
            }
        } else if (bounds->parsed()) {
            const SeifertMatrix v = resolve_knot(input);
            BoundsOptions opt;
            opt.primes = primes;
            opt.search = search;
            std::vector<NamedCertificate> certs;
            if (!cert_path.empty()) {
                std::ifstream in(cert_path);
                if (!in) throw io_error("cannot open certificate: " + cert_path);
                std::ostringstream body;
                body << in.rdbuf();
                certs.push_back({cert_path, Certificate::parse(body.str())});
            }
            const BoundsReport r = bounds_report(v, certs, opt);
            std::cout << "delta = " << r.delta.render() << "\n";
            std::cout << "sigma(-1) = " << r.sigma_minus1 << "\n";
            std::cout << "nakanishi >= " << r.nakanishi_lb << "\n";
            std::cout << "lower = " << r.lower << ", upper = " << r.upper
                      << (r.upper_certified ? " (certified: " + r.certificate_ref + ")"
                                            : " (generic bound, uncertified)")
                      << "\n";
            if (r.signed_counts)
                std::cout << "(n+, n-) = (" << r.signed_counts->first << ", "
                          << r.signed_counts->second << ")\n";
            std::cout << "status = " << (r.exact ? "exact" : "interval") << "\n";
        } else if (report->parsed()) {
            ReportOptions opt;
            opt.bounds.primes = primes;
            opt.bounds.search = search;
            opt.cert_dir = cert_dir;
            opt.threads = threads;
            const ReportDocument doc = run_report(parse_table(input.table), opt);
            write_or_print(emit_json(doc), json_path);
            if (doc.has_errors()) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
