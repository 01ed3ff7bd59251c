#pragma once

// Knot-table ingestion, batch computation and machine-readable
// reporting.  CSV schema: name;genus;row-major entries comma-separated;
// optional reference unknotting number.

#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotalg/certificates.hpp"
#include "knotalg/seifert.hpp"

#include "json.hpp"

namespace knotalg {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* blanchfield_convention =
    "Bl(e_i,e_j) = [(t-1)(tV-V^T)^{-1}]_{ij} mod Z[t,1/t]";

struct KnotRecord {
    std::string name;
    std::size_t genus = 0;
    std::optional<SeifertMatrix> seifert;  // engaged after validation
    std::optional<long> known_ua;

    const SeifertMatrix& matrix() const { return *seifert; }

    std::string render() const {
        std::ostringstream os;
        os << name << ";" << genus << ";";
        const IntMatrix& v = matrix().matrix();
        bool first = true;
        for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j) {
                if (!first) os << ",";
                os << v.at(i, j).get_str();
                first = false;
            }
        os << ";";
        if (known_ua) os << *known_ua;
        return os.str();
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace detail

inline KnotRecord parse_record(const std::string& line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ';')) fields.push_back(field);
    while (fields.size() < 4) fields.push_back("");
    if (fields.size() > 4)
        throw parse_error("too many fields", lineno);
    KnotRecord rec;
    rec.name = detail::trim(fields[0]);
    if (rec.name.empty()) throw parse_error("missing knot name", lineno);
    try {
        rec.genus = std::stoul(detail::trim(fields[1]));
    } catch (const std::exception&) {
        throw parse_error("bad genus field: " + fields[1], lineno);
    }
    const std::size_t n = 2 * rec.genus;
    std::vector<mpz_class> entries;
    std::stringstream es(fields[2]);
    std::string entry;
    while (std::getline(es, entry, ',')) {
        const std::string t = detail::trim(entry);
        if (t.empty()) throw parse_error("empty matrix entry", lineno);
        try {
            entries.emplace_back(t);
        } catch (const std::exception&) {
            throw parse_error("bad matrix entry: " + t, lineno);
        }
    }
    if (entries.size() != n * n)
        throw parse_error("expected " + std::to_string(n * n) + " matrix entries, got " +
                              std::to_string(entries.size()),
                          lineno);
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.at(i, j) = entries[i * n + j];
    try {
        rec.seifert = validate_seifert(v);
    } catch (const not_seifert& e) {
        throw not_seifert(std::string(e.what()) + " (" + rec.name + ")", lineno);
    }
    const std::string ua = detail::trim(fields[3]);
    if (!ua.empty()) rec.known_ua = std::stol(ua);
    return rec;
}

inline std::vector<KnotRecord> parse_table(std::istream& in) {
    std::vector<KnotRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        records.push_back(parse_record(t, lineno));
    }
    return records;
}

inline std::vector<KnotRecord> parse_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open table file: " + path);
    return parse_table(in);
}

struct KnotReport {
    BoundsReport bounds;
    std::optional<long> known_ua;
    std::string error_message;  // empty on success
};

struct ReportDocument {
    std::string version = tool_version;
    std::string convention = blanchfield_convention;
    std::vector<KnotReport> reports;

    bool has_errors() const {
        for (const auto& r : reports)
            if (!r.error_message.empty()) return true;
        return false;
    }
};

struct ReportOptions {
    BoundsOptions bounds;
    // optional directory with <name>.cert files supplying certificates
    std::string cert_dir;
    unsigned threads = 1;
};

inline std::vector<NamedCertificate> load_certificates_for(const std::string& dir,
                                                           const std::string& name) {
    std::vector<NamedCertificate> certs;
    if (dir.empty()) return certs;
    const std::string path = dir + "/" + name + ".cert";
    std::ifstream in(path);
    if (!in) return certs;
    std::ostringstream body;
    body << in.rdbuf();
    certs.push_back({path, Certificate::parse(body.str())});
    return certs;
}

inline KnotReport report_one(const KnotRecord& rec, const ReportOptions& opt) {
    KnotReport report;
    report.known_ua = rec.known_ua;
    report.bounds.name = rec.name;
    try {
        const auto certs = load_certificates_for(opt.cert_dir, rec.name);
        report.bounds = bounds_report(rec.matrix(), certs, opt.bounds);
        report.bounds.name = rec.name;
    } catch (const std::exception& e) {
        report.error_message = e.what();
    }
    return report;
}

// Batch run: embarrassingly parallel per knot, assembled back in input
// order so the document is identical for any thread count.
inline ReportDocument run_report(const std::vector<KnotRecord>& records,
                                 const ReportOptions& opt = {}) {
    ReportDocument doc;
    doc.reports.resize(records.size());
    if (opt.threads <= 1) {
        for (std::size_t i = 0; i < records.size(); ++i)
            doc.reports[i] = report_one(records[i], opt);
        return doc;
    }
    std::vector<std::future<KnotReport>> futures;
    futures.reserve(records.size());
    for (const KnotRecord& rec : records)
        futures.push_back(std::async(std::launch::async,
                                     [&rec, &opt] { return report_one(rec, opt); }));
    for (std::size_t i = 0; i < futures.size(); ++i) doc.reports[i] = futures[i].get();
    return doc;
}

inline nlohmann::ordered_json report_to_json(const ReportDocument& doc) {
    nlohmann::ordered_json out;
    out["tool"] = "knotalg";
    out["version"] = doc.version;
    out["convention"] = doc.convention;
    out["reports"] = nlohmann::ordered_json::array();
    for (const KnotReport& r : doc.reports) {
        nlohmann::ordered_json j;
        j["name"] = r.bounds.name;
        if (!r.error_message.empty()) {
            j["error"] = r.error_message;
            out["reports"].push_back(j);
            continue;
        }
        j["delta"] = r.bounds.delta.render();
        j["sigma_minus1"] = r.bounds.sigma_minus1;
        j["nakanishi_lb"] = r.bounds.nakanishi_lb;
        j["lower"] = r.bounds.lower;
        j["lower_sources"] = r.bounds.lower_sources;
        j["upper"] = r.bounds.upper;
        j["upper_certified"] = r.bounds.upper_certified;
        j["certificate"] = r.bounds.certificate_ref;
        if (r.bounds.signed_counts) {
            j["n_plus"] = r.bounds.signed_counts->first;
            j["n_minus"] = r.bounds.signed_counts->second;
        } else {
            j["n_plus"] = nullptr;
            j["n_minus"] = nullptr;
        }
        j["status"] = r.bounds.exact ? "exact" : "interval";
        if (r.known_ua) j["known_ua"] = *r.known_ua;
        if (!r.bounds.rejected_certificates.empty())
            j["rejected_certificates"] = r.bounds.rejected_certificates;
        out["reports"].push_back(j);
    }
    return out;
}

inline std::string emit_json(const ReportDocument& doc) {
    return report_to_json(doc).dump(2) + "\n";
}

inline void emit_json(const ReportDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write JSON report: " + path);
    out << emit_json(doc);
}

}  // namespace knotalg
