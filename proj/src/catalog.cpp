#include "hforge/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "hforge/canon.hpp"
#include "hforge/hadamard.hpp"
#include "hforge/io.hpp"

namespace hforge {

namespace {

std::string design_params_string(const DesignParams& p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d-(%ld,%ld,%ld)", p.t, p.v, p.k, p.lambda);
    return buf;
}

CanonicalCertificate record_certificate(const CatalogRecord& r) {
    if (r.kind == "hadamard") return hadamard_certificate(sign_from_text(r.matrix));
    return design_certificate(incidence_from_text(r.matrix));
}

nlohmann::json to_json(const CatalogRecord& r) {
    return {{"kind", r.kind},         {"params", r.params},
            {"canon_hash", r.canon_hash}, {"aut_order", r.aut_order},
            {"source", r.source},     {"matrix", r.matrix}};
}

CatalogRecord from_json(const nlohmann::json& j) {
    CatalogRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.canon_hash = j.at("canon_hash").get<std::string>();
    r.aut_order = j.at("aut_order").get<unsigned long long>();
    r.source = j.at("source").get<std::string>();
    r.matrix = j.at("matrix").get<std::string>();
    return r;
}

} // namespace

CatalogRecord record_for_design(const IncidenceMatrix& D, const DesignParams& p,
                                std::string source) {
    auto cert = design_certificate(D);
    CatalogRecord r;
    r.kind = p.t >= 3 ? "design3" : "design2";
    r.params = design_params_string(p);
    r.canon_hash = hash128(cert.form).hex();
    r.aut_order = cert.aut_order;
    r.source = std::move(source);
    r.matrix = to_text(D);
    return r;
}

CatalogRecord record_for_hadamard(const SignMatrix& M, std::string source) {
    auto cert = hadamard_certificate(M);
    CatalogRecord r;
    r.kind = "hadamard";
    r.params = std::to_string(M.n_rows());
    r.canon_hash = hash128(cert.form).hex();
    r.aut_order = cert.aut_order;
    r.source = std::move(source);
    r.matrix = to_text(M);
    return r;
}

std::vector<std::uint8_t> record_certificate_bytes(const CatalogRecord& r) {
    return record_certificate(r).form;
}

Catalog::Catalog(const std::string& path) : path_(path) {
    std::ifstream in(path_);
    if (!in) return; // a fresh catalog; the file appears on first insert
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw storage_error("catalog " + path_ + ": bad JSON at line " +
                                std::to_string(lineno));
        recs_.push_back(from_json(j));
        index_[recs_.back().canon_hash].push_back(recs_.size() - 1);
    }
}

bool Catalog::dedup_insert(const CatalogRecord& r) {
    auto it = index_.find(r.canon_hash);
    if (it != index_.end()) {
        // hash collisions are settled on the certificate bytes themselves
        auto bytes = record_certificate_bytes(r);
        for (std::size_t i : it->second)
            if (record_certificate_bytes(recs_[i]) == bytes) return false;
    }
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw storage_error("catalog " + path_ + ": cannot open for append");
        out << to_json(r).dump() << '\n';
        if (!out) throw storage_error("catalog " + path_ + ": write failed");
    }
    recs_.push_back(r);
    index_[r.canon_hash].push_back(recs_.size() - 1);
    return true;
}

std::size_t Catalog::audit() const {
    std::size_t bad = 0;
    for (const auto& r : recs_) {
        auto cert = record_certificate(r);
        if (hash128(cert.form).hex() != r.canon_hash || cert.aut_order != r.aut_order)
            ++bad;
    }
    return bad;
}

std::vector<std::pair<unsigned long long, std::size_t>> spectrum(
    const Catalog& c, const std::string& kind_filter) {
    std::map<unsigned long long, std::size_t> freq;
    for (const auto& r : c.records())
        if (kind_filter.empty() || r.kind == kind_filter) ++freq[r.aut_order];
    return {freq.begin(), freq.end()};
}

std::string format_spectrum(
    const std::vector<std::pair<unsigned long long, std::size_t>>& s) {
    std::string out;
    for (const auto& [order, n] : s) {
        if (!out.empty()) out += ", ";
        out += std::to_string(order) + " (" + std::to_string(n) + ")";
    }
    return out;
}

std::size_t merge_catalogs(Catalog& dst, const std::vector<const Catalog*>& sources) {
    std::size_t inserted = 0;
    for (const Catalog* src : sources)
        for (const auto& r : src->records())
            if (dst.dedup_insert(r)) ++inserted;
    return inserted;
}

PipelineSummary pipeline(const DesignParams& p, const std::vector<int>& fixed,
                         ExpandMode mode, int threads, std::uint64_t limit) {
    if (!p.symmetric()) throw invalid_parameters("pipeline: parameters must be symmetric");
    PipelineSummary s;
    const char* mode_name = mode == ExpandMode::Cyc ? "cyc" : "acyc";
    for (int F : fixed) {
        if (F < 0 || (p.v - F) % 3 != 0 || F > p.v)
            throw invalid_parameters("pipeline: fixed count must match v mod 3");
        OrbitProfile profile{F, static_cast<int>((p.v - F) / 3)};
        auto tdms = enumerate_tdms(p, profile, threads);

        PipelineRow row;
        row.fixed = F;
        row.tdms = tdms.size();

        std::size_t first_design = s.designs2.size();
        for (std::size_t ti = 0; ti < tdms.size(); ++ti) {
            std::string src = "F=" + std::to_string(F) + " tdm=" + std::to_string(ti) +
                              " mode=" + mode_name;
            std::uint64_t raw = 0;
            expand_tdm(tdms[ti], p, mode,
                       [&](const IncidenceMatrix& D) {
                           s.designs2.dedup_insert(record_for_design(D, p, src));
                           return limit == 0 || ++raw < limit;
                       },
                       threads);
        }
        row.designs2 = s.designs2.size() - first_design;

        std::size_t first_had = s.hadamards.size();
        for (std::size_t i = first_design; i < s.designs2.size(); ++i) {
            const auto& rec = s.designs2.records()[i];
            SignMatrix H = design2_to_hadamard(incidence_from_text(rec.matrix));
            s.hadamards.dedup_insert(record_for_hadamard(H, rec.source));
        }
        row.hadamards = s.hadamards.size() - first_had;

        std::size_t first_d3 = s.designs3.size();
        long n = p.v + 1;
        DesignParams p3(3, n, n / 2, n / 4 - 1);
        for (std::size_t i = first_had; i < s.hadamards.size(); ++i) {
            const auto& rec = s.hadamards.records()[i];
            SignMatrix H = sign_from_text(rec.matrix);
            for (const auto& D3 : hadamard_to_3designs(H))
                s.designs3.dedup_insert(record_for_design(D3, p3, rec.source));
        }
        row.designs3 = s.designs3.size() - first_d3;

        s.rows.push_back(row);
    }
    return s;
}

} // namespace hforge
