#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hforge/design.hpp"
#include "hforge/expand.hpp"
#include "hforge/incidence_matrix.hpp"
#include "hforge/sign_matrix.hpp"
#include "hforge/tdm.hpp"

namespace hforge {

struct storage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One catalogued structure: the canonical hash keys dedup, the matrix text
// (io.hpp format) is the payload everything can be re-derived from.
struct CatalogRecord {
    std::string kind;       // "design2" | "design3" | "hadamard"
    std::string params;     // "t-(v,k,lambda)" for designs, the order for matrices
    std::string canon_hash; // 128-bit hex of the canonical certificate bytes
    unsigned long long aut_order = 1;
    std::string source;     // provenance tag (tdm id, mode, fixed F, ...)
    std::string matrix;     // text payload
};

CatalogRecord record_for_design(const IncidenceMatrix& D, const DesignParams& p,
                                std::string source);
CatalogRecord record_for_hadamard(const SignMatrix& M, std::string source);

// Append-only catalog of canonical-class representatives. With a path the
// records live in a JSONL file (one record object per line) that is loaded
// on open and appended to on insert; the hash index is rebuilt in memory.
class Catalog {
public:
    Catalog() = default;
    explicit Catalog(const std::string& path);

    // True iff no record with the same canonical bytes exists; a hash
    // collision falls back to comparing re-derived certificate bytes.
    bool dedup_insert(const CatalogRecord& r);

    const std::vector<CatalogRecord>& records() const { return recs_; }
    std::size_t size() const { return recs_.size(); }

    // Re-derives every record's certificate from its payload; returns the
    // number of records whose stored hash or aut_order disagrees.
    std::size_t audit() const;

private:
    std::string path_;
    std::vector<CatalogRecord> recs_;
    std::map<std::string, std::vector<std::size_t>> index_; // hash -> rec indices
};

// Certificate bytes re-derived from a record's matrix payload.
std::vector<std::uint8_t> record_certificate_bytes(const CatalogRecord& r);

// Automorphism order frequencies, ascending by order; kind_filter "" = all.
std::vector<std::pair<unsigned long long, std::size_t>> spectrum(
    const Catalog& c, const std::string& kind_filter = "");

// "order (frequency)" items joined by ", ".
std::string format_spectrum(
    const std::vector<std::pair<unsigned long long, std::size_t>>& s);

// Cross-catalog dedup: inserts every record of each source into dst.
std::size_t merge_catalogs(Catalog& dst, const std::vector<const Catalog*>& sources);

struct PipelineRow {
    int fixed = 0;
    std::uint64_t tdms = 0;
    std::uint64_t designs2 = 0;
    std::uint64_t hadamards = 0;
    std::uint64_t designs3 = 0;
};

struct PipelineSummary {
    std::vector<PipelineRow> rows;
    Catalog designs2, hadamards, designs3;
};

// enumerate-tdm -> expand -> dedup 2-designs -> derived Hadamard matrices
// -> dedup -> derived 3-designs -> dedup. limit > 0 caps raw expansions
// per TDM (0 = exhaustive).
PipelineSummary pipeline(const DesignParams& p, const std::vector<int>& fixed,
                         ExpandMode mode, int threads = 1, std::uint64_t limit = 0);

} // namespace hforge
