#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hforge/canon.hpp"
#include "hforge/catalog.hpp"
#include "hforge/design.hpp"
#include "hforge/expand.hpp"
#include "hforge/hadamard.hpp"
#include "hforge/io.hpp"
#include "hforge/regularize.hpp"
#include "hforge/tdm.hpp"

using namespace hforge;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_storage = 3;

DesignParams params_from_csv(const std::string& csv) {
    long v, k, lambda;
    char extra;
    if (std::sscanf(csv.c_str(), "%ld,%ld,%ld%c", &v, &k, &lambda, &extra) != 3)
        throw invalid_parameters("--params expects v,k,lambda");
    return DesignParams(2, v, k, lambda);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw storage_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw storage_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw storage_error("write to " + path + " failed");
}

int default_threads() {
    if (const char* env = std::getenv("HFORGE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

OrbitProfile profile_for(const DesignParams& p, long fixed) {
    if (fixed < 0 || fixed > p.v || (p.v - fixed) % 3 != 0)
        throw invalid_parameters("fixed count must be congruent to v mod 3");
    return OrbitProfile{fixed, (p.v - fixed) / 3};
}

int cmd_enumerate_tdm(const std::string& params, long fixed, bool all_fixed,
                      const std::string& out, int threads) {
    DesignParams p = params_from_csv(params);
    std::vector<OrbitProfile> profiles;
    if (all_fixed)
        profiles = orbit_profiles(p, default_max_fixed(p));
    else
        profiles.push_back(profile_for(p, fixed));

    std::string text;
    std::size_t total = 0;
    for (const auto& pr : profiles) {
        auto tdms = enumerate_tdms(p, pr, threads);
        total += tdms.size();
        for (const auto& T : tdms) {
            text += to_text(T);
            text += '\n';
        }
        std::printf("F=%ld: %zu TDMs\n", pr.fixed_points, tdms.size());
    }
    if (!out.empty()) write_file(out, text);
    std::printf("total: %zu\n", total);
    return exit_ok;
}

int cmd_expand(const std::string& tdm_file, const std::string& params,
               const std::string& mode_name, const std::string& out,
               std::uint64_t limit, bool serial, int threads) {
    DesignParams p = params_from_csv(params);
    ExpandMode mode = mode_name == "acyc" ? ExpandMode::ACyc : ExpandMode::Cyc;
    auto tdms = tdms_from_text(read_file(tdm_file));
    if (tdms.empty()) throw invalid_parameters("no TDMs in " + tdm_file);

    std::ofstream os;
    if (!out.empty()) {
        os.open(out);
        if (!os) throw storage_error("cannot open " + out + " for writing");
    }
    std::uint64_t emitted = 0;
    for (const auto& T : tdms) {
        emitted += expand_tdm(T, p, mode,
                              [&](const IncidenceMatrix& D) {
                                  if (os.is_open()) os << to_text(D) << '\n';
                                  return limit == 0 || emitted + 1 < limit;
                              },
                              serial ? 1 : threads);
        if (limit != 0 && emitted >= limit) break;
    }
    if (os.is_open() && !os) throw storage_error("write to " + out + " failed");
    std::printf("emitted: %llu\n", static_cast<unsigned long long>(emitted));
    return exit_ok;
}

int cmd_classify(const std::string& in, const std::string& kind,
                 const std::string& report) {
    auto ms = read_matrix_file(in);
    std::map<std::vector<std::uint8_t>, std::pair<unsigned long long, std::string>> classes;
    for (const auto& m : ms) {
        CanonicalCertificate cert;
        std::string text;
        if (kind == "hadamard") {
            if (m.kind != 'H') throw invalid_parameters("expected sign matrices in " + in);
            cert = hadamard_certificate(m.sign);
            text = to_text(m.sign);
        } else {
            if (m.kind != 'D') throw invalid_parameters("expected incidence matrices in " + in);
            cert = design_certificate(m.incidence);
            text = to_text(m.incidence);
        }
        classes.emplace(cert.form, std::make_pair(cert.aut_order, std::move(text)));
    }
    std::printf("inputs: %zu\nclasses: %zu\n", ms.size(), classes.size());
    if (report == "spectrum") {
        std::map<unsigned long long, std::size_t> freq;
        for (const auto& [form, v] : classes) ++freq[v.first];
        std::string line = format_spectrum({freq.begin(), freq.end()});
        std::printf("spectrum: %s\n", line.c_str());
    }
    for (const auto& [form, v] : classes) std::printf("%s\n", v.second.c_str());
    return exit_ok;
}

int cmd_convert(const std::string& in, const std::string& out, const std::string& to) {
    auto ms = read_matrix_file(in);
    std::vector<AnyMatrix> result;
    for (const auto& m : ms) {
        if (to == "2design") {
            if (m.kind != 'H') throw invalid_parameters("--to 2design needs sign matrices");
            result.push_back({'D', {}, hadamard_to_2design(m.sign)});
        } else if (to == "hadamard") {
            if (m.kind != 'D') throw invalid_parameters("--to hadamard needs incidence matrices");
            result.push_back({'H', design2_to_hadamard(m.incidence), {}});
        } else { // 3design
            if (m.kind != 'H') throw invalid_parameters("--to 3design needs sign matrices");
            for (auto& D : hadamard_to_3designs(m.sign))
                result.push_back({'D', {}, std::move(D)});
        }
    }
    std::ofstream os(out);
    if (!os) throw storage_error("cannot open " + out + " for writing");
    write_matrix_file(os, result);
    if (!os) throw storage_error("write to " + out + " failed");
    std::printf("wrote %zu matrices\n", result.size());
    return exit_ok;
}

int cmd_regularize(const std::string& in, const std::string& out,
                   std::uint64_t timeout_ms) {
    auto ms = read_matrix_file(in);
    std::vector<SignMatrix> mats;
    for (const auto& m : ms) {
        if (m.kind != 'H') throw invalid_parameters("regularize expects sign matrices");
        mats.push_back(m.sign);
    }
    auto verdicts = regularize_batch(mats, timeout_ms);
    std::ofstream os(out);
    if (!os) throw storage_error("cannot open " + out + " for writing");
    for (const auto& v : verdicts) {
        nlohmann::json j{{"index", v.index}, {"verdict", v.verdict}};
        if (v.verdict == "regular") j["s"] = v.s;
        if (v.verdict == "error") j["error"] = v.error;
        os << j.dump() << '\n';
    }
    if (!os) throw storage_error("write to " + out + " failed");
    std::size_t regular = 0;
    for (const auto& v : verdicts) regular += v.verdict == "regular";
    std::printf("matrices: %zu regular: %zu\n", verdicts.size(), regular);
    return exit_ok;
}

int cmd_pipeline(const std::string& params, const std::string& fixed_csv,
                 const std::string& mode_name, std::uint64_t limit,
                 const std::string& out_dir, int threads) {
    DesignParams p = params_from_csv(params);
    std::vector<int> fixed;
    std::stringstream ss(fixed_csv);
    for (std::string tok; std::getline(ss, tok, ',');) fixed.push_back(std::stoi(tok));
    if (fixed.empty()) throw invalid_parameters("--fixed expects F[,F...]");
    ExpandMode mode = mode_name == "acyc" ? ExpandMode::ACyc : ExpandMode::Cyc;

    auto s = pipeline(p, fixed, mode, threads, limit);
    std::printf("%6s %8s %10s %10s %10s\n", "F", "TDMs", "2-designs", "hadamard", "3-designs");
    for (const auto& r : s.rows)
        std::printf("%6d %8llu %10llu %10llu %10llu\n", r.fixed,
                    static_cast<unsigned long long>(r.tdms),
                    static_cast<unsigned long long>(r.designs2),
                    static_cast<unsigned long long>(r.hadamards),
                    static_cast<unsigned long long>(r.designs3));
    if (!out_dir.empty()) {
        auto dump = [&](const Catalog& c, const std::string& name) {
            Catalog file(out_dir + "/" + name + ".jsonl");
            merge_catalogs(file, {&c});
        };
        dump(s.designs2, "designs2");
        dump(s.hadamards, "hadamard");
        dump(s.designs3, "designs3");
    }
    return exit_ok;
}

int cmd_merge(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<Catalog> srcs;
    for (const auto& path : inputs) srcs.emplace_back(path);
    Catalog dst(out);
    std::vector<const Catalog*> ptrs;
    for (const auto& c : srcs) ptrs.push_back(&c);
    std::size_t inserted = merge_catalogs(dst, ptrs);
    std::printf("inserted: %zu total: %zu\n", inserted, dst.size());
    return exit_ok;
}

int cmd_stats(const std::string& in, const std::string& kind) {
    Catalog c(in);
    std::map<std::string, std::size_t> by_kind;
    for (const auto& r : c.records()) ++by_kind[r.kind];
    std::printf("records: %zu\n", c.size());
    for (const auto& [k, n] : by_kind) std::printf("  %s: %zu\n", k.c_str(), n);
    std::string line = format_spectrum(spectrum(c, kind));
    std::printf("spectrum: %s\n", line.c_str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard matrix and design construction toolkit"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker thread count (env HFORGE_THREADS)");

    std::string params, fixed_csv, tdm_file, in, out, out_dir;
    std::string mode = "cyc", kind = "hadamard", report, to;
    long fixed = -1;
    bool all_fixed = false, serial = false;
    std::uint64_t limit = 0, timeout_ms = 0;
    std::vector<std::string> merge_inputs;

    auto* enumerate = app.add_subcommand("enumerate-tdm", "enumerate orbit matrices");
    enumerate->add_option("--params", params, "v,k,lambda")->required();
    enumerate->add_option("--fixed", fixed, "fixed point count F");
    enumerate->add_flag("--all-fixed", all_fixed, "all admissible F up to the bound");
    enumerate->add_option("--out", out, "output TDM file");

    auto* expand = app.add_subcommand("expand", "expand TDMs into designs");
    expand->add_option("--tdm", tdm_file, "TDM file")->required();
    expand->add_option("--params", params, "v,k,lambda")->required();
    expand->add_option("--mode", mode, "cyc|acyc")->check(CLI::IsMember({"cyc", "acyc"}));
    expand->add_option("--out", out, "output matrix file");
    expand->add_option("--limit", limit, "stop after N emissions");
    expand->add_flag("--serial", serial, "single worker, reproducible order");

    auto* classify = app.add_subcommand("classify", "dedup matrices by canonical form");
    classify->add_option("--in", in, "matrix file")->required();
    classify->add_option("--kind", kind, "design|hadamard")
        ->check(CLI::IsMember({"design", "hadamard"}));
    classify->add_option("--report", report, "spectrum");

    auto* convert = app.add_subcommand("convert", "convert between structure kinds");
    convert->add_option("--in", in, "matrix file")->required();
    convert->add_option("--out", out, "output file")->required();
    convert->add_option("--to", to, "2design|hadamard|3design")
        ->required()
        ->check(CLI::IsMember({"2design", "hadamard", "3design"}));

    auto* reg = app.add_subcommand("regularize", "find regular equivalents");
    reg->add_option("--in", in, "matrix file")->required();
    reg->add_option("--out", out, "JSONL verdict file")->required();
    reg->add_option("--timeout-ms", timeout_ms, "per-matrix time limit");

    auto* pipe = app.add_subcommand("pipeline", "full construction chain");
    pipe->add_option("--params", params, "v,k,lambda")->required();
    pipe->add_option("--fixed", fixed_csv, "F[,F...]")->required();
    pipe->add_option("--mode", mode, "cyc|acyc")->check(CLI::IsMember({"cyc", "acyc"}));
    pipe->add_option("--limit", limit, "cap raw expansions per TDM");
    pipe->add_option("--out-dir", out_dir, "directory for catalog JSONL files");

    auto* merge = app.add_subcommand("merge", "merge catalogs with cross-file dedup");
    merge->add_option("--out", out, "destination catalog")->required();
    merge->add_option("inputs", merge_inputs, "source catalogs")->required();

    auto* stats = app.add_subcommand("stats", "catalog counts and spectrum");
    stats->add_option("--in", in, "catalog file")->required();
    stats->add_option("--kind", kind, "filter by record kind");
    kind = ""; // stats default: all kinds

    try {
        app.parse(argc, argv);
        if (classify->parsed() && kind.empty()) kind = "hadamard";
        if (enumerate->parsed())
            return cmd_enumerate_tdm(params, fixed, all_fixed, out, threads);
        if (expand->parsed())
            return cmd_expand(tdm_file, params, mode, out, limit, serial, threads);
        if (classify->parsed()) return cmd_classify(in, kind, report);
        if (convert->parsed()) return cmd_convert(in, out, to);
        if (reg->parsed()) return cmd_regularize(in, out, timeout_ms);
        if (pipe->parsed())
            return cmd_pipeline(params, fixed_csv, mode, limit, out_dir, threads);
        if (merge->parsed()) return cmd_merge(merge_inputs, out);
        if (stats->parsed()) return cmd_stats(in, kind);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    } catch (const storage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_storage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    }
    return exit_ok;
}
