#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "knotquiver/diagram.hpp"

namespace kq {

// Bad user input: unreadable file, malformed PD code, unknown segment. Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusEntry {
    std::string name;
    std::string pd;
    bool prime = true;
    std::optional<std::vector<long long>> expected;  // normalized t-coefficients, lowest degree first
    std::optional<int> components;
};

std::vector<CorpusEntry> parse_corpus(const std::string& text);
std::vector<CorpusEntry> read_corpus(const std::string& path);
std::string read_file(const std::string& path);

// Accepts a PD code, a path to a file holding one, or the name of an entry of `corpus_path`.
LinkDiagram load_diagram(const std::string& input, const std::string& corpus_path);

std::string stable_hash(const std::string& text);

// JSON files keyed by (diagram, segment); an empty directory disables the cache.
class RunCache {
public:
    explicit RunCache(std::string dir = {}) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }
    static std::string key(const LinkDiagram& d, int segment);
    std::optional<nlohmann::json> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::json& value) const;

private:
    std::string dir_;
};

// The --cache-dir flag wins over KNOTQUIVER_CACHE_DIR.
std::string resolve_cache_dir(const std::string& flag);

// Heights of the maximal state, the F-polynomial and its specialization for one segment.
nlohmann::json segment_result(const LinkDiagram& d, int i);
nlohmann::json cached_segment_result(const LinkDiagram& d, int i, const RunCache& cache);
std::string segment_result_text(const nlohmann::json& r);

// Runs fn(0..count-1) on up to `jobs` threads; results are stored by index, so the merge is
// deterministic.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                out[k] = fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

struct VerifyOutcome {
    nlohmann::json report;
    bool pass = true;
    std::vector<std::string> warnings;
};

VerifyOutcome verify_entry(const CorpusEntry& entry, unsigned jobs);
VerifyOutcome verify_corpus(const std::vector<CorpusEntry>& corpus, unsigned jobs);
std::string verify_text(const VerifyOutcome& outcome);

nlohmann::json two_bridge_report(const std::vector<int>& cf);
std::string two_bridge_text(const nlohmann::json& r);

}  // namespace kq
