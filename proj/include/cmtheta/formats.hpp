#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtheta/hermitian.hpp"
#include "cmtheta/pipeline.hpp"

namespace cmtheta {

using json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, text };

struct RunConfig
{
    unsigned digits = 50;
    unsigned guard = 15;
    SigmaNormalization normalization = SigmaNormalization::raw;
    Embedding embedding = Embedding::standard;
    bool assume_conjecture = false;
    /// Empty disables the cache.
    std::string cache_path;
    OutputFormat format = OutputFormat::json;

    /// Throws domain_error if digits < 20.
    void validate() const;
    PipelineOptions pipeline_options() const;
};

std::string to_string(Embedding e);
Embedding parse_embedding(std::string const & s);
std::string to_string(OutputFormat f);
OutputFormat parse_output_format(std::string const & s);

json to_json(RunConfig const & c);
RunConfig run_config_from_json(json const & j);

/// $CMTHETA_CACHE if set, else "cmtheta-cache.jsonl".
std::string default_cache_path();

json to_json(Factorization const & f);
Factorization factorization_from_json(json const & j);

/// Plain-text catalog: one "form d index" ... "end" block per entry.
void write_catalog_text(std::ostream & os, std::vector<CatalogEntry> const & entries);
std::vector<CatalogEntry> read_catalog_text(std::istream & is);

/// Key of one cached value.
struct CacheKey
{
    FormKind kind = FormKind::chi18;
    /// Only meaningful for sigma140.
    SigmaNormalization normalization = SigmaNormalization::raw;
    long d = 0;
    int form = 0;
    Embedding embedding = Embedding::standard;

    std::string kind_tag() const;
    bool operator==(CacheKey const &) const = default;
};

struct CacheRecord
{
    CacheKey key;
    unsigned digits = 0, guard = 0, headroom = 0;
    Int a, b;
    std::string residual;
    bool retried = false;
    Factorization norm_factorization;
    std::optional<Factorization> rational_factorization;
    std::string created;
    std::string version;

    ComputedValue to_value() const;
    static CacheRecord from_value(CacheKey const & key, ComputedValue const & v);
};

json to_json(CacheRecord const & r);
CacheRecord cache_record_from_json(json const & j);

/// Append-only JSON-lines store. Unreadable lines are skipped.
class ValueCache
{
    std::string path_;
    std::vector<CacheRecord> records_;

  public:
    explicit ValueCache(std::string path);

    std::string const & path() const { return path_; }
    /// The lowest-precision record with at least `digits` digits.
    std::optional<CacheRecord> find(CacheKey const & key, unsigned digits) const;
    void append(CacheRecord const & r);
    std::size_t size() const { return records_.size(); }
};

} // namespace cmtheta
