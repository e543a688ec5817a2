#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "cmtheta/errors.hpp"
#include "cmtheta/formats.hpp"

namespace cmtheta {

void RunConfig::validate() const
{
    if (digits < 20)
        throw domain_error("digits must be at least 20");
    if (guard == 0)
        throw domain_error("guard digits must be positive");
}

PipelineOptions RunConfig::pipeline_options() const
{
    PipelineOptions o;
    o.embedding = embedding;
    o.normalization = normalization;
    return o;
}

std::string to_string(Embedding e) { return e == Embedding::standard ? "standard" : "conjugate"; }

Embedding parse_embedding(std::string const & s)
{
    if (s == "standard")
        return Embedding::standard;
    if (s == "conjugate")
        return Embedding::conjugate;
    throw domain_error("unknown embedding '" + s + "'");
}

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    default: return "text";
    }
}

OutputFormat parse_output_format(std::string const & s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "text")
        return OutputFormat::text;
    throw domain_error("unknown output format '" + s + "'");
}

json to_json(RunConfig const & c)
{
    return {{"digits", c.digits},
            {"guard", c.guard},
            {"normalization", to_string(c.normalization)},
            {"embedding", to_string(c.embedding)},
            {"assume_conjecture", c.assume_conjecture},
            {"cache_path", c.cache_path},
            {"format", to_string(c.format)}};
}

RunConfig run_config_from_json(json const & j)
{
    RunConfig c;
    c.digits = j.at("digits").get<unsigned>();
    c.guard = j.at("guard").get<unsigned>();
    c.normalization = parse_sigma_normalization(j.at("normalization").get<std::string>());
    c.embedding = parse_embedding(j.at("embedding").get<std::string>());
    c.assume_conjecture = j.at("assume_conjecture").get<bool>();
    c.cache_path = j.at("cache_path").get<std::string>();
    c.format = parse_output_format(j.at("format").get<std::string>());
    c.validate();
    return c;
}

std::string default_cache_path()
{
    if (char const * env = std::getenv("CMTHETA_CACHE"); env && *env)
        return env;
    return "cmtheta-cache.jsonl";
}

json to_json(Factorization const & f)
{
    json factors = json::array();
    for (auto const & p : f.factors)
        factors.push_back({p.p.get_str(), p.e});
    return {{"sign", f.sign},
            {"factors", factors},
            {"cofactor", f.cofactor.get_str()},
            {"cofactor_probable_prime", f.cofactor_probable_prime}};
}

Factorization factorization_from_json(json const & j)
{
    Factorization f;
    f.sign = j.at("sign").get<int>();
    for (auto const & p : j.at("factors"))
        f.factors.push_back({parse_int(p.at(0).get<std::string>()), p.at(1).get<unsigned>()});
    f.cofactor = parse_int(j.at("cofactor").get<std::string>());
    f.cofactor_probable_prime = j.at("cofactor_probable_prime").get<bool>();
    return f;
}

void write_catalog_text(std::ostream & os, std::vector<CatalogEntry> const & entries)
{
    os << "# cmtheta form catalog, format 1\n"
       << "# row entries are a,b for a + b*tau, tau = (1 + sqrt(-d)) / 2\n";
    for (auto const & e : entries) {
        os << "\nform " << e.d << " " << e.index << "\n";
        os << "automorphisms " << e.automorphism_order << "\n";
        os << "conjugate_of " << (e.conjugate_of ? std::to_string(*e.conjugate_of) : "none") << "\n";
        os << "indecomposable " << (e.indecomposable ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < e.form.dim(); ++i) {
            os << "row";
            for (std::size_t j = 0; j < e.form.dim(); ++j)
                os << " " << e.form(i, j).a() << "," << e.form(i, j).b();
            os << "\n";
        }
        os << "chi " << e.expected_chi << "\n";
        if (!e.correction.empty())
            os << "correction " << e.correction << "\n";
        os << "end\n";
    }
}

std::vector<CatalogEntry> read_catalog_text(std::istream & is)
{
    std::vector<CatalogEntry> out;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](std::string const & what) {
        throw domain_error("catalog line " + std::to_string(lineno) + ": " + what);
    };
    std::optional<CatalogEntry> cur;
    std::vector<std::vector<std::pair<long, long>>> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        std::string rest;
        std::getline(ls >> std::ws, rest);
        if (tag == "form") {
            if (cur)
                fail("missing 'end'");
            long d = 0;
            int index = 0;
            std::istringstream(rest) >> d >> index;
            if (d == 0 || index == 0)
                fail("bad form header");
            Discriminant disc(d);
            cur.emplace(CatalogEntry{d, index, HermitianForm::identity(disc, 1), 0, std::nullopt, true, "", ""});
            rows.clear();
        } else if (!cur) {
            fail("'" + tag + "' outside a form block");
        } else if (tag == "automorphisms") {
            cur->automorphism_order = std::stoul(rest);
        } else if (tag == "conjugate_of") {
            if (rest != "none")
                cur->conjugate_of = std::stoi(rest);
        } else if (tag == "indecomposable") {
            cur->indecomposable = rest == "true";
        } else if (tag == "row") {
            std::vector<std::pair<long, long>> row;
            std::istringstream rs(rest);
            std::string cell;
            while (rs >> cell) {
                auto comma = cell.find(',');
                if (comma == std::string::npos)
                    fail("entry without ','");
                row.emplace_back(std::stol(cell.substr(0, comma)), std::stol(cell.substr(comma + 1)));
            }
            rows.push_back(std::move(row));
        } else if (tag == "chi") {
            cur->expected_chi = rest;
        } else if (tag == "correction") {
            cur->correction = rest;
        } else if (tag == "end") {
            std::size_t g = rows.size();
            std::vector<std::pair<long, long>> flat;
            for (auto const & r : rows) {
                if (r.size() != g)
                    fail("matrix is not square");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            std::string label = std::to_string(cur->d) + "#" + std::to_string(cur->index);
            cur->form = HermitianForm::from_pairs(Discriminant(cur->d), g, flat, label);
            out.push_back(std::move(*cur));
            cur.reset();
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (cur)
        fail("missing 'end' at end of file");
    return out;
}

std::string CacheKey::kind_tag() const
{
    return kind == FormKind::chi18 ? "chi18" : "sigma140/" + to_string(normalization);
}

namespace {

std::string utc_now()
{
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

ComputedValue CacheRecord::to_value() const
{
    PrecisionContext ctx{digits, guard, headroom};
    PrecisionScope scope(ctx);
    AlgebraicValue v{QuadInt(a, b, Discriminant(key.d)), Real(residual), norm_factorization,
                     rational_factorization};
    return {v, ctx, retried};
}

CacheRecord CacheRecord::from_value(CacheKey const & key, ComputedValue const & v)
{
    CacheRecord r;
    r.key = key;
    r.digits = v.ctx.digits;
    r.guard = v.ctx.guard;
    r.headroom = v.ctx.headroom;
    r.a = v.value.exact.a();
    r.b = v.value.exact.b();
    r.residual = to_string(v.value.residual, 3);
    r.retried = v.retried;
    r.norm_factorization = v.value.norm_factorization;
    r.rational_factorization = v.value.rational_factorization;
    r.created = utc_now();
    r.version = cmtheta::version();
    return r;
}

json to_json(CacheRecord const & r)
{
    json j = {{"kind", r.key.kind_tag()},
              {"d", r.key.d},
              {"form", r.key.form},
              {"embedding", to_string(r.key.embedding)},
              {"digits", r.digits},
              {"guard", r.guard},
              {"headroom", r.headroom},
              {"a", r.a.get_str()},
              {"b", r.b.get_str()},
              {"residual", r.residual},
              {"retried", r.retried},
              {"norm_factorization", to_json(r.norm_factorization)}};
    j["rational_factorization"] =
        r.rational_factorization ? to_json(*r.rational_factorization) : json(nullptr);
    j["created"] = r.created;
    j["version"] = r.version;
    return j;
}

CacheRecord cache_record_from_json(json const & j)
{
    CacheRecord r;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "chi18") {
        r.key.kind = FormKind::chi18;
    } else if (kind.rfind("sigma140/", 0) == 0) {
        r.key.kind = FormKind::sigma140;
        r.key.normalization = parse_sigma_normalization(kind.substr(9));
    } else {
        throw domain_error("unknown cache kind '" + kind + "'");
    }
    r.key.d = j.at("d").get<long>();
    r.key.form = j.at("form").get<int>();
    r.key.embedding = parse_embedding(j.at("embedding").get<std::string>());
    r.digits = j.at("digits").get<unsigned>();
    r.guard = j.at("guard").get<unsigned>();
    r.headroom = j.at("headroom").get<unsigned>();
    r.a = parse_int(j.at("a").get<std::string>());
    r.b = parse_int(j.at("b").get<std::string>());
    r.residual = j.at("residual").get<std::string>();
    r.retried = j.value("retried", false);
    r.norm_factorization = factorization_from_json(j.at("norm_factorization"));
    if (!j.at("rational_factorization").is_null())
        r.rational_factorization = factorization_from_json(j.at("rational_factorization"));
    r.created = j.value("created", "");
    r.version = j.value("version", "");
    return r;
}

ValueCache::ValueCache(std::string path) : path_(std::move(path))
{
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            records_.push_back(cache_record_from_json(json::parse(line)));
        } catch (std::exception const &) {
            // a truncated or foreign line; keep the rest usable
        }
    }
}

std::optional<CacheRecord> ValueCache::find(CacheKey const & key, unsigned digits) const
{
    std::optional<CacheRecord> best;
    for (auto const & r : records_)
        if (r.key == key && r.digits >= digits && (!best || r.digits < best->digits))
            best = r;
    return best;
}

void ValueCache::append(CacheRecord const & r)
{
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw error("cannot write cache file " + path_);
    out << to_json(r).dump() << "\n";
    out.flush();
    records_.push_back(r);
}

} // namespace cmtheta
