#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmtheta/formats.hpp"

namespace cmtheta {

/// Recognized chi18 / Sigma140 values per catalog form, memoized and
/// optionally backed by a ValueCache.
class ValueProvider
{
    RunConfig config_;
    std::unique_ptr<ValueCache> cache_;
    std::map<std::string, ComputedValue> memo_;

  public:
    explicit ValueProvider(RunConfig config);

    struct Result
    {
        ComputedValue value;
        bool cached = false;
    };

    Result get(FormKind kind, long d, int form);
    Result chi(long d, int form) { return get(FormKind::chi18, d, form); }
    Result sigma(long d, int form) { return get(FormKind::sigma140, d, form); }

    RunConfig const & config() const { return config_; }
};

enum class ObstructionStatus { jacobian_non_hyperelliptic, twist_is_jacobian, undetermined_zero };
std::string to_string(ObstructionStatus s);

struct ObstructionVerdict
{
    long d = 0;
    int form = 0;
    Int p;
    unsigned n = 1;
    ObstructionStatus status = ObstructionStatus::undetermined_zero;
    /// chi mod p, empty when chi = 0 mod p.
    std::optional<Int> chi_mod;
    /// Sigma140 mod p was consulted (chi = 0 mod p); empty if unknown.
    std::optional<bool> sigma_nonzero;
    /// The verdict leans on the conjecture that chi = 0 and Sigma != 0
    /// characterizes hyperelliptic Jacobians.
    bool conjecture_flag = false;
    std::string note;
};

/// Serre's obstruction for the catalog form over F_{p^n}, from the square
/// class of chi mod p. Irrational chi raises unsupported_error, as do p = 2
/// and p = d.
ObstructionVerdict obstruction_for(ValueProvider & values, long d, int form, Int const & p,
                                   unsigned n);

enum class Existence { yes, no, undetermined };
std::string to_string(Existence e);

struct OptimalReport
{
    Int q, p;
    unsigned n = 1;
    /// floor(2 sqrt q)
    Int m;
    long d = 0;
    /// m^2 - 4q = -d f^2
    Int f;
    /// Trace of Frobenius of E(d) over F_q (+m or -m).
    Int trace;
    std::vector<ObstructionVerdict> verdicts;
    Existence optimal_exists = Existence::undetermined;
    Existence minimal_exists = Existence::undetermined;
    /// q + 1 + 3m and q + 1 - 3m
    Int optimal_points, minimal_points;
    std::vector<std::string> notes;
};

/// Whether genus-3 curves with q + 1 +- 3 floor(2 sqrt q) points exist,
/// via the catalog forms of the d with m^2 - 4q = -d f^2.
/// Throws unsupported_error for any other pattern.
OptimalReport decide_optimal(ValueProvider & values, Int const & q);

struct TableRow
{
    long d = 0;
    int form = 0;
    QuadInt expected;
    std::optional<QuadInt> computed;
    std::string residual;
    /// "exact", "conjugate", "mismatch" or "error"
    std::string match;
    std::string message;
    bool cached = false;

    bool passed() const { return match == "exact" || match == "conjugate"; }
};

/// Recomputes catalog chi18 values (all rows, or those `select` accepts)
/// and compares with the expected values.
std::vector<TableRow> reproduce_tables(ValueProvider & values,
                                       std::function<bool(CatalogEntry const &)> const & select = {});

json to_json(ComputedValue const & v, long d, int form, bool cached);
json to_json(ObstructionVerdict const & v);
json to_json(OptimalReport const & r);
json to_json(TableRow const & r);

} // namespace cmtheta
