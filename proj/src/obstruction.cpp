#include "cmtheta/errors.hpp"
#include "cmtheta/obstruction.hpp"

namespace cmtheta {

ValueProvider::ValueProvider(RunConfig config) : config_(std::move(config))
{
    config_.validate();
    if (!config_.cache_path.empty())
        cache_ = std::make_unique<ValueCache>(config_.cache_path);
}

ValueProvider::Result ValueProvider::get(FormKind kind, long d, int form)
{
    CacheKey key{kind, SigmaNormalization::raw, d, form, config_.embedding};
    if (kind == FormKind::sigma140)
        key.normalization = config_.normalization;
    std::string tag = key.kind_tag() + "/" + std::to_string(d) + "#" + std::to_string(form) +
                      "/" + to_string(key.embedding);
    if (auto it = memo_.find(tag); it != memo_.end())
        return {it->second, true};
    CatalogEntry const & entry = catalog_lookup(d, form);
    if (cache_) {
        if (auto rec = cache_->find(key, config_.digits)) {
            ComputedValue v = rec->to_value();
            memo_.emplace(tag, v);
            return {v, true};
        }
    }
    ComputedValue v =
        compute_recognized(entry.form, kind, config_.digits, config_.guard, config_.pipeline_options());
    if (cache_)
        cache_->append(CacheRecord::from_value(key, v));
    memo_.emplace(tag, v);
    return {v, false};
}

std::string to_string(ObstructionStatus s)
{
    switch (s) {
    case ObstructionStatus::jacobian_non_hyperelliptic: return "JacobianNonHyperelliptic";
    case ObstructionStatus::twist_is_jacobian: return "TwistIsJacobian";
    default: return "UndeterminedZero";
    }
}

std::string to_string(Existence e)
{
    switch (e) {
    case Existence::yes: return "yes";
    case Existence::no: return "no";
    default: return "undetermined";
    }
}

ObstructionVerdict obstruction_for(ValueProvider & values, long d, int form, Int const & p,
                                   unsigned n)
{
    if (n == 0)
        throw domain_error("extension degree must be positive");
    if (p == 2)
        throw unsupported_error("characteristic 2 is not supported");
    if (p < 3 || !is_probable_prime(p))
        throw domain_error(p.get_str() + " is not an odd prime");
    if (p == d)
        throw unsupported_error("E(" + std::to_string(d) + ") has bad reduction at p = d");
    catalog_lookup(d, form);

    ObstructionVerdict v;
    v.d = d;
    v.form = form;
    v.p = p;
    v.n = n;
    QuadInt chi = values.chi(d, form).value.value.exact;
    if (!chi.is_rational())
        throw unsupported_error("chi for " + std::to_string(d) + "#" + std::to_string(form) +
                                " is irrational; a prime above p would have to be chosen");
    Int x = mod_pos(chi.a(), p);
    if (x != 0) {
        v.chi_mod = x;
        v.status = is_square_in_fq(x, p, n) ? ObstructionStatus::jacobian_non_hyperelliptic
                                            : ObstructionStatus::twist_is_jacobian;
        return v;
    }

    v.status = ObstructionStatus::undetermined_zero;
    QuadInt sigma = values.sigma(d, form).value.value.exact;
    if (sigma.is_rational())
        v.sigma_nonzero = mod_pos(sigma.a(), p) != 0;
    else if (mod_pos(sigma.norm(), p) != 0)
        v.sigma_nonzero = true;
    if (!v.sigma_nonzero) {
        v.note = "chi = 0 mod p and Sigma140 vanishes modulo some prime above p";
    } else if (*v.sigma_nonzero) {
        v.conjecture_flag = true;
        v.note = "chi = 0 and Sigma140 != 0 mod p: reduces to a hyperelliptic Jacobian "
                 "(conjectural criterion)";
    } else {
        v.note = "chi = Sigma140 = 0 mod p: decomposable reduction (conjectural criterion)";
    }
    return v;
}

OptimalReport decide_optimal(ValueProvider & values, Int const & q)
{
    OptimalReport r;
    r.q = q;
    PrimePower pp = as_prime_power(q);
    if (pp.n == 0)
        throw unsupported_error(q.get_str() + " is not a prime power");
    if (pp.p == 2)
        throw unsupported_error("characteristic 2 is not supported");
    r.p = pp.p;
    r.n = pp.n;
    r.m = isqrt(4 * q);
    r.optimal_points = q + 1 + 3 * r.m;
    r.minimal_points = q + 1 - 3 * r.m;
    Int disc = r.m * r.m - 4 * q;
    if (disc == 0)
        throw unsupported_error("m^2 - 4q = 0 for q = " + q.get_str() +
                                "; no CM discriminant in the catalog");
    // -disc = d f^2 with d square-free
    Int rest = -disc, f = 1;
    for (Int k = 2; k * k <= rest; ++k)
        while (rest % (k * k) == 0) {
            rest /= k * k;
            f *= k;
        }
    if (!(rest == 7 || rest == 19 || rest == 43 || rest == 67 || rest == 163))
        throw unsupported_error("m^2 - 4q = -" + rest.get_str() + " * " + f.get_str() +
                                "^2 is not covered by the catalog");
    r.d = rest.get_si();
    r.f = f;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.m.get_mpz_t(), r.p.get_mpz_t());
    if (g != 1)
        throw unsupported_error("supersingular case: p divides floor(2 sqrt q)");
    if (r.p == r.d)
        throw unsupported_error("E(d) has bad reduction at p = d");
    r.trace = trace_over_q(Discriminant(r.d), r.p, r.n).t;
    if (r.trace != r.m && r.trace != -r.m)
        throw unsupported_error("E(" + std::to_string(r.d) + ") over F_q has trace " +
                                r.trace.get_str() + ", not +-" + r.m.get_str());
    if (f > 1)
        r.notes.push_back("Z[pi] has conductor " + f.get_str() +
                          " in O_K; the catalog forms over the maximal order are used, "
                          "assuming End(E) is maximal");

    bool minus = r.trace == -r.m;
    bool optimal = false, minimal = false, complete = catalog_is_complete(r.d);
    bool assume = values.config().assume_conjecture;
    for (int index : catalog_indices(r.d)) {
        ObstructionVerdict v;
        try {
            v = obstruction_for(values, r.d, index, r.p, r.n);
        } catch (unsupported_error const & e) {
            r.notes.push_back("form " + std::to_string(r.d) + "#" + std::to_string(index) +
                              " skipped: " + e.what());
            complete = false;
            continue;
        }
        switch (v.status) {
        case ObstructionStatus::jacobian_non_hyperelliptic:
            (minus ? optimal : minimal) = true;
            break;
        case ObstructionStatus::twist_is_jacobian:
            (minus ? minimal : optimal) = true;
            break;
        case ObstructionStatus::undetermined_zero:
            if (assume && v.sigma_nonzero.value_or(false)) {
                optimal = minimal = true;
                r.notes.push_back("form " + std::to_string(r.d) + "#" + std::to_string(index) +
                                  " counted in both directions (hyperelliptic, assumed)");
            } else {
                complete = false;
            }
            break;
        }
        r.verdicts.push_back(std::move(v));
    }
    if (!catalog_is_complete(r.d))
        r.notes.push_back("catalog for d = " + std::to_string(r.d) +
                          " is partial; negative answers stay undetermined");
    r.optimal_exists = optimal ? Existence::yes : complete ? Existence::no : Existence::undetermined;
    r.minimal_exists = minimal ? Existence::yes : complete ? Existence::no : Existence::undetermined;
    return r;
}

std::vector<TableRow> reproduce_tables(ValueProvider & values,
                                       std::function<bool(CatalogEntry const &)> const & select)
{
    std::vector<TableRow> out;
    for (auto const & e : form_catalog()) {
        if (select && !select(e))
            continue;
        Discriminant d(e.d);
        TableRow row{e.d, e.index, parse_quad_expression(e.expected_chi, d), std::nullopt, "", "", "", false};
        try {
            auto res = values.chi(e.d, e.index);
            QuadInt got = res.value.value.exact;
            row.computed = got;
            row.cached = res.cached;
            row.residual = to_string(res.value.value.residual, 3);
            row.match = got == row.expected          ? "exact"
                        : got == row.expected.conj() ? "conjugate"
                                                     : "mismatch";
        } catch (error const & ex) {
            row.match = "error";
            row.message = ex.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

json quad_json(QuadInt const & x) { return {{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

} // namespace

json to_json(ComputedValue const & v, long d, int form, bool cached)
{
    AlgebraicValue const & a = v.value;
    json primes = json::array();
    for (auto const & np : a.norm_primes())
        primes.push_back({{"p", np.p.get_str()}, {"e", np.e}, {"splitting", to_string(np.splitting)}});
    auto sc = square_class(a);
    json j = {{"d", d},
              {"form", form},
              {"exact", quad_json(a.exact)},
              {"value", a.exact.to_string()},
              {"factored", a.rational_factorization ? json(a.rational_factorization->to_string())
                                                    : json(nullptr)},
              {"norm_factored", a.norm_factorization.to_string()},
              {"norm_primes", primes},
              {"cofactor", a.norm_factorization.cofactor.get_str()},
              {"cofactor_probable_prime", a.norm_factorization.cofactor_probable_prime},
              {"square_class", sc ? json(sc->get_str()) : json(nullptr)},
              {"residual", to_string(a.residual, 3)},
              {"digits", v.ctx.digits},
              {"retried", v.retried},
              {"cached", cached}};
    return j;
}

json to_json(ObstructionVerdict const & v)
{
    return {{"d", v.d},
            {"form", v.form},
            {"p", v.p.get_str()},
            {"n", v.n},
            {"status", to_string(v.status)},
            {"chi_mod", v.chi_mod ? json(v.chi_mod->get_str()) : json("zero")},
            {"sigma_nonzero", v.sigma_nonzero ? json(*v.sigma_nonzero) : json(nullptr)},
            {"conjecture_flag", v.conjecture_flag},
            {"note", v.note}};
}

json to_json(OptimalReport const & r)
{
    json verdicts = json::array();
    for (auto const & v : r.verdicts)
        verdicts.push_back(to_json(v));
    return {{"q", r.q.get_str()},
            {"p", r.p.get_str()},
            {"n", r.n},
            {"m", r.m.get_str()},
            {"d", r.d},
            {"f", r.f.get_str()},
            {"trace", r.trace.get_str()},
            {"optimal_exists", to_string(r.optimal_exists)},
            {"minimal_exists", to_string(r.minimal_exists)},
            {"optimal_points", r.optimal_points.get_str()},
            {"minimal_points", r.minimal_points.get_str()},
            {"verdicts", verdicts},
            {"notes", r.notes}};
}

json to_json(TableRow const & r)
{
    return {{"d", r.d},
            {"form", r.form},
            {"expected", quad_json(r.expected)},
            {"computed", r.computed ? quad_json(*r.computed) : json(nullptr)},
            {"residual", r.residual},
            {"match", r.match},
            {"passed", r.passed()},
            {"message", r.message},
            {"cached", r.cached}};
}

} // namespace cmtheta
