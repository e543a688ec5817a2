// Python bindings. Results cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmtheta/errors.hpp"
#include "cmtheta/obstruction.hpp"

namespace py = pybind11;
using namespace cmtheta;

namespace {

RunConfig make_config(unsigned digits, unsigned guard, std::string const & normalization,
                      std::string const & embedding, bool assume_conjecture,
                      std::optional<std::string> const & cache)
{
    RunConfig cfg;
    cfg.digits = digits;
    cfg.guard = guard;
    cfg.normalization = parse_sigma_normalization(normalization);
    cfg.embedding = parse_embedding(embedding);
    cfg.assume_conjecture = assume_conjecture;
    cfg.cache_path = cache.value_or("");
    cfg.validate();
    return cfg;
}

class Session
{
    ValueProvider values_;

  public:
    explicit Session(RunConfig cfg) : values_(std::move(cfg)) {}

    std::string chi(long d, int form)
    {
        py::gil_scoped_release release;
        auto r = values_.chi(d, form);
        return to_json(r.value, d, form, r.cached).dump();
    }

    std::string sigma(long d, int form)
    {
        py::gil_scoped_release release;
        auto r = values_.sigma(d, form);
        json j = to_json(r.value, d, form, r.cached);
        j["normalization"] = to_string(values_.config().normalization);
        return j.dump();
    }

    std::string decide(std::string const & q)
    {
        py::gil_scoped_release release;
        return to_json(decide_optimal(values_, parse_int(q))).dump();
    }

    std::string tables(std::optional<std::vector<std::pair<long, int>>> const & keys)
    {
        py::gil_scoped_release release;
        std::function<bool(CatalogEntry const &)> select;
        if (keys)
            select = [&](CatalogEntry const & e) {
                for (auto const & [d, i] : *keys)
                    if (e.d == d && e.index == i)
                        return true;
                return false;
            };
        int failed = 0;
        json rows = json::array();
        for (auto const & r : reproduce_tables(values_, select)) {
            failed += !r.passed();
            rows.push_back(to_json(r));
        }
        return json{{"rows", rows}, {"failed", failed}}.dump();
    }

    std::string config() const { return to_json(values_.config()).dump(); }
};

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "chi18 / Sigma140 of the E(d)^3 catalog and the genus-3 optimal-curve decision";

    auto base = py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<unsupported_error>(m, "UnsupportedError", base.ptr());
    py::register_exception<precision_error>(m, "PrecisionError", base.ptr());
    py::register_exception<recognition_error>(m, "RecognitionError", base.ptr());
    py::register_exception<domain_error>(m, "DomainError", base.ptr());

    m.def("version", [] { return cmtheta::version(); });
    m.def("catalog_text", [] {
        std::ostringstream os;
        write_catalog_text(os, form_catalog());
        return os.str();
    });
    m.def("catalog_keys", [] {
        std::vector<std::pair<long, int>> keys;
        for (auto const & e : form_catalog())
            keys.emplace_back(e.d, e.index);
        return keys;
    });

    py::class_<Session>(m, "Session")
        .def(py::init([](unsigned digits, unsigned guard, std::string const & normalization,
                         std::string const & embedding, bool assume_conjecture,
                         std::optional<std::string> const & cache) {
                 return Session(make_config(digits, guard, normalization, embedding,
                                            assume_conjecture, cache));
             }),
             py::arg("digits") = 50, py::arg("guard") = 15,
             py::arg("normalization") = "lemma-45-raw", py::arg("embedding") = "standard",
             py::arg("assume_conjecture") = false, py::arg("cache") = py::none())
        .def("chi", &Session::chi, py::arg("d"), py::arg("form"))
        .def("sigma", &Session::sigma, py::arg("d"), py::arg("form"))
        .def("decide", &Session::decide, py::arg("q"))
        .def("tables", &Session::tables, py::arg("keys") = py::none())
        .def("config", &Session::config);
}
