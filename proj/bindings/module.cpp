#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hoct/engine.hpp"
#include "hoct/entropy.hpp"
#include "hoct/errors.hpp"
#include "hoct/header_codec.hpp"
#include "hoct/inverse.hpp"

namespace py = pybind11;

namespace {

hoct::Bytes to_bytes(const py::bytes& b) {
    char* data = nullptr;
    Py_ssize_t size = 0;
    if (PyBytes_AsStringAndSize(b.ptr(), &data, &size) != 0) {
        throw py::error_already_set();
    }
    hoct::Bytes out(static_cast<std::size_t>(size));
    if (size > 0) std::memcpy(out.data(), data, static_cast<std::size_t>(size));
    return out;
}

py::bytes from_bytes(const hoct::Bytes& b) {
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

}  // namespace

PYBIND11_MODULE(_hoct, m) {
    m.doc() = "Lossless context-transformation preprocessor: lowers the zero-order "
              "entropy of byte strings and inverts exactly.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const hoct::FormatError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "entropy",
        [](const py::bytes& data) {
            const hoct::Bytes buf = to_bytes(data);
            return hoct::shannon_entropy(hoct::count_symbols(buf));
        },
        py::arg("data"), "Zero-order Shannon entropy in bits per byte.");

    m.def(
        "transform",
        [](const py::bytes& data, double lim, const std::vector<int>& protected_symbols,
           bool verify) {
            hoct::EngineConfig cfg;
            cfg.lim = lim;
            cfg.verify_round_trip = verify;
            for (int b : protected_symbols) {
                if (b < 0 || b > 255) {
                    throw py::value_error("protected symbol out of byte range: " +
                                          std::to_string(b));
                }
                cfg.protected_symbols.set(static_cast<std::size_t>(b));
            }
            hoct::Bytes buf = to_bytes(data);
            hoct::TransformSummary sum;
            hoct::Bytes tree;
            {
                py::gil_scoped_release release;
                sum = hoct::transform(buf, cfg);
                tree = hoct::serialize_tree(sum.tree);
            }
            py::dict out;
            out["payload"] = from_bytes(buf);
            out["tree"] = from_bytes(tree);
            out["transforms"] = sum.transform_count;
            out["input_entropy"] = sum.input_entropy;
            out["output_entropy"] = sum.output_entropy;
            return out;
        },
        py::arg("data"), py::arg("lim") = 0.0,
        py::arg("protected_symbols") = std::vector<int>{}, py::arg("verify") = false,
        "Transform data; returns payload, serialized tree and entropy stats.");

    m.def(
        "restore",
        [](const py::bytes& payload, const py::bytes& tree) {
            hoct::Bytes buf = to_bytes(payload);
            const hoct::CtTree t = hoct::deserialize_tree(to_bytes(tree));
            {
                py::gil_scoped_release release;
                hoct::restore(buf, t);
            }
            return from_bytes(buf);
        },
        py::arg("payload"), py::arg("tree"),
        "Invert a transform given its payload and serialized tree.");

    m.def(
        "pack",
        [](const py::bytes& payload, const py::bytes& tree) {
            hoct::Container c{to_bytes(tree), to_bytes(payload)};
            std::ostringstream os;
            hoct::write_container(os, c);
            const std::string s = os.str();
            return py::bytes(s);
        },
        py::arg("payload"), py::arg("tree"), "Frame payload and tree as a .hoct container.");

    m.def(
        "unpack",
        [](const py::bytes& container) {
            const std::string raw(container);
            std::istringstream is(raw);
            const hoct::Container c = hoct::read_container(is);
            py::dict out;
            out["tree"] = from_bytes(c.tree_bytes);
            out["payload"] = from_bytes(c.payload);
            return out;
        },
        py::arg("container"), "Split a .hoct container into tree and payload bytes.");
}
