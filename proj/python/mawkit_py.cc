#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mawkit/dawg.h"
#include "mawkit/enumerate.h"
#include "mawkit/io.h"
#include "mawkit/oracle.h"

namespace py = pybind11;

namespace {

// A collection together with its automaton.
class Index {
 public:
  Index(const std::vector<std::string>& docs, std::optional<std::string> alphabet)
      : collection_(alphabet ? mawkit::InternCollection(docs, *alphabet)
                             : mawkit::InternCollection(docs)),
        dawg_(mawkit::BuildDawg(collection_)) {}

  std::size_t k() const { return collection_.k(); }
  std::size_t n() const { return collection_.total_length(); }
  std::size_t sigma() const { return collection_.sigma(); }
  std::size_t num_nodes() const { return dawg_.num_nodes(); }
  std::size_t num_edges() const { return dawg_.num_edges(); }

  std::vector<py::bytes> Maws(const std::string& mask) const {
    const auto query = mawkit::QueryMask::Parse(mask, k());
    return Decode([&](const mawkit::MawSink& s) { mawkit::EnumerateMaws(dawg_, query, s); });
  }

  std::vector<std::tuple<py::bytes, std::uint32_t, std::uint32_t, std::uint32_t>> Refs(
      const std::string& mask) const {
    const auto query = mawkit::QueryMask::Parse(mask, k());
    std::vector<mawkit::MawRef> refs;
    mawkit::EnumerateMaws(dawg_, query, [&](const mawkit::MawRef& r) { refs.push_back(r); });
    std::vector<std::tuple<py::bytes, std::uint32_t, std::uint32_t, std::uint32_t>> out;
    for (const auto& d : mawkit::DecodeSorted(refs, collection_)) {
      out.emplace_back(py::bytes(d.text.substr(0, 1)), d.ref.doc, d.ref.start, d.ref.end);
    }
    return out;
  }

  std::size_t Count(const std::string& mask) const {
    return mawkit::EnumerateMaws(dawg_, mawkit::QueryMask::Parse(mask, k()),
                                 [](const mawkit::MawRef&) {});
  }

  std::vector<py::bytes> SetOp(const std::string& op) const {
    mawkit::SetOp which;
    if (op == "intersection") {
      which = mawkit::SetOp::kIntersection;
    } else if (op == "union") {
      which = mawkit::SetOp::kUnion;
    } else if (op == "sym-diff") {
      which = mawkit::SetOp::kSymmetricDifference;
    } else {
      throw py::value_error("unknown set operation: " + op);
    }
    return Decode([&](const mawkit::MawSink& s) { mawkit::EnumerateSetOp(dawg_, which, s); });
  }

  std::vector<py::bytes> Prime() const {
    return Decode([&](const mawkit::MawSink& s) { mawkit::EnumerateMawPrime(dawg_, s); });
  }

  std::vector<py::bytes> Specific(const std::vector<std::uint32_t>& target,
                                  const std::vector<std::uint32_t>& ref) const {
    return Decode([&](const mawkit::MawSink& s) {
      mawkit::EnumerateSpecific(dawg_, target, ref, s);
    });
  }

 private:
  template <class Produce>
  std::vector<py::bytes> Decode(Produce produce) const {
    std::vector<mawkit::MawRef> refs;
    produce([&](const mawkit::MawRef& r) { refs.push_back(r); });
    std::vector<py::bytes> out;
    for (const auto& d : mawkit::DecodeSorted(refs, collection_)) out.emplace_back(d.text);
    return out;
  }

  mawkit::DocumentCollection collection_;
  mawkit::Dawg dawg_;
};

std::vector<py::bytes> ToBytes(const mawkit::oracle::StringSet& set) {
  std::vector<std::string> sorted(set.begin(), set.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return {sorted.begin(), sorted.end()};
}

}  // namespace

PYBIND11_MODULE(_mawkit, m) {
  m.doc() = "Generalized minimal absent words over document collections";
  py::register_exception<std::invalid_argument>(m, "MawkitError", PyExc_ValueError);

  py::class_<Index>(m, "Index")
      .def(py::init<const std::vector<std::string>&, std::optional<std::string>>(),
           py::arg("docs"), py::arg("alphabet") = py::none())
      .def_property_readonly("k", &Index::k)
      .def_property_readonly("n", &Index::n)
      .def_property_readonly("sigma", &Index::sigma)
      .def_property_readonly("num_nodes", &Index::num_nodes)
      .def_property_readonly("num_edges", &Index::num_edges)
      .def("maws", &Index::Maws, py::arg("mask"))
      .def("refs", &Index::Refs, py::arg("mask"))
      .def("count", &Index::Count, py::arg("mask"))
      .def("set_op", &Index::SetOp, py::arg("op"))
      .def("prime", &Index::Prime)
      .def("specific", &Index::Specific, py::arg("target"), py::arg("ref"));

  m.def(
      "oracle_maws",
      [](const std::vector<std::string>& docs, const std::string& mask,
         std::optional<std::string> alphabet) {
        const auto coll = alphabet ? mawkit::InternCollection(docs, *alphabet)
                                   : mawkit::InternCollection(docs);
        return ToBytes(mawkit::oracle::OracleMaws(coll, mawkit::LabelSet::FromBitString(mask)));
      },
      py::arg("docs"), py::arg("mask"), py::arg("alphabet") = py::none());
}
