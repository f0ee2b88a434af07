#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "run.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/error.hpp"
#include "sturmian/groupoid.hpp"
#include "sturmian/invariants.hpp"

namespace py = pybind11;
using namespace sturmian;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on Sturmian subshifts";

  py::register_exception<Error>(m, "Error");

  m.def("cf_expand", [](const std::string& alpha) { return cf_expand(parse_alpha(alpha)).to_string(); });
  m.def("conjugate", [](const std::string& a, const std::string& b) {
    return conjugate(parse_alpha(a), parse_alpha(b));
  });
  m.def("flow_equivalent", [](const std::string& a, const std::string& b) {
    return flow_equivalent(parse_alpha(a), parse_alpha(b));
  });
  m.def("k0_positive", [](const std::string& a, long long n, long long mm) {
    return k0_positive(parse_alpha(a), n, mm);
  });

  py::class_<Cover>(m, "Subshift")
      .def(py::init([](const std::string& alpha) { return Cover(SturmianSystem(parse_alpha(alpha))); }),
           py::arg("alpha"))
      .def_property_readonly("alpha", [](const Cover& c) { return c.system().alpha().to_string(); })
      .def("word", [](const Cover& c, const std::string& point, std::size_t n) {
        const auto& s = c.system();
        return s.code_word(cli::parse_point(s, point), n).str();
      }, py::arg("point"), py::arg("n"))
      .def("omega", [](const Cover& c, std::size_t n) {
        return c.system().code_word(c.system().branch_point(), n).str();
      }, py::arg("n"))
      .def("language", [](const Cover& c, std::size_t n) { return strings(c.system().language(n)); })
      .def("past", [](const Cover& c, const std::string& point, std::size_t l) {
        const auto& s = c.system();
        return strings(s.past_set(cli::parse_point(s, point), l));
      }, py::arg("point"), py::arg("l"))
      .def("recurrence_bound", [](const Cover& c, const std::string& w) { return c.system().recurrence_bound(Word(w)); })
      .def("quotient_size", [](const Cover& c, std::size_t k, std::size_t l, std::uint64_t seed) {
        return c.quotient({k, l}, 200, seed).classes.size();
      }, py::arg("k"), py::arg("l"), py::arg("seed") = kDefaultSeed)
      .def("fibre_count", [](const Cover& c, const std::string& point, std::size_t K, std::size_t L) {
        return c.fibre(cli::parse_point(c.system(), point), K, L).size();
      }, py::arg("point"), py::arg("K") = 4, py::arg("L") = 10)
      .def("dad", [](const Cover& c, const std::vector<std::size_t>& F) {
        const auto& s = c.system();
        auto w = dad_witness(s, std::set<std::size_t>(F.begin(), F.end()));
        auto rep = check_witness(s, w, 2 * w.lbar * std::max(w.beta_mu, w.beta_nu));
        py::dict d;
        d["mu"] = w.mu.str();
        d["nu"] = w.nu.str();
        d["beta_mu"] = w.beta_mu;
        d["beta_nu"] = w.beta_nu;
        d["max_chain_V"] = rep.max_chain_V;
        d["max_chain_U"] = rep.max_chain_U;
        d["pass"] = rep.pass;
        return d;
      }, py::arg("F"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"sturmian"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, "Runs a command line and returns (status, stdout, stderr).");
}
