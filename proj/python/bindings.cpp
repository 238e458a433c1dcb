#include "sortnet/counting.hpp"
#include "sortnet/eg_bijection.hpp"
#include "sortnet/harness/commands.hpp"
#include "sortnet/harness/verify.hpp"
#include "sortnet/hookwalk.hpp"
#include "sortnet/limit_laws.hpp"
#include "sortnet/permutahedron.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sortnet;

namespace {

using Rows = std::vector<std::vector<int>>;

py::object big_int(const BigCount& v) { return py::int_(py::str(v.str())); }

py::object fraction(const ExactRational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(big_int(numerator(q)), big_int(denominator(q)));
}

std::vector<int> swaps_of(const SortingNetwork& w) { return {w.swaps().begin(), w.swaps().end()}; }

SortingNetwork network_of(int n, std::vector<int> swaps) { return SortingNetwork(n, std::move(swaps)); }

// Harness commands exchange JSON; hand it to Python as plain dicts and lists.
py::object from_json(const harness::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_sortnet, m) {
  m.doc() = "Uniformly random sorting networks";
  m.attr("artifact_version") = harness::kArtifactVersion;
  py::register_exception<harness::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("sample", [](int n, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rng(seed, stream);
    return swaps_of(sample_usn(n, rng));
  }, py::arg("n"), py::arg("seed") = 1, py::arg("stream") = 0,
     "Swap sequence of a uniformly random sorting network of size n.");
  m.def("is_sorting_network", [](int n, const std::vector<int>& s) { return is_sorting_network(n, s); });
  m.def("configuration", [](int n, std::vector<int> s, std::size_t k) {
    const Permutation p = configuration(network_of(n, std::move(s)), k);
    return std::vector<int>(p.one_line().begin(), p.one_line().end());
  }, "One-line notation of the configuration after k swaps.");
  m.def("bubble_sort", [](int n) { return swaps_of(bubble_sort_network(n)); });

  m.def("stanley_count", [](int n) { return big_int(stanley_count(n)); });
  m.def("enumerate_networks", [](int n) {
    std::vector<std::vector<int>> out;
    for_each_network(n, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
  });
  m.def("count_reduced_words", [](std::vector<int> p) { return big_int(count_reduced_words(Permutation(std::move(p)))); });
  m.def("first_swap_distribution", [](int n) {
    py::list out;
    for (const auto& q : first_swap_distribution(n)) out.append(fraction(q));
    return out;
  });
  m.def("double_flip_probability", [](int n) { return fraction(double_flip_probability(n)); });

  m.def("sample_tableau", [](std::vector<int> shape, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rng(seed, stream);
    return sample_syt(Partition(std::move(shape)), rng).rows();
  }, py::arg("shape"), py::arg("seed") = 1, py::arg("stream") = 0);
  m.def("hook_walk", [](std::vector<int> shape, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rng(seed, stream);
    const Cell c = hook_walk(Partition(std::move(shape)), rng);
    return std::pair<int, int>(c.row, c.col);
  }, py::arg("shape"), py::arg("seed") = 1, py::arg("stream") = 0);
  m.def("dimension", [](std::vector<int> shape) { return big_int(dimension(Partition(std::move(shape)))); });
  m.def("eg_forward", [](Rows t) { return swaps_of(eg_forward(StandardYoungTableau(std::move(t)))); },
        "Sorting network of a staircase tableau.");
  m.def("eg_inverse", [](int n, std::vector<int> s) { return eg_inverse(network_of(n, std::move(s))).recording.rows(); },
        "Staircase tableau of a sorting network.");
  m.def("promote", [](Rows t) { return promote(StandardYoungTableau(std::move(t))).rows(); });

  m.def("semicircle_pdf", &semicircle_pdf);
  m.def("semicircle_cdf", &semicircle_cdf);
  m.def("profile_L", &profile_L);
  m.def("arch_sample", [](double t, std::size_t count, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < count; ++k) {
      const Point2 p = arch_sample(t, rng);
      pts.emplace_back(p.x, p.y);
    }
    return pts;
  }, py::arg("t"), py::arg("count"), py::arg("seed") = 1);
  m.def("lln_distance", [](int n, std::vector<int> s, int bins_t, int bins_y) {
    return lln_distance(network_of(n, std::move(s)), bins_t, bins_y);
  }, py::arg("n"), py::arg("swaps"), py::arg("bins_t") = 10, py::arg("bins_y") = 10);
  m.def("octagon_margin", [](int n, std::vector<int> s, double eps) {
    return check_octagon(network_of(n, std::move(s)), eps).worst_margin;
  });
  m.def("great_circle_distances", [](int n, std::vector<int> s) {
    const SortingNetwork w = network_of(n, std::move(s));
    const GreatCircle c = circle_through(w);
    return py::dict(py::arg("constant_speed") = constant_speed_distance(w, c), py::arg("inf") = inf_distance(w, c));
  });

  m.def("run_command", [](const std::string& name, const py::dict& args) {
    const harness::json a = harness::json::parse(py::str(py::module_::import("json").attr("dumps")(args)).cast<std::string>());
    using namespace harness;
    if (name == "sample") {
      SampleConfig c;
      c.n = a.value("n", c.n);
      c.samples = a.value("samples", c.samples);
      c.seed = a.value("seed", c.seed);
      c.threads = a.value("threads", c.threads);
      c.out = a.value("out", c.out);
      return from_json(cmd_sample(c));
    }
    if (name == "first-swap-dist") {
      FirstSwapConfig c;
      c.n = a.value("n", c.n);
      c.out = a.value("out", c.out);
      return from_json(cmd_first_swap(c));
    }
    if (name == "double-flip") return from_json(cmd_double_flip({a.value("n", 8)}));
    if (name == "check") {
      CheckConfig c;
      c.in = a.at("in").get<std::string>();
      c.eps = a.value("eps", c.eps);
      return from_json(cmd_check(c));
    }
    throw UsageError("run_command supports sample, first-swap-dist, double-flip and check, not " + name);
  }, py::arg("name"), py::arg("args") = py::dict());

  m.def("verify", [](std::vector<int> only, std::uint64_t seed) {
    harness::VerifyOptions opt;
    opt.only.insert(only.begin(), only.end());
    opt.seed = seed;
    py::gil_scoped_release release;
    const auto rep = harness::run_verify(opt);
    py::gil_scoped_acquire acquire;
    return from_json(rep.to_json());
  }, py::arg("only"), py::arg("seed") = 20240601, "Runs the selected acceptance criteria and returns the report.");
}
