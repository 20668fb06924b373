#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pancake/exact.hpp"
#include "pancake/experiments.hpp"
#include "pancake/potential.hpp"
#include "pancake/sorters.hpp"
#include "pancake/text_io.hpp"

namespace py = pybind11;
using namespace pancake;

namespace {

AnyStack stack_from_text(const std::string& text) {
  return parse_stack(text);
}

std::vector<int> sort_any(const std::string& text, const std::string& algo,
                          std::uint64_t seed) {
  const AnyStack s = parse_stack(text);
  const Algorithm a = algorithm_from_name(algo);
  SortOutcome out;
  if (a == Algorithm::UnburntRandomized)
    out = sort_unburnt_randomized(std::get<UnburntStack>(s), seed);
  else if (a == Algorithm::BurntAverage)
    out = sort_burnt_average(std::get<BurntStack>(s));
  else
    out = sort_greedy_lookahead(std::get<BurntStack>(s));
  return out.trace.flips;
}

int exact_distance(const std::string& text, int endgame_size) {
  const AnyStack s = parse_stack(text);
  SolverConfig cfg;
  cfg.endgame_table_size = endgame_size;
  if (const auto* b = std::get_if<BurntStack>(&s))
    return astar_distance(*b, cfg);
  return astar_distance(std::get<UnburntStack>(s), cfg);
}

int bound_of(const std::string& text) {
  const AnyStack s = parse_stack(text);
  if (const auto* b = std::get_if<BurntStack>(&s))
    return std::max(lower_bound_potential(*b), greedy_lb_burnt(*b).bound);
  return greedy_lb_unburnt(std::get<UnburntStack>(s)).bound;
}

bool verify_from_text(const std::string& text, const std::vector<int>& flips) {
  return verify_trace(parse_stack(text), flips);
}

std::string flip_text(const std::string& text, int i) {
  AnyStack s = parse_stack(text);
  std::visit([i](auto& v) { flip_in_place(v, i); }, s);
  return format_stack(s);
}

}  // namespace

PYBIND11_MODULE(pancakes, m) {
  m.doc() = "Pancake sorting by prefix reversals";
  m.def("flip", &flip_text, py::arg("stack"), py::arg("i"),
        "Flip the top i pancakes of a stack given as text");
  m.def("sort", &sort_any, py::arg("stack"), py::arg("algo") = "burnt-avg",
        py::arg("seed") = 0,
        "Sort a stack; returns the flip sizes of the trace");
  m.def("distance", &exact_distance, py::arg("stack"),
        py::arg("endgame_size") = 7, "Exact flip distance by A*");
  m.def("bound", &bound_of, py::arg("stack"),
        "Lower bound on the flip distance");
  m.def("verify", &verify_from_text, py::arg("stack"), py::arg("flips"),
        "True iff the flip sequence sorts the stack");
  m.def(
      "max_flips",
      [](int n, const std::string& variant) {
        const auto r = max_flips(
            n, variant == "burnt" ? Variant::Burnt : Variant::Unburnt);
        return r.value;
      },
      py::arg("n"), py::arg("variant") = "unburnt",
      "Worst-case minimal flips f(n) or g(n)");
  m.def(
      "average_flips",
      [](const std::string& algo, int n, std::uint64_t samples,
         std::uint64_t seed) {
        return average_flips(algorithm_from_name(algo), n, false, samples,
                             seed)
            .mean;
      },
      py::arg("algo"), py::arg("n"), py::arg("samples") = 1000,
      py::arg("seed") = 0, "Sampled mean flip count");
}
