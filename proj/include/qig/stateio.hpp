#ifndef QIG_STATEIO_HPP
#define QIG_STATEIO_HPP

#include <optional>
#include <string>

#include "qig/matcore.hpp"

namespace qig {

// State files are UTF-8 JSON:
//   { "dims": [d1, d2],
//     "rho":  [[[re, im], ...], ...],   // (d1 d2) x (d1 d2)
//     "label": "optional" }
// Observable files carry "matrix" instead of "dims"/"rho".
// Numbers are written with 17 significant digits so a write/read round trip
// is bit-identical.

struct LoadedState {
  BipartiteState state;
  std::string label;
};

struct LoadedObservable {
  Observable observable;
  std::string label;
};

LoadedState read_state(const std::string &path);
void write_state(const std::string &path, const BipartiteState &s,
                 const std::string &label = "");

LoadedObservable read_observable(const std::string &path);
void write_observable(const std::string &path, const Observable &a,
                      const std::string &label = "");

} // namespace qig

#endif
