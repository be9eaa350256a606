#pragma once

#include <map>
#include <string>
#include <vector>

#include "plumbtwist/plumbing.hpp"

namespace pt {

// One factor of a twist word: a Dehn twist along `sphere`, raised to `exponent`.
struct TwistFactor {
  std::string sphere;
  int exponent = 1;
};

// Ordered factors; the leftmost factor is applied last (psi = d1 o ... o dl).
struct TwistWord {
  std::vector<TwistFactor> factors;
  bool empty() const { return factors.empty(); }
};

enum class Orientation { standard, opposite };  // the set B vs B^op

// An element of B (or B^op): a +/- disk choice at every plumbing point.
struct DiskChoice {
  Orientation orientation = Orientation::standard;
  std::map<std::string, char> choice;  // point id -> '+' or '-'

  bool operator==(const DiskChoice& o) const {
    return orientation == o.orientation && choice == o.choice;
  }
  bool operator<(const DiskChoice& o) const {
    if (orientation != o.orientation) return orientation < o.orientation;
    return choice < o.choice;
  }
};

struct twist_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word syntax: "t0 s1^-1 s2^-1". t<k> indexes positive spheres from 0,
// s<k> indexes negative spheres from 1 (the paper's tau_0, sigma_1, sigma_2).
TwistWord parse_word(const std::string& text, const PlumbingGraph& g);
std::string format_word(const TwistWord& w);

struct PennerDiagnostics {
  bool ok = false;
  std::vector<std::string> problems;
};

// Generalized Penner condition: positive spheres carry positive exponents,
// negative spheres negative ones (swapped for B^op), and every sphere occurs.
PennerDiagnostics is_generalized_penner(const TwistWord& w, const PlumbingGraph& g,
                                        Orientation orient = Orientation::standard);

// F_{tau_k} / F_{sigma_j^-1} of Lemma 1: the twisted sphere's points are all
// set to the twist's sign (+ for tau, - for sigma^-1; roles swap on B^op).
DiskChoice apply_F(const TwistFactor& gen, const DiskChoice& dc, const PlumbingGraph& g);

// F_psi = F_{d1} o ... o F_{dl} (rightmost factor applied first).
DiskChoice apply_word_F(const TwistWord& w, const DiskChoice& dc, const PlumbingGraph& g);

// The common value of F_psi over all of B: choice(p) = '+' iff the leftmost
// tau on p's positive sphere precedes the leftmost sigma^-1 on its negative
// sphere (leftmost = applied last).
DiskChoice invariant_track(const TwistWord& w, const PlumbingGraph& g,
                           Orientation orient = Orientation::standard);

// All 2^N disk choices over the graph's points.
std::vector<DiskChoice> all_disk_choices(const PlumbingGraph& g,
                                         Orientation orient = Orientation::standard);

// Expand exponents to repeated unit factors (F is idempotent per sphere).
std::vector<TwistFactor> unit_factors(const TwistWord& w);

}  // namespace pt
