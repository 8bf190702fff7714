#pragma once

#include <string>
#include <vector>

#include "cbtree/automaton.hpp"

namespace cbtree {

// Forward/backward witness pair, run end to end against ground truth
// computed structurally. agrees is the only field tests rely on; the
// strings are for reporting.
struct reduction_report {
    std::string name;
    std::string instance_summary;
    std::string decoded_answer;
    std::string ground_truth;
    bool agrees = false;
    std::vector<std::string> details;
};

// perfect subtree of a tree with uncountable body, through the binary
// translations
reduction_report r1_ptt_binary(const tree_automaton& t);

// unique-path digit extraction from any perfect subset of the exploded
// translation; never consults the input path
reduction_report r2_ucbaire_pst(const tree_automaton& t, size_t digits);

// decoder half of r2, usable with any solution tree whose body is a
// perfect subset of [tau_C(explode(T))]
seq r2_decode(const tree_automaton& solution, size_t digits);

// kernel of a random sub-automaton of s; empty when the draw has a
// countable body (caller retries with another seed)
tree_automaton random_perfect_subsolution(const tree_automaton& s, uint64_t seed);

// well-foundedness through the explosion and the {0^n} ⊔ T encodings
reduction_report r3_wf_encodings(const tree_automaton& t);

// WF* through ScCount: k - 1 = sum of 2^m over well-founded inputs
reduction_report r4_wfstar_sccount(const std::vector<tree_automaton>& ts);

// well-foundedness through perfect-kernel emptiness
reduction_report r5_wfs_pk(const tree_automaton& t);

// LPO^n against listings of {j : p_j = 0^w}, both directions
reduction_report r6_lpo_list(const std::vector<lasso>& ps);

// well-foundedness through the scattered listing of the constant
// binary disjoint union
reduction_report r7_wf_wsclist(const tree_automaton& t);

// kernel of a disjoint union sliced back into the member kernels
reduction_report r8_pk_slices(const std::vector<tree_automaton>& ts);

} // namespace cbtree
