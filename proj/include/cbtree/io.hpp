#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbtree/automaton.hpp"
#include "cbtree/cbengine.hpp"
#include "cbtree/certificates.hpp"

namespace cbtree {
namespace io {

// Wire format: {"states": [ids], "root": id|null, "edges":
// [{"from","label","to"}]}. Determinism and reachability are validated
// on load; errors carry the offending field.
tree_automaton automaton_from_json(const std::string& text, const std::string& origin);
tree_automaton load_automaton(const std::string& path);
std::string automaton_to_json(const tree_automaton& t);

std::vector<lasso> load_lassos(const std::string& path);
std::string lasso_to_json(const lasso& p);

std::string one_step_to_json(const one_step_cert& c);
std::string global_to_json(const global_cert& c);

struct loaded_cert {
    std::optional<one_step_cert> one;
    std::optional<global_cert> glob;
};
loaded_cert load_cert(const std::string& path);

// GraphViz output; state names match the identifiers of the input file.
std::string dot(const tree_automaton& t);

} // namespace io
} // namespace cbtree
