#include "cbtree/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cbtree {
namespace io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw std::runtime_error(origin + ": " + what);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, e.what());
    }
}

seq seq_from_json(const json& j, const std::string& origin, const char* field) {
    if (!j.is_array()) fail(origin, std::string(field) + " must be an array of naturals");
    seq s;
    for (const auto& d : j) {
        if (!d.is_number_unsigned())
            fail(origin, std::string(field) + " must contain naturals");
        s.push_back(d.get<uint64_t>());
    }
    return s;
}

json seq_to_json(const seq& s) {
    json a = json::array();
    for (symbol d : s) a.push_back(d);
    return a;
}

lasso lasso_from_json(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("prefix") || !j.contains("cycle"))
        fail(origin, "a lasso needs \"prefix\" and \"cycle\"");
    seq cycle = seq_from_json(j["cycle"], origin, "cycle");
    if (cycle.empty()) fail(origin, "lasso cycle must be nonempty");
    return lasso(seq_from_json(j["prefix"], origin, "prefix"), cycle);
}

json lasso_json(const lasso& p) {
    return json{{"prefix", seq_to_json(p.prefix)}, {"cycle", seq_to_json(p.cycle)}};
}

json entry_json(const cert_entry& e) {
    return json{{"sigma", seq_to_json(e.sigma)}, {"flag", e.flag},
                {"point", lasso_json(e.point)}};
}

cert_entry entry_from_json(const json& j, const std::string& origin) {
    cert_entry e;
    if (!j.contains("sigma") || !j.contains("flag") || !j.contains("point"))
        fail(origin, "an entry needs \"sigma\", \"flag\" and \"point\"");
    e.sigma = seq_from_json(j["sigma"], origin, "sigma");
    if (!j["flag"].is_number_unsigned() || j["flag"].get<uint64_t>() > 1)
        fail(origin, "flag must be 0 or 1");
    e.flag = j["flag"].get<int>();
    e.point = lasso_from_json(j["point"], origin);
    return e;
}

json one_step_json(const one_step_cert& c) {
    json entries = json::array();
    for (const auto& e : c.entries) entries.push_back(entry_json(e));
    return json{{"type", "one_step"},
                {"label_budget", c.label_budget},
                {"complete", c.complete},
                {"entries", entries}};
}

one_step_cert one_step_from_json(const json& j, const std::string& origin) {
    one_step_cert c;
    if (j.contains("label_budget")) c.label_budget = j["label_budget"].get<symbol>();
    if (j.contains("complete")) c.complete = j["complete"].get<bool>();
    if (!j.contains("entries") || !j["entries"].is_array())
        fail(origin, "certificate needs an \"entries\" array");
    for (const auto& e : j["entries"]) c.entries.push_back(entry_from_json(e, origin));
    return c;
}

} // namespace

tree_automaton automaton_from_json(const std::string& text, const std::string& origin) {
    json j = parse(text, origin);
    if (!j.is_object()) fail(origin, "top level must be an object");
    if (!j.contains("states") || !j["states"].is_array())
        fail(origin, "missing \"states\" array");

    tree_automaton t;
    std::map<std::string, size_t> by_name;
    for (const auto& s : j["states"]) {
        if (!s.is_string()) fail(origin, "state ids must be strings");
        std::string name = s.get<std::string>();
        if (by_name.count(name)) fail(origin, "duplicate state id \"" + name + "\"");
        by_name[name] = t.add_state(name);
    }

    if (by_name.empty()) {
        if (j.contains("root") && !j["root"].is_null())
            fail(origin, "root given but no states");
        return t;
    }
    if (!j.contains("root") || !j["root"].is_string())
        fail(origin, "missing \"root\" id");
    auto root = by_name.find(j["root"].get<std::string>());
    if (root == by_name.end()) fail(origin, "root is not a listed state");
    t.set_root(root->second);

    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(origin, "\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("from") || !e.contains("label") ||
                !e.contains("to"))
                fail(origin, "each edge needs \"from\", \"label\", \"to\"");
            auto from = by_name.find(e["from"].get<std::string>());
            auto to = by_name.find(e["to"].get<std::string>());
            if (from == by_name.end() || to == by_name.end())
                fail(origin, "edge endpoint is not a listed state");
            if (!e["label"].is_number_unsigned())
                fail(origin, "edge label must be a natural");
            try {
                t.add_edge(from->second, e["label"].get<uint64_t>(), to->second);
            } catch (const std::invalid_argument&) {
                fail(origin, "duplicate edge (" + e["from"].get<std::string>() + ", " +
                                 e["label"].dump() + ")");
            }
        }
    }

    std::vector<bool> reachable(t.num_states(), false);
    std::vector<size_t> queue{t.root()};
    reachable[t.root()] = true;
    for (size_t i = 0; i < queue.size(); ++i)
        for (const auto& [label, to] : t.out(queue[i]))
            if (!reachable[to]) {
                reachable[to] = true;
                queue.push_back(to);
            }
    for (size_t s = 0; s < t.num_states(); ++s)
        if (!reachable[s])
            fail(origin, "state \"" + t.name(s) + "\" is unreachable from the root");
    return t;
}

tree_automaton load_automaton(const std::string& path) {
    return automaton_from_json(slurp(path), path);
}

std::string automaton_to_json(const tree_automaton& t) {
    json j;
    json states = json::array();
    for (size_t s = 0; s < t.num_states(); ++s) states.push_back(t.name(s));
    j["states"] = states;
    j["root"] = t.empty_language() ? json() : json(t.name(t.root()));
    json edges = json::array();
    for (size_t s = 0; s < t.num_states(); ++s)
        for (const auto& [label, to] : t.out(s))
            edges.push_back(json{{"from", t.name(s)}, {"label", label}, {"to", t.name(to)}});
    j["edges"] = edges;
    return j.dump(2);
}

std::vector<lasso> load_lassos(const std::string& path) {
    json j = parse(slurp(path), path);
    if (j.is_object() && j.contains("lassos")) j = j["lassos"];
    if (!j.is_array()) fail(path, "expected an array of lassos");
    std::vector<lasso> out;
    for (const auto& e : j) out.push_back(lasso_from_json(e, path));
    return out;
}

std::string lasso_to_json(const lasso& p) { return lasso_json(p).dump(); }

std::string one_step_to_json(const one_step_cert& c) { return one_step_json(c).dump(2); }

std::string global_to_json(const global_cert& c) {
    json levels = json::array();
    for (const auto& lvl : c.levels)
        levels.push_back(json{{"index", lvl.index}, {"cert", one_step_json(lvl.cert)}});
    return json{{"type", "global"}, {"levels", levels}}.dump(2);
}

loaded_cert load_cert(const std::string& path) {
    json j = parse(slurp(path), path);
    if (!j.is_object() || !j.contains("type")) fail(path, "certificate needs a \"type\"");
    loaded_cert out;
    std::string type = j["type"].get<std::string>();
    if (type == "one_step") {
        out.one = one_step_from_json(j, path);
    } else if (type == "global") {
        global_cert g;
        if (!j.contains("levels") || !j["levels"].is_array())
            fail(path, "global certificate needs \"levels\"");
        for (const auto& lvl : j["levels"]) {
            if (!lvl.contains("index") || !lvl.contains("cert"))
                fail(path, "each level needs \"index\" and \"cert\"");
            g.levels.push_back(
                {lvl["index"].get<uint64_t>(), one_step_from_json(lvl["cert"], path)});
        }
        out.glob = std::move(g);
    } else {
        fail(path, "unknown certificate type \"" + type + "\"");
    }
    return out;
}

std::string dot(const tree_automaton& t) {
    std::ostringstream out;
    out << "digraph tree {\n  rankdir=LR;\n";
    if (!t.empty_language()) {
        out << "  __start [shape=point];\n";
        out << "  __start -> \"" << t.name(t.root()) << "\";\n";
    }
    for (size_t s = 0; s < t.num_states(); ++s)
        out << "  \"" << t.name(s) << "\" [shape=circle];\n";
    for (size_t s = 0; s < t.num_states(); ++s)
        for (const auto& [label, to] : t.out(s))
            out << "  \"" << t.name(s) << "\" -> \"" << t.name(to) << "\" [label=\""
                << label << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace io
} // namespace cbtree
