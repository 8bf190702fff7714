#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbtree/cbengine.hpp"
#include "cbtree/certificates.hpp"
#include "cbtree/combinators.hpp"
#include "cbtree/io.hpp"
#include "cbtree/oracle.hpp"
#include "cbtree/reductions.hpp"

using namespace cbtree;
using nlohmann::json;

namespace {

json entry_json(const scattered_entry& e) {
    return json{{"flag", e.flag},
                {"point", json::parse(io::lasso_to_json(e.point))}};
}

std::string entry_line(const scattered_entry& e) {
    return "flag=" + std::to_string(e.flag) + " point=" + e.point.to_string();
}

oracle::membership member_fn(const tree_automaton& t) {
    return [&t](const seq& s) { return t.member(s); };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cantor-Bendixson analysis of regular trees"};
    app.require_subcommand(1);
    std::function<int()> action;

    // analyze
    {
        auto* cmd = app.add_subcommand("analyze", "cardinality, WF, kernel, rank, ScCount");
        auto file = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file, "automaton file")->required();
        cmd->add_flag("--json", *as_json, "machine readable output");
        cmd->callback([=, &action] {
            action = [=] {
                tree_automaton t = io::load_automaton(*file);
                cardinality card = body_cardinality(t);
                tree_automaton kernel = perfect_kernel(t);
                uint64_t rank = cb_rank(t);
                uint64_t sccount = scattered_count(t);
                if (*as_json) {
                    std::cout << json{{"cardinality", card.to_string()},
                                      {"wf", card.tag == card_tag::empty},
                                      {"kernel_states", kernel.num_states()},
                                      {"rank", rank},
                                      {"sccount", sccount}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "cardinality=" << card.to_string()
                              << " wf=" << (card.tag == card_tag::empty ? "true" : "false")
                              << " kernel=" << kernel.num_states() << " rank=" << rank
                              << " sccount=" << sccount << "\n";
                }
                return 0;
            };
        });
    }

    // derive / kernel
    {
        auto* cmd = app.add_subcommand("derive", "iterated Cantor-Bendixson derivative");
        auto file = std::make_shared<std::string>();
        auto steps = std::make_shared<uint64_t>(1);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--steps", *steps, "number of derivative steps");
        cmd->callback([=, &action] {
            action = [=] {
                tree_automaton t = io::load_automaton(*file);
                for (uint64_t i = 0; i < *steps; ++i) t = derivative(t);
                std::cout << io::automaton_to_json(t) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("kernel", "perfect kernel");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([=, &action] {
            action = [=] {
                std::cout << io::automaton_to_json(perfect_kernel(io::load_automaton(*file)))
                          << "\n";
                return 0;
            };
        });
    }

    // scatter / list / dedup
    {
        auto* cmd = app.add_subcommand("scatter", "scattered part listing");
        auto file = std::make_shared<std::string>();
        auto limit = std::make_shared<size_t>(10);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--limit", *limit, "entries to produce");
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action] {
            action = [=] {
                auto entries = scattered_list(io::load_automaton(*file), *limit);
                if (*as_json) {
                    json a = json::array();
                    for (const auto& e : entries) a.push_back(entry_json(e));
                    std::cout << a.dump(2) << "\n";
                } else {
                    for (const auto& e : entries) std::cout << entry_line(e) << "\n";
                }
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("list", "listing of a countable body");
        auto file = std::make_shared<std::string>();
        auto limit = std::make_shared<size_t>(10);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--limit", *limit);
        cmd->add_flag("--json", *as_json);
        cmd->callback([=, &action] {
            action = [=] {
                list_result r = list_countable(io::load_automaton(*file), *limit);
                if (*as_json) {
                    json a = json::array();
                    for (const auto& e : r.entries) a.push_back(entry_json(e));
                    std::cout << json{{"tag", r.tag}, {"entries", a}}.dump(2) << "\n";
                } else {
                    std::cout << "tag=" << r.tag << "\n";
                    for (const auto& e : r.entries) std::cout << entry_line(e) << "\n";
                }
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("dedup", "injective listing of a countable body");
        auto file = std::make_shared<std::string>();
        auto limit = std::make_shared<size_t>(10);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--limit", *limit);
        cmd->callback([=, &action] {
            action = [=] {
                list_result r = list_countable(io::load_automaton(*file), *limit);
                for (const lasso& p : dedup_list(r.tag, r.entries))
                    std::cout << p.to_string() << "\n";
                return 0;
            };
        });
    }

    // transform
    {
        auto* cmd = app.add_subcommand("transform", "tree constructors");
        auto op = std::make_shared<std::string>();
        auto files = std::make_shared<std::vector<std::string>>();
        cmd->add_option("op", *op,
                        "explode|tauc|taub|union|union2|union2const|interleave")
            ->required();
        cmd->add_option("files", *files, "automaton files")->required();
        cmd->callback([=, &action] {
            action = [=] {
                std::vector<tree_automaton> ts;
                for (const auto& f : *files) ts.push_back(io::load_automaton(f));
                tree_automaton out;
                if (*op == "explode") {
                    if (ts.size() != 1) throw std::runtime_error("explode takes one file");
                    out = explode(ts[0]);
                } else if (*op == "tauc") {
                    if (ts.size() != 1) throw std::runtime_error("tauc takes one file");
                    out = translate_tree_to_binary(ts[0]);
                } else if (*op == "taub") {
                    if (ts.size() != 1) throw std::runtime_error("taub takes one file");
                    out = translate_tree_to_baire(ts[0]);
                } else if (*op == "union") {
                    out = disjoint_union(ts);
                } else if (*op == "union2") {
                    out = binary_disjoint_union(ts);
                } else if (*op == "union2const") {
                    if (ts.size() != 1)
                        throw std::runtime_error("union2const takes one file");
                    out = binary_disjoint_union_const(ts[0]);
                } else if (*op == "interleave") {
                    if (ts.size() != 2)
                        throw std::runtime_error("interleave takes two files");
                    out = interleave_trees(ts[0], ts[1]);
                } else {
                    throw std::runtime_error("unknown transform \"" + *op + "\"");
                }
                std::cout << io::automaton_to_json(out) << "\n";
                return 0;
            };
        });
    }

    // certify / verify
    {
        auto* cmd = app.add_subcommand("certify", "mCB-certificate generation");
        auto file = std::make_shared<std::string>();
        auto limit = std::make_shared<size_t>(16);
        auto global_flag = std::make_shared<bool>(false);
        cmd->add_option("file", *file)->required();
        cmd->add_option("--limit", *limit, "entries per level");
        cmd->add_flag("--global", *global_flag, "whole derivative chain");
        cmd->callback([=, &action] {
            action = [=] {
                tree_automaton t = io::load_automaton(*file);
                if (*global_flag)
                    std::cout << io::global_to_json(global(t, *limit)) << "\n";
                else
                    std::cout << io::one_step_to_json(one_step(t, *limit)) << "\n";
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("verify", "mCB-certificate verification");
        auto file = std::make_shared<std::string>();
        auto cert_file = std::make_shared<std::string>();
        auto depth = std::make_shared<size_t>(8);
        auto width = std::make_shared<symbol>(0);
        cmd->add_option("file", *file)->required();
        cmd->add_option("cert", *cert_file)->required();
        cmd->add_option("--depth", *depth, "word length budget");
        cmd->add_option("--width", *width, "label budget (default: max label + 2)");
        cmd->callback([=, &action] {
            action = [=] {
                tree_automaton t = io::load_automaton(*file);
                io::loaded_cert c = io::load_cert(*cert_file);
                symbol w = *width ? *width : t.max_label() + 2;
                std::vector<violation> violations =
                    c.one ? verify_one_step(t, *c.one, *depth, w)
                          : verify_global(t, *c.glob, *depth, w);
                if (violations.empty()) {
                    std::cout << "ok\n";
                    return 0;
                }
                for (const auto& v : violations)
                    std::cout << "violation " << v.clause << ": " << v.detail << "\n";
                return 2;
            };
        });
    }

    // reduce
    {
        auto* cmd = app.add_subcommand("reduce", "run a reduction witness pair");
        auto which = std::make_shared<std::string>();
        auto files = std::make_shared<std::vector<std::string>>();
        auto digits = std::make_shared<size_t>(8);
        cmd->add_option("which", *which, "r1..r8")->required();
        cmd->add_option("inputs", *files, "automaton files (r6: one lasso file)")
            ->required();
        cmd->add_option("--digits", *digits, "digits decoded by r2");
        cmd->callback([=, &action] {
            action = [=] {
                reduction_report rep;
                if (*which == "r6") {
                    if (files->size() != 1)
                        throw std::runtime_error("r6 takes one lasso file");
                    rep = r6_lpo_list(io::load_lassos(files->at(0)));
                } else {
                    std::vector<tree_automaton> ts;
                    for (const auto& f : *files) ts.push_back(io::load_automaton(f));
                    if (*which == "r1") rep = r1_ptt_binary(ts.at(0));
                    else if (*which == "r2") rep = r2_ucbaire_pst(ts.at(0), *digits);
                    else if (*which == "r3") rep = r3_wf_encodings(ts.at(0));
                    else if (*which == "r4") rep = r4_wfstar_sccount(ts);
                    else if (*which == "r5") rep = r5_wfs_pk(ts.at(0));
                    else if (*which == "r7") rep = r7_wf_wsclist(ts.at(0));
                    else if (*which == "r8") rep = r8_pk_slices(ts);
                    else throw std::runtime_error("unknown reduction \"" + *which + "\"");
                }
                std::cout << rep.decoded_answer << " agrees="
                          << (rep.agrees ? "true" : "false") << "\n";
                return rep.agrees ? 0 : 2;
            };
        });
    }

    // oracle
    {
        auto* cmd = app.add_subcommand("oracle", "depth-bounded brute force");
        auto what = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto depth = std::make_shared<size_t>(8);
        auto width = std::make_shared<symbol>(2);
        auto ext = std::make_shared<size_t>(0);
        auto cap = std::make_shared<uint64_t>(1000);
        cmd->add_option("what", *what, "prefixes|isolated|count")->required();
        cmd->add_option("file", *file)->required();
        cmd->add_option("--depth", *depth);
        cmd->add_option("--width", *width);
        cmd->add_option("--ext", *ext, "extension budget (default: state count)");
        cmd->add_option("--cap", *cap);
        cmd->callback([=, &action] {
            action = [=] {
                tree_automaton t = io::load_automaton(*file);
                oracle::budgets b{*depth, *width, *ext ? *ext : t.num_states() + 1};
                auto member = member_fn(t);
                if (*what == "prefixes") {
                    for (const seq& s : oracle::extendible_prefixes(member, b))
                        std::cout << seq_to_string(s) << "\n";
                } else if (*what == "isolated") {
                    for (const auto& rep : oracle::isolated_at_depth(member, b))
                        std::cout << "prefix=" << seq_to_string(rep.prefix) << " point="
                                  << (rep.point ? rep.point->to_string() : "inconclusive")
                                  << "\n";
                } else if (*what == "count") {
                    auto c = oracle::count_paths_capped(member, b, *cap);
                    if (c.capped) std::cout << "count=≥" << c.value << "\n";
                    else std::cout << "count=" << c.value << "\n";
                } else {
                    throw std::runtime_error("unknown oracle query \"" + *what + "\"");
                }
                return 0;
            };
        });
    }

    // dot
    {
        auto* cmd = app.add_subcommand("dot", "GraphViz output");
        auto file = std::make_shared<std::string>();
        cmd->add_option("file", *file)->required();
        cmd->callback([=, &action] {
            action = [=] {
                std::cout << io::dot(io::load_automaton(*file));
                return 0;
            };
        });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
