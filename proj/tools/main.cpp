// Command-line front end: field inspection, relation calculus, coset
// computations by both routes, canonical forms, diagrams, colligations and
// the verification battery.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 parse or
// validation error, 3 domain error (non-composable, singular, too large).

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "glq/io.hpp"
#include "glq/verify.hpp"

namespace {

using namespace glq;

struct GlobalOpts {
    int p = 2;
    int l = 1;
    std::vector<int> modulus;
    int q = 0;  // 0 = use p and l
    uint64_t seed = 0;
    long trials = 200;
    std::string output = "text";
};

const FieldSpec& resolve_field(const GlobalOpts& g) {
    if (g.q > 0) {
        int p = 2;
        while (p <= g.q && g.q % p != 0) ++p;
        int l = 0;
        long power = 1;
        while (power < g.q) {
            power *= p;
            ++l;
        }
        if (power != g.q) throw glq::ParseError("q must be a prime power");
        return FieldSpec::make(p, l, g.modulus.empty()
                                         ? std::nullopt
                                         : std::optional<std::vector<int>>(g.modulus));
    }
    return FieldSpec::make(g.p, g.l, g.modulus.empty()
                                         ? std::nullopt
                                         : std::optional<std::vector<int>>(g.modulus));
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw glq::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

std::string coset_text(const Coset& c) {
    std::ostringstream os;
    os << "alpha: (" << c.alpha().lo << ", " << c.alpha().hi << ")\n"
       << "beta:  (" << c.beta().lo << ", " << c.beta().hi << ")\n"
       << "eta:   " << c.eta() << "\n"
       << "chi:   " << (c.chi().dim() ? mat_to_text(c.chi().space().basis()) : "(zero relation)")
       << "\n";
    return os.str();
}

void print_coset(const Coset& c, const GlobalOpts& g) {
    if (g.output == "json")
        std::cout << coset_to_json(c).dump(2) << "\n";
    else
        std::cout << coset_text(c);
}

void print_relation(const LinRel& r, const GlobalOpts& g) {
    if (g.output == "json") {
        std::cout << relation_to_json(r).dump(2) << "\n";
    } else {
        std::cout << "m: " << r.src_dim() << "  n: " << r.tgt_dim() << "\n"
                  << "basis: " << (r.dim() ? mat_to_text(r.space().basis()) : "(zero)") << "\n";
    }
}

Coset load_coset(const std::string& path) {
    return coset_from_json(nlohmann::json::parse(read_input(path)));
}

LinRel load_relation(const std::string& path, const GlobalOpts& g) {
    nlohmann::json j = nlohmann::json::parse(read_input(path));
    const FieldSpec& f = j.contains("field") ? field_from_json(j["field"]) : resolve_field(g);
    return relation_from_json(j, f);
}

int report_all(const std::vector<verify::CheckReport>& reports, const GlobalOpts& g) {
    bool all_pass = true;
    if (g.output == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
    }
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        std::cerr << r.name << " elapsed " << r.elapsed_seconds << "s\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the double-coset category over F_q"};
    app.require_subcommand(0, 1);

    GlobalOpts g;
    app.add_option("--p", g.p, "field characteristic (prime)");
    app.add_option("--l", g.l, "extension degree");
    app.add_option("--modulus", g.modulus, "modulus coefficients, constant term first")
        ->delimiter(',');
    app.add_option("--q", g.q, "field order as a prime power (alternative to --p/--l)");
    app.add_option("--seed", g.seed, "root seed for randomized checks");
    app.add_option("--trials", g.trials, "trial count for randomized checks");
    app.add_option("--output", g.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::function<int()> action;

    // field
    auto* cmd_field = app.add_subcommand("field", "print the field presentation and elements");
    cmd_field->fallthrough();
    cmd_field->callback([&] {
        action = [&]() {
            const FieldSpec& f = resolve_field(g);
            if (g.output == "json") {
                nlohmann::json j = field_to_json(f);
                j["q"] = f.q();
                nlohmann::json elems = nlohmann::json::array();
                for (Scalar s : f.elements()) elems.push_back(s.to_text());
                j["elements"] = elems;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "q: " << f.q() << " (p=" << f.p() << ", l=" << f.l() << ")\n";
                std::cout << "modulus:";
                for (int c : f.modulus()) std::cout << ' ' << c;
                std::cout << "\nelements:";
                for (Scalar s : f.elements()) std::cout << ' ' << s.to_text();
                std::cout << "\n";
            }
            return 0;
        };
    });

    // rel
    auto* cmd_rel = app.add_subcommand("rel", "linear relation calculus");
    cmd_rel->fallthrough();
    cmd_rel->require_subcommand(1);
    {
        static std::string in_a, in_b;
        auto* compose = cmd_rel->add_subcommand("compose", "compose two relations (first ∘ second)");
        compose->fallthrough();
        compose->add_option("first", in_a, "relation JSON (Q in Q∘P)")->required();
        compose->add_option("second", in_b, "relation JSON (P in Q∘P)")->required();
        compose->callback([&] {
            action = [&]() {
                LinRel a = load_relation(in_a, g), b = load_relation(in_b, g);
                print_relation(a.compose(b), g);
                return 0;
            };
        });
        static std::string in_r;
        auto* inv = cmd_rel->add_subcommand("inv", "pseudoinverse (coordinate block swap)");
        inv->fallthrough();
        inv->add_option("relation", in_r, "relation JSON")->required();
        inv->callback([&] {
            action = [&]() {
                print_relation(load_relation(in_r, g).pseudoinverse(), g);
                return 0;
            };
        });
        static std::string in_i;
        auto* invar = cmd_rel->add_subcommand("invariants", "kernel, image, domain, indefiniteness, rank");
        invar->fallthrough();
        invar->add_option("relation", in_i, "relation JSON")->required();
        invar->callback([&] {
            action = [&]() {
                LinRel r = load_relation(in_i, g);
                auto sub_text = [](const Subspace& s) {
                    return s.dim() ? mat_to_text(s.basis()) : std::string("(zero)");
                };
                if (g.output == "json") {
                    nlohmann::json j{{"rank", r.rank()},
                                     {"ker_dim", r.kernel().dim()},
                                     {"im_dim", r.image().dim()},
                                     {"dom_dim", r.domain().dim()},
                                     {"indef_dim", r.indef().dim()}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "ker:   " << sub_text(r.kernel()) << "\n"
                              << "im:    " << sub_text(r.image()) << "\n"
                              << "dom:   " << sub_text(r.domain()) << "\n"
                              << "indef: " << sub_text(r.indef()) << "\n"
                              << "rk:    " << r.rank() << "\n";
                }
                return 0;
            };
        });
    }

    // coset
    auto* cmd_coset = app.add_subcommand("coset", "double-coset category operations");
    cmd_coset->fallthrough();
    cmd_coset->require_subcommand(1);
    {
        static std::string chi_in = "-";
        static int alpha_lo = 0;
        auto* chi = cmd_coset->add_subcommand("chi", "invariants (chi, eta) of a window");
        chi->fallthrough();
        chi->add_option("window", chi_in, "window text file or - for stdin");
        chi->add_option("--alpha-lo", alpha_lo, "lower endpoint of the target object");
        chi->callback([&] {
            action = [&]() {
                Window w = parse_window(read_input(chi_in), resolve_field(g), alpha_lo);
                print_coset(coset_from_window(w), g);
                return 0;
            };
        });

        static std::string star_a, star_b, star_path = "both";
        static bool print_window = false;
        static int star_alpha_lo = 0;
        auto* st = cmd_coset->add_subcommand("star", "star product of two morphisms");
        st->fallthrough();
        st->add_option("first", star_a, "window text or coset JSON")->required();
        st->add_option("second", star_b, "window text or coset JSON")->required();
        st->add_option("--path", star_path, "computation path")
            ->check(CLI::IsMember({"matrix", "invariant", "both"}));
        st->add_option("--alpha-lo", star_alpha_lo, "target object offset for window input");
        st->add_flag("--print-window", print_window, "also print the product window (matrix path)");
        st->callback([&] {
            action = [&]() {
                const FieldSpec& f = resolve_field(g);
                std::string ta = read_input(star_a), tb = read_input(star_b);
                bool json_a = looks_like_json(ta), json_b = looks_like_json(tb);
                std::optional<Window> wa, wb;
                std::optional<Coset> ca, cb;
                if (json_a)
                    ca = coset_from_json(nlohmann::json::parse(ta));
                else
                    wa = parse_window(ta, f, star_alpha_lo);
                if (json_b)
                    cb = coset_from_json(nlohmann::json::parse(tb));
                else {
                    int beta_lo = wa ? wa->beta().lo : (ca ? ca->beta().lo : star_alpha_lo);
                    wb = parse_window(tb, f, beta_lo);
                }
                if (star_path != "invariant" && (!wa || !wb))
                    throw glq::ParseError("matrix path requires two window operands");

                std::optional<Coset> matrix_result, invariant_result;
                if (star_path != "invariant") {
                    Window prod = star_matrix(*wa, *wb);
                    matrix_result = coset_from_window(prod);
                    if (print_window) std::cout << window_to_text(prod);
                }
                if (star_path != "matrix") {
                    Coset a = ca ? *ca : coset_from_window(*wa);
                    Coset b = cb ? *cb : coset_from_window(*wb);
                    invariant_result = star(a, b);
                }
                if (matrix_result && invariant_result && *matrix_result != *invariant_result) {
                    std::cerr << "matrix and invariant paths disagree\n";
                    return 1;
                }
                print_coset(matrix_result ? *matrix_result : *invariant_result, g);
                return 0;
            };
        });

        static std::string canon_in;
        auto* canon = cmd_coset->add_subcommand("canon", "kappa table and canonical window");
        canon->fallthrough();
        canon->add_option("coset", canon_in, "coset JSON")->required();
        canon->callback([&] {
            action = [&]() {
                Coset c = load_coset(canon_in);
                KappaTable t = canonical_kappa(c);
                Window w = canonical_window(c);
                if (coset_from_window(w) != c) {
                    std::cerr << "canonical window failed to round-trip\n";
                    return 1;
                }
                if (g.output == "json") {
                    nlohmann::json j = kappa_to_json(t);
                    j["window"] = window_to_text(w);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << kappa_to_text(t) << window_to_text(w);
                }
                return 0;
            };
        });

        static std::string diagram_in;
        auto* diagram = cmd_coset->add_subcommand("diagram", "two-line diagram of a coset");
        diagram->fallthrough();
        diagram->add_option("coset", diagram_in, "coset JSON")->required();
        diagram->callback([&] {
            action = [&]() {
                std::cout << render_diagram(load_coset(diagram_in));
                return 0;
            };
        });

        static std::vector<int> enum_alpha{0, 1}, enum_beta{0, 1};
        static int enum_eta_max = 1;
        auto* en = cmd_coset->add_subcommand("enum", "enumerate all cosets beta -> alpha");
        en->fallthrough();
        en->add_option("--alpha", enum_alpha, "target object lo,hi")->delimiter(',');
        en->add_option("--beta", enum_beta, "source object lo,hi")->delimiter(',');
        en->add_option("--eta-max", enum_eta_max, "maximal eta");
        en->callback([&] {
            action = [&]() {
                if (enum_alpha.size() != 2 || enum_beta.size() != 2)
                    throw glq::ParseError("--alpha and --beta need lo,hi");
                ObjectA alpha{enum_alpha[0], enum_alpha[1]};
                ObjectA beta{enum_beta[0], enum_beta[1]};
                auto cosets = enumerate_cosets(beta, alpha, enum_eta_max, resolve_field(g));
                if (g.output == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const Coset& c : cosets) arr.push_back(coset_to_json(c));
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const Coset& c : cosets)
                        std::cout << "eta=" << c.eta() << " chi="
                                  << (c.chi().dim() ? mat_to_text(c.chi().space().basis())
                                                    : "(zero)")
                                  << "\n";
                    std::cout << cosets.size() << " cosets\n";
                }
                return 0;
            };
        });

        static std::string weight_in;
        auto* weight = cmd_coset->add_subcommand("weight", "point-mass exponent of the canonical measure");
        weight->fallthrough();
        weight->add_option("coset", weight_in, "coset JSON")->required();
        weight->callback([&] {
            action = [&]() {
                std::cout << measure_weight(load_coset(weight_in)) << "\n";
                return 0;
            };
        });
    }

    // colligation
    auto* cmd_coll = app.add_subcommand("colligation", "conjugacy classes of (m+n) block matrices");
    cmd_coll->fallthrough();
    cmd_coll->require_subcommand(1);
    {
        static std::string circ_a, circ_b;
        auto* ci = cmd_coll->add_subcommand("circ", "block product of two colligations");
        ci->fallthrough();
        ci->add_option("first", circ_a, "colligation text")->required();
        ci->add_option("second", circ_b, "colligation text")->required();
        ci->callback([&] {
            action = [&]() {
                const FieldSpec& f = resolve_field(g);
                Colligation r = circ(parse_colligation(read_input(circ_a), f),
                                     parse_colligation(read_input(circ_b), f));
                if (g.output == "json") {
                    nlohmann::json j{{"m", r.m()}, {"inner", r.inner()}, {"matrix", mat_to_text(r.mat())}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << colligation_to_text(r);
                }
                return 0;
            };
        });

        static std::string tr_in, tr_lambda;
        static bool tr_sweep = false;
        auto* tr = cmd_coll->add_subcommand("transfer", "evaluate the transfer function");
        tr->fallthrough();
        tr->add_option("colligation", tr_in, "colligation text")->required();
        tr->add_option("--lambda", tr_lambda, "evaluation point (scalar text)");
        tr->add_flag("--sweep", tr_sweep, "evaluate at every field element");
        tr->callback([&] {
            action = [&]() {
                const FieldSpec& f = resolve_field(g);
                Colligation c = parse_colligation(read_input(tr_in), f);
                if (tr_sweep) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (Scalar lam : f.elements()) {
                        bool defined = transfer_defined(c, lam);
                        if (g.output == "json") {
                            nlohmann::json j{{"lambda", lam.to_text()}, {"defined", defined}};
                            if (defined) j["value"] = mat_to_text(transfer(c, lam));
                            arr.push_back(j);
                        } else if (defined) {
                            std::cout << "lambda=" << lam.to_text() << ": "
                                      << mat_to_text(transfer(c, lam)) << "\n";
                        } else {
                            std::cout << "lambda=" << lam.to_text() << ": singular pencil\n";
                        }
                    }
                    if (g.output == "json") std::cout << arr.dump(2) << "\n";
                    return 0;
                }
                if (tr_lambda.empty()) throw glq::ParseError("need --lambda or --sweep");
                Scalar lam = f.element(f.parse(tr_lambda));
                std::cout << mat_to_text(transfer(c, lam)) << "\n";
                return 0;
            };
        });
    }

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run verification checks");
    cmd_verify->fallthrough();
    cmd_verify->require_subcommand(0, 1);
    cmd_verify->callback([&] {
        if (!action) action = [] { return 0; };  // empty selector: vacuous pass
    });
    {
        static int max_block = 2, max_pad = 2, eta_max = 2, k_max = 2, max_obj = 2;
        static int coll_m = 2, coll_inner = 3;
        static std::string assoc_mode = "exhaustive";
        static std::vector<int> sizes{1, 1, 1, 1, 1, 1};

        auto add_common = [&](CLI::App* s) {
            s->fallthrough();
            s->add_option("--max-block", max_block, "maximal object size");
            s->add_option("--max-pad", max_pad, "maximal random padding");
            s->add_option("--eta-max", eta_max, "eta bound for enumerations");
            return s;
        };

        auto* wd = add_common(cmd_verify->add_subcommand("well-defined", "independence from representatives"));
        wd->callback([&] {
            action = [&]() {
                return report_all({verify::check_well_definedness(resolve_field(g), max_block,
                                                                  max_pad, g.trials, g.seed)},
                                  g);
            };
        });

        auto* as = add_common(cmd_verify->add_subcommand("assoc", "associativity of the star product"));
        as->add_option("--mode", assoc_mode, "exhaustive or random")
            ->check(CLI::IsMember({"exhaustive", "random"}));
        as->callback([&] {
            action = [&]() {
                auto mode = assoc_mode == "random" ? verify::AssocMode::Random
                                                   : verify::AssocMode::Exhaustive;
                long budget = mode == verify::AssocMode::Random ? g.trials : eta_max;
                return report_all({verify::check_associativity(resolve_field(g), mode, budget,
                                                               g.seed)},
                                  g);
            };
        });

        auto* iso = add_common(cmd_verify->add_subcommand("iso", "matrix path vs invariant path"));
        iso->callback([&] {
            action = [&]() {
                return report_all({verify::check_isomorphism(resolve_field(g), g.trials, g.seed,
                                                             max_block, max_pad)},
                                  g);
            };
        });

        auto* comp = cmd_verify->add_subcommand("completeness", "brute-force double-coset oracle");
        comp->fallthrough();
        comp->add_option("--sizes", sizes, "row_minus,a,row_plus,col_minus,b,col_plus")
            ->delimiter(',');
        comp->callback([&] {
            action = [&]() {
                if (sizes.size() != 6) throw glq::ParseError("--sizes needs six values");
                verify::CompletenessSizes s{sizes[0], sizes[1], sizes[2], sizes[3], sizes[4], sizes[5]};
                return report_all({verify::check_completeness_bruteforce(resolve_field(g), s)}, g);
            };
        });

        auto* st = add_common(cmd_verify->add_subcommand("structure", "central elements and ordered-category identities"));
        st->add_option("--k-max", k_max, "zeta exponent bound");
        st->add_option("--max-obj", max_obj, "maximal object size in sweeps");
        st->callback([&] {
            action = [&]() {
                return report_all({verify::check_structure(resolve_field(g), max_obj, k_max,
                                                           eta_max)},
                                  g);
            };
        });

        auto* coll = cmd_verify->add_subcommand("colligation", "transfer-function multiplicativity");
        coll->fallthrough();
        coll->add_option("--m", coll_m, "maximal outer block size");
        coll->add_option("--max-inner", coll_inner, "maximal inner block size");
        coll->callback([&] {
            action = [&]() {
                return report_all({verify::check_colligation(resolve_field(g), coll_m, coll_inner,
                                                             g.trials, g.seed)},
                                  g);
            };
        });

        auto* all = add_common(cmd_verify->add_subcommand("all", "run the whole battery"));
        all->add_option("--k-max", k_max, "zeta exponent bound");
        all->add_option("--max-obj", max_obj, "maximal object size in sweeps");
        all->callback([&] {
            action = [&]() {
                const FieldSpec& f = resolve_field(g);
                std::vector<verify::CheckReport> reports;
                reports.push_back(verify::check_foundations());
                reports.push_back(
                    verify::check_well_definedness(f, max_block, max_pad, g.trials, g.seed));
                reports.push_back(
                    verify::check_associativity(f, verify::AssocMode::Exhaustive, 1, g.seed));
                reports.push_back(
                    verify::check_associativity(f, verify::AssocMode::Random, g.trials, g.seed));
                reports.push_back(verify::check_isomorphism(f, g.trials, g.seed, max_block, max_pad));
                try {
                    reports.push_back(
                        verify::check_completeness_bruteforce(f, verify::CompletenessSizes{}));
                } catch (const TooLarge& e) {
                    verify::CheckReport skip;
                    skip.name = "completeness";
                    skip.notes = std::string("skipped: ") + e.what();
                    reports.push_back(skip);
                }
                reports.push_back(verify::check_structure(f, max_obj, k_max, eta_max));
                reports.push_back(verify::check_cone(f, max_obj, 2));
                reports.push_back(verify::check_colligation(f, coll_m, coll_inner, g.trials, g.seed));
                return report_all(reports, g);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!action) {
        std::cout << app.help();
        return 0;
    }

    try {
        return action();
    } catch (const glq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPrimeCharacteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ReducibleModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const glq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
