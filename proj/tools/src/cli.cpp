#include "asph/cli.hpp"

#include "asph/assembly_io.hpp"
#include "asph/error.hpp"
#include "asph/meyer.hpp"
#include "asph/recipes.hpp"
#include "asph/spectrum.hpp"
#include "asph/verification.hpp"
#include "asph/wall.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

namespace asph::cli {

namespace {

using Json = nlohmann::ordered_json;
using sl2z::MatrixZ;

// Failure attributable to one command-line flag.
class FlagError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MatrixZ parse_matrix(const std::string& flag, const std::string& text, bool special = true) {
    try {
        MatrixZ m = MatrixZ::parse(text);
        if (special) sl2z::require_special(m, "matrix");
        return m;
    } catch (const InvalidInput& e) {
        throw FlagError(flag + ": " + e.what());
    }
}

Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

std::string subspace_text(const wall::QSubspace& s) { return s.to_string(); }

struct Context {
    std::string format = "text";
    std::ostream& out;

    bool json() const { return format == "json"; }
    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

Json report_json(const assembly::InvariantReport& r) {
    return Json::parse(assembly::format_report_json(r));
}

void print_report(const Context& ctx, const assembly::Assembly& a, Json extra = Json::object()) {
    auto report = assembly::compute_invariants(a);
    if (ctx.json()) {
        extra["report"] = report_json(report);
        ctx.emit(extra);
    } else {
        for (const auto& [key, value] : extra.items()) {
            ctx.out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << '\n';
        }
        ctx.out << assembly::format_report_text(report);
    }
}

void print_outcome(const Context& ctx, const recipes::FillingOutcome& o, const std::string& save) {
    Json j;
    j["status"] = recipes::status_name(o.status);
    j["target"] = std::string(o.target_kind == catalog::PortKind::TorusBundle ? "T(" : "N(") +
                  o.target.to_string() + ")";
    j["cover_degree"] = o.cover_degree;
    j["notes"] = o.notes;
    if (o.assembly && !save.empty()) assembly::save(*o.assembly, save);
    if (!o.assembly) {
        if (ctx.json()) {
            ctx.emit(j);
        } else {
            for (const auto& [key, value] : j.items()) {
                ctx.out << key << ": "
                        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
        return;
    }
    print_report(ctx, *o.assembly, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculator for aspherical 4-manifold assemblies", "asph"};
    app.require_subcommand(1);
    Context ctx{"text", out};
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::function<void()> action;

    // meyer
    std::string matrix_text;
    auto* meyer_cmd = app.add_subcommand("meyer", "Meyer function and Rademacher function of a matrix");
    meyer_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    meyer_cmd->callback([&] {
        action = [&] {
            MatrixZ m = parse_matrix("--matrix", matrix_text);
            Rational value = meyer::meyer_function(m);
            if (ctx.json()) {
                Json j;
                j["matrix"] = m.to_string();
                j["meyer"] = meyer::format_rational(value);
                j["rademacher_phi"] = integer_json(meyer::rademacher_phi(m));
                ctx.emit(j);
            } else {
                out << meyer::format_rational(value) << '\n';
            }
        };
    });

    // conjugate
    std::string m1_text, m2_text;
    auto* conj_cmd = app.add_subcommand("conjugate", "Decide SL2(Z) conjugacy with a witness");
    conj_cmd->add_option("--m1", m1_text, "a,b,c,d")->required();
    conj_cmd->add_option("--m2", m2_text, "a,b,c,d")->required();
    conj_cmd->callback([&] {
        action = [&] {
            MatrixZ m1 = parse_matrix("--m1", m1_text);
            MatrixZ m2 = parse_matrix("--m2", m2_text);
            auto r = sl2z::are_conjugate(m1, m2);
            Json j;
            j["conjugate"] = r.conjugate;
            j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
            if (ctx.json()) {
                ctx.emit(j);
            } else {
                out << "conjugate: " << (r.conjugate ? "true" : "false") << '\n';
                if (r.witness) out << "witness: " << r.witness->to_string() << '\n';
            }
        };
    });

    // abelian
    auto* ab_cmd = app.add_subcommand("abelian", "Class in the abelianization Z/12");
    ab_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    ab_cmd->callback([&] {
        action = [&] {
            MatrixZ m = parse_matrix("--matrix", matrix_text);
            auto cls = sl2z::abelianization_class(m);
            if (ctx.json()) {
                Json j;
                j["class"] = cls.value();
                j["order"] = cls.order();
                j["derived"] = cls.value() == 0;
                ctx.emit(j);
            } else {
                out << "class: " << cls.value() << " mod 12\n"
                    << "order: " << cls.order() << '\n'
                    << "derived subgroup: " << (cls.value() == 0 ? "true" : "false") << '\n';
            }
        };
    });

    // word
    std::string word_text;
    auto* word_cmd = app.add_subcommand("word", "Convert between matrices and S/T words");
    auto* word_matrix = word_cmd->add_option("--matrix", matrix_text, "a,b,c,d");
    auto* word_word = word_cmd->add_option("--word", word_text, "e.g. \"T^3 S T^-1\"");
    word_matrix->excludes(word_word);
    word_cmd->callback([&] {
        action = [&] {
            Json j;
            if (!word_word->empty()) {
                sl2z::GeneratorWord w;
                try {
                    w = sl2z::GeneratorWord::parse(word_text);
                } catch (const InvalidInput& e) {
                    throw FlagError(std::string("--word: ") + e.what());
                }
                j["word"] = w.to_string();
                j["matrix"] = sl2z::word_to_matrix(w).to_string();
            } else if (!word_matrix->empty()) {
                MatrixZ m = parse_matrix("--matrix", matrix_text);
                j["matrix"] = m.to_string();
                j["word"] = sl2z::matrix_to_word(m).to_string();
            } else {
                throw FlagError("word: one of --matrix or --word is required");
            }
            if (ctx.json()) {
                ctx.emit(j);
            } else {
                out << "matrix: " << j["matrix"].get<std::string>() << '\n'
                    << "word: " << j["word"].get<std::string>() << '\n';
            }
        };
    });

    // commutator
    auto* comm_cmd = app.add_subcommand("commutator", "Write a matrix as a product of commutators");
    comm_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    comm_cmd->callback([&] {
        action = [&] {
            MatrixZ m = parse_matrix("--matrix", matrix_text);
            auto cert = sl2z::commutator_decomposition(m);
            Json pairs = Json::array();
            for (const auto& [g, h] : cert.pairs) pairs.push_back({g.to_string(), h.to_string()});
            if (ctx.json()) {
                Json j;
                j["target"] = m.to_string();
                j["pairs"] = pairs;
                j["verified"] = cert.verify();
                ctx.emit(j);
            } else {
                out << "target: " << m.to_string() << '\n'
                    << "commutators: " << cert.pairs.size() << '\n';
                for (const auto& [g, h] : cert.pairs) {
                    out << "  [" << g.to_string() << "; " << h.to_string() << "]\n";
                }
                out << "verified: " << (cert.verify() ? "true" : "false") << '\n';
            }
        };
    });

    // wall
    std::string phi_text;
    auto* wall_cmd = app.add_subcommand("wall", "Wall correction of the semi-bundle trick for phi");
    wall_cmd->add_option("--phi", phi_text, "a,b,c,d")->required();
    wall_cmd->callback([&] {
        action = [&] {
            MatrixZ phi = parse_matrix("--phi", phi_text);
            auto triple = wall::semibundle_wall_data(phi);
            auto form = wall::compute_wall_form(triple);
            int trick = wall::semibundle_trick_signature(phi);
            Json gram = Json::array();
            for (const auto& row : form.gram) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(x.get_str());
                gram.push_back(r);
            }
            if (ctx.json()) {
                Json j;
                j["phi"] = phi.to_string();
                j["A"] = subspace_text(triple.a_minus);
                j["B"] = subspace_text(triple.b_core);
                j["C"] = subspace_text(triple.c_plus);
                j["dim_U"] = form.u_basis.size();
                j["gram"] = gram;
                j["correction"] = form.signature;
                j["trick_signature"] = trick;
                ctx.emit(j);
            } else {
                out << "A: " << subspace_text(triple.a_minus) << '\n'
                    << "B: " << subspace_text(triple.b_core) << '\n'
                    << "C: " << subspace_text(triple.c_plus) << '\n'
                    << "dim U: " << form.u_basis.size() << '\n'
                    << "gram: " << gram.dump() << '\n'
                    << "correction: " << form.signature << '\n'
                    << "trick signature: " << trick << '\n';
            }
        };
    });

    // construct xn
    long n_value = 0;
    std::string save_path;
    auto* construct_cmd = app.add_subcommand("construct", "Build a named construction");
    construct_cmd->require_subcommand(1);
    auto* xn_cmd = construct_cmd->add_subcommand("xn", "Closed aspherical X_n with chi = sigma = n");
    xn_cmd->add_option("--n", n_value, "non-negative integer")->required();
    xn_cmd->add_option("--save", save_path, "write the assembly document to FILE");
    xn_cmd->callback([&] {
        action = [&] {
            if (n_value < 0) throw FlagError("--n: must be non-negative, got " + std::to_string(n_value));
            auto a = recipes::recipe_xn(n_value);
            if (!save_path.empty()) assembly::save(a, save_path);
            Json extra;
            extra["construction"] = "X_" + std::to_string(n_value);
            print_report(ctx, a, extra);
        };
    });

    // fill torus-bundle / semi-bundle
    auto* fill_cmd = app.add_subcommand("fill", "Aspherical filling with vanishing Euler characteristic");
    fill_cmd->require_subcommand(1);
    auto* fill_tb = fill_cmd->add_subcommand("torus-bundle", "Fill T(phi)");
    fill_tb->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    fill_tb->add_option("--save", save_path, "write the assembly document to FILE");
    fill_tb->callback([&] {
        action = [&] {
            print_outcome(ctx, recipes::recipe_fill_torus_bundle(parse_matrix("--matrix", matrix_text)),
                          save_path);
        };
    });
    auto* fill_sb = fill_cmd->add_subcommand("semi-bundle", "Fill N(psi)");
    fill_sb->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    fill_sb->add_option("--save", save_path, "write the assembly document to FILE");
    fill_sb->callback([&] {
        action = [&] {
            print_outcome(ctx, recipes::recipe_fill_semibundle(parse_matrix("--matrix", matrix_text)),
                          save_path);
        };
    });

    // virtual-fill
    bool twelve = false;
    auto* vf_cmd = app.add_subcommand("virtual-fill", "Fill a finite cover T(phi^d)");
    vf_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    vf_cmd->add_flag("--degree-twelve", twelve, "use d = 12 instead of the class order");
    vf_cmd->add_option("--save", save_path, "write the assembly document to FILE");
    vf_cmd->callback([&] {
        action = [&] {
            print_outcome(ctx,
                          recipes::recipe_virtual_filling(parse_matrix("--matrix", matrix_text), twelve),
                          save_path);
        };
    });

    // spec-chi
    long dim = 0;
    std::string chi_text;
    auto* spec_cmd = app.add_subcommand("spec-chi", "Realize an Euler characteristic in dimension m");
    spec_cmd->add_option("--dim", dim, "dimension m >= 1")->required();
    spec_cmd->add_option("--chi", chi_text, "integer n")->required();
    spec_cmd->callback([&] {
        action = [&] {
            Integer chi;
            if (chi.set_str(chi_text, 10) != 0) throw FlagError("--chi: '" + chi_text + "' is not an integer");
            spectrum::Realization r;
            try {
                r = spectrum::realize_spec_chi(dim, chi);
            } catch (const InvalidInput& e) {
                throw FlagError(std::string(dim < 1 ? "--dim: " : "--chi: ") + e.what());
            }
            Json factors = Json::array();
            for (const auto& f : r.factors) {
                factors.push_back({{"name", f.name()}, {"dimension", f.dimension},
                                   {"euler", integer_json(f.euler)}});
            }
            if (ctx.json()) {
                Json j;
                j["dimension"] = r.dimension;
                j["euler"] = integer_json(r.euler);
                j["factors"] = factors;
                j["derivation"] = r.derivation;
                ctx.emit(j);
            } else {
                std::string names;
                for (const auto& f : r.factors) names += (names.empty() ? "" : " x ") + f.name();
                out << "manifold: " << names << '\n' << "euler: " << r.derivation << '\n';
            }
        };
    });

    // invariants
    std::string file_path;
    auto* inv_cmd = app.add_subcommand("invariants", "Invariants of an assembly document");
    inv_cmd->add_option("--file", file_path, "assembly document")->required();
    inv_cmd->callback([&] {
        action = [&] {
            assembly::Assembly a;
            try {
                a = assembly::load(file_path);
            } catch (const InvalidInput& e) {
                throw FlagError(std::string("--file: ") + e.what());
            }
            print_report(ctx, a);
        };
    });

    // verify-paper
    bool verify_ok = true;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run acceptance criteria 1-11");
    verify_cmd->callback([&] {
        action = [&] {
            auto results = verification::verify_paper();
            verify_ok = verification::all_passed(results);
            if (ctx.json()) {
                Json arr = Json::array();
                for (const auto& r : results) {
                    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                                   {"expected", r.expected}, {"computed", r.computed}});
                }
                ctx.emit({{"passed", verify_ok}, {"criteria", arr}});
            } else {
                for (const auto& r : results) {
                    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name
                        << "  expected: " << r.expected << "  computed: " << r.computed << '\n';
                }
                out << (verify_ok ? "all criteria passed" : "some criteria FAILED") << '\n';
            }
        };
    });

    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format") {
            ++i;
            continue;
        }
        if (args[i].rfind("-", 0) == 0) continue;
        auto known = app.get_subcommands([&](CLI::App* sub) { return sub->check_name(args[i]); });
        if (known.empty()) {
            err << "error: unknown subcommand '" << args[i] << "'\n" << app.help();
            return 2;
        }
        break;
    }

    std::vector<std::string> argv_store{"asph"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        if (e.get_exit_code() != 0) {
            err << app.help();
            return 2;
        }
        return 0;
    }

    try {
        if (action) action();
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return verify_ok ? 0 : 1;
}

}  // namespace asph::cli
