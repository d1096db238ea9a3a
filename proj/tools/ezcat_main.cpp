// ezcat command line: load complexes and maps in the text format, run the
// constructions, and run the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 input error, 3 degree-bound error, 4 unsupported base.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ezcat/ezcat.hpp"

namespace fs = std::filesystem;
using namespace ezcat;

namespace {

CellComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_complex(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
}

std::string quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s)
        if (c != '"') q += c;
    return q + "\"";
}

int print_report(Report& rep, const std::string& format, double seconds) {
    rep.sort_by_name();
    if (format == "records") {
        for (const CheckResult& c : rep.checks)
            std::cout << "check name=" << c.name << " status=" << (c.pass ? "pass" : "fail")
                      << " detail=" << quote(c.detail) << "\n";
        std::cout << "summary checks=" << rep.checks.size() << " failures=" << rep.failures()
                  << "\n";
    } else {
        for (const CheckResult& c : rep.checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        std::cout << rep.checks.size() << " checks, " << rep.failures() << " failures, "
                  << seconds << "s\n";
    }
    return rep.all_pass() ? 0 : 1;
}

// The left factor of a bicomplex's instance, with the instance itself.
const ProductCat& product_of(const CellComplex& x) {
    const ProductCat* p = x.category()->as_product();
    if (!p) throw InputError("expected a complex over a product instance, got " +
                             x.category()->kind());
    if (!p->left()->same_as(*p->right()))
        throw InputError("expected a square product instance A x A");
    return *p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ezcat: finite presheaves on Eilenberg-Zilber categories"};
    app.require_subcommand(1);

    std::string in_path, out_path, category = "simplex", format = "text", mode = "cat",
                suite = "all", object_token;
    int bound = -1, skel_n = 0, diag_bound = -1;
    std::uint64_t seed = 20260808ULL;

    auto* c_desc = app.add_subcommand("describe", "print the cell census per degree");
    c_desc->add_option("input", in_path)->required();
    c_desc->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

    auto* c_skel = app.add_subcommand("skeleton", "write the n-skeleton");
    c_skel->add_option("--n", skel_n)->required();
    c_skel->add_option("input", in_path)->required();
    c_skel->add_option("--out", out_path);

    auto* c_bd = app.add_subcommand("boundary", "write the boundary of a representable");
    c_bd->add_option("--category", category)->required();
    c_bd->add_option("--degree-bound", bound)->required();
    c_bd->add_option("--object", object_token)->required();
    c_bd->add_option("--out", out_path);

    auto* c_hom = app.add_subcommand("homology", "print integral homology");
    c_hom->add_option("input", in_path)->required();
    c_hom->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

    auto* c_diag = app.add_subcommand("diag", "write a diagonal of a bicomplex");
    c_diag->add_option("--mode", mode)->check(CLI::IsMember({"cat", "join", "geom"}));
    c_diag->add_option("input", in_path)->required();
    c_diag->add_option("--out", out_path);
    c_diag->add_option("--degree-bound", diag_bound,
                       "output instance bound (default: as required)");

    auto* c_latch = app.add_subcommand("latch", "write a latching object");
    c_latch->add_option("--object", object_token)->required();
    c_latch->add_option("input", in_path)->required();
    c_latch->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    {
        std::vector<std::string> names{"all"};
        for (const auto& [n, fn] : suite_registry()) names.push_back(n);
        c_verify->add_option("--suite", suite)->check(CLI::IsMember(names));
    }
    c_verify->add_option("--category", category)->required();
    c_verify->add_option("--degree-bound", bound)->required();
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

    auto* c_ex = app.add_subcommand("examples", "materialize the built-in corpus");
    c_ex->add_option("--out", out_path)->required();
    c_ex->add_option("--degree-bound", bound);

    try {
        app.parse(argc, argv);

        if (*c_desc) {
            CellComplex k = load_complex(in_path);
            if (format == "records") {
                std::vector<int> cs = k.census();
                for (std::size_t n = 0; n < cs.size(); ++n)
                    std::cout << "record degree=" << n << " cells=" << cs[n] << "\n";
                std::cout << "record total=" << k.cell_count() << "\n";
            } else {
                std::cout << "category " << k.category()->kind() << " @ "
                          << k.category()->bound() << "\n";
                std::vector<int> cs = k.census();
                for (std::size_t n = 0; n < cs.size(); ++n)
                    std::cout << "degree " << n << ": " << cs[n] << " cells\n";
                std::cout << "total: " << k.cell_count() << " cells\n";
            }
            return 0;
        }
        if (*c_skel) {
            CellComplex k = load_complex(in_path);
            emit(write_complex(skeleton(k, skel_n).complex), out_path);
            return 0;
        }
        if (*c_bd) {
            Cat cat = make_category(category, bound);
            auto obj = cat->parse_object(object_token);
            if (!obj) throw InputError("unknown object '" + object_token + "'");
            emit(write_complex(boundary(cat, *obj)), out_path);
            return 0;
        }
        if (*c_hom) {
            CellComplex k = load_complex(in_path);
            HomologySummary h = homology(k);
            if (format == "records") {
                for (std::size_t n = 0; n < h.size(); ++n) {
                    std::cout << "record degree=" << n << " rank=" << h[n].rank << " torsion=";
                    for (std::size_t i = 0; i < h[n].torsion.size(); ++i)
                        std::cout << (i ? "," : "") << h[n].torsion[i].str();
                    std::cout << "\n";
                }
            } else {
                std::cout << to_string(h);
            }
            return 0;
        }
        if (*c_diag) {
            CellComplex x = load_complex(in_path);
            const ProductCat& p = product_of(x);
            if (mode == "cat") {
                emit(write_complex(diagonal_categorical(x).complex()), out_path);
                return 0;
            }
            const Cat& base = p.left();
            int need = mode == "join" ? 2 * base->bound() + 1 : 2 * base->bound();
            int ob = diag_bound >= 0 ? diag_bound : need;
            if (mode == "join") {
                auto sb = std::dynamic_pointer_cast<const SimplexCat>(base);
                if (!sb) throw InputError("join diagonal needs a simplex base");
                Promonoidal pm =
                    Promonoidal::join_on(sb, std::make_shared<SimplexCat>(ob));
                emit(write_complex(day_diagonal(x, pm).complex()), out_path);
            } else {
                auto bb = std::dynamic_pointer_cast<const BoxCat>(base);
                if (!bb) throw InputError("geometric diagonal needs a box base");
                Promonoidal pm = Promonoidal::geometric_on(
                    bb, std::make_shared<BoxCat>(ob, bb->has_connections()));
                emit(write_complex(day_diagonal(x, pm).complex()), out_path);
            }
            return 0;
        }
        if (*c_latch) {
            CellComplex x = load_complex(in_path);
            const ProductCat& p = product_of(x);
            const Cat& base = p.left();
            auto obj = base->parse_object(object_token);
            if (!obj) throw InputError("unknown base object '" + object_token + "'");
            Latching lat = latching_object(x, *obj);
            emit(write_complex(lat.cz.complex), out_path);
            // the formula check applies when the input is a representable
            bool all_ok = true;
            for (int i = 0; i < x.cell_count(); ++i) {
                ObjId top = x.cell(i).shape;
                if (x.cell_count() ==
                        representable(x.category(), top).cell_count() &&
                    is_isomorphic(x, representable(x.category(), top))) {
                    auto [a, a2] = p.factors(top);
                    for (int cv = 0; cv < base->object_count(); ++cv) {
                        if (base->degree(ObjId{cv}) > std::min(2, base->bound())) continue;
                        bool ok = latching_formula_check(x.category(), a, a2, *obj, ObjId{cv});
                        std::cerr << (ok ? "[PASS] " : "[FAIL] ") << "latching-formula at c="
                                  << base->object_token(ObjId{cv}) << "\n";
                        all_ok = all_ok && ok;
                    }
                    break;
                }
            }
            return all_ok ? 0 : 1;
        }
        if (*c_verify) {
            Cat cat = make_category(category, bound);
            Report rep;
            auto t0 = std::chrono::steady_clock::now();
            run_suite(suite, cat, seed, rep);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
            return print_report(rep, format, dt);
        }
        if (*c_ex) {
            int b = bound >= 0 ? bound : 3;
            fs::create_directories(out_path);
            std::vector<std::string> written;
            for (const char* kc : {"simplex", "box", "boxc"}) {
                std::string kind = kc;
                Cat cat = make_category(kind, b);
                for (const NamedComplex& nc : builtin_corpus(cat)) {
                    std::string name = kind + "-" + nc.name;
                    if (kind == "box" && nc.name == "square-product")
                        name = "box-min-square-product";
                    for (char& c : name)
                        if (c == '[' || c == ']' || c == '^' || c == '(' || c == ')' ||
                            c == ',')
                            c = '_';
                    std::ofstream out(fs::path(out_path) / (name + ".ez"));
                    write_complex(out, nc.complex);
                    written.push_back(name + ".ez");
                }
            }
            // a bicomplex for the diag/latch verbs; base bound 2 so that the
            // categorical diagonal (the interval square, cells up to degree
            // two) is housed exactly
            Cat base = make_simplex(2);
            Cat prod = square_category(base);
            const ProductCat& p = require_product(prod);
            std::ofstream out(fs::path(out_path) / "simplex-birep-1-1.ez");
            write_complex(out, representable(prod, p.pair_object(ObjId{1}, ObjId{1})));
            written.push_back("simplex-birep-1-1.ez");
            for (const std::string& w : written) std::cout << w << "\n";
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedBaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
