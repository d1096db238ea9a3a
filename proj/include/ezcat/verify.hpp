// Verification suites: each sweeps one family of structural laws over an
// instance and its corpus and appends named pass/fail verdicts to a report.
// The suites are enumerated in one registry so "all" stays exhaustive.

#ifndef EZCAT_VERIFY_HPP
#define EZCAT_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <map>

#include "ezcat/corpus.hpp"
#include "ezcat/homology.hpp"

namespace ezcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
    void sort_by_name() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
};

namespace detail {

inline int brute_factorizations(const EzCategory& cat, MorId phi) {
    int found = 0;
    for (int cv = 0; cv < cat.object_count(); ++cv) {
        for (MorId mi : cat.hom(cat.dom(phi), ObjId{cv})) {
            if (!cat.is_minus(mi)) continue;
            for (MorId pl : cat.hom(ObjId{cv}, cat.cod(phi)))
                if (cat.is_plus(pl) && cat.compose(pl, mi) == phi) ++found;
        }
    }
    return found;
}

inline const SimplexCat* as_simplex(const Cat& c) {
    return dynamic_cast<const SimplexCat*>(c.get());
}
inline const BoxCat* as_box(const Cat& c) { return dynamic_cast<const BoxCat*>(c.get()); }

}  // namespace detail

/// Reedy axioms 1-3 plus the EZ section axiom, swept over every enumerated
/// morphism, with associativity over all composable triples.
inline void suite_reedy(const Cat& cat, std::uint64_t, Report& rep) {
    const std::string tag = "reedy/" + cat->kind() + "/";
    bool unique = true, monotone = true, units = true, structural = true;
    for (int mv = 0; mv < cat->morphism_count(); ++mv) {
        MorId m{mv};
        if (detail::brute_factorizations(*cat, m) != 1) unique = false;
        auto [mi, pl] = cat->reedy_factorize(m);
        if (!cat->is_minus(mi) || !cat->is_plus(pl) || cat->compose(pl, mi) != m)
            structural = false;
        if (!cat->is_identity(m)) {
            int dd = cat->degree(cat->dom(m)), dc = cat->degree(cat->cod(m));
            if (cat->is_minus(m) && dd <= dc) monotone = false;
            if (cat->is_plus(m) && dd >= dc) monotone = false;
        }
        if (cat->compose(m, cat->identity(cat->dom(m))) != m ||
            cat->compose(cat->identity(cat->cod(m)), m) != m)
            units = false;
    }
    rep.add(tag + "factorization-unique", unique,
            std::to_string(cat->morphism_count()) + " morphisms");
    rep.add(tag + "factorization-structural", structural);
    rep.add(tag + "degree-monotone", monotone);
    rep.add(tag + "identity-units", units);
    long long triples = 0;
    bool assoc = [&] {
        for (int fv = 0; fv < cat->morphism_count(); ++fv) {
            MorId f{fv};
            for (int cv = 0; cv < cat->object_count(); ++cv)
                for (MorId g : cat->hom(cat->cod(f), ObjId{cv})) {
                    MorId gf = cat->compose(g, f);
                    for (int dv = 0; dv < cat->object_count(); ++dv)
                        for (MorId h : cat->hom(ObjId{cv}, ObjId{dv})) {
                            ++triples;
                            if (cat->compose(h, gf) != cat->compose(cat->compose(h, g), f))
                                return false;
                        }
                }
        }
        return true;
    }();
    rep.add(tag + "associative", assoc, std::to_string(triples) + " triples");
    bool sections_ok = true, separate = true;
    for (int av = 0; av < cat->object_count(); ++av) {
        ObjId a{av};
        std::vector<MorId> minus = cat->minus_out(a);
        minus.push_back(cat->identity(a));
        std::vector<std::vector<MorId>> secs;
        for (MorId s : minus) {
            secs.push_back(cat->sections(s));
            if (secs.back().empty()) sections_ok = false;
        }
        for (std::size_t i = 0; i < minus.size(); ++i)
            for (std::size_t j = i + 1; j < minus.size(); ++j)
                if (secs[i] == secs[j]) separate = false;
    }
    rep.add(tag + "sections-exist", sections_ok);
    rep.add(tag + "sections-separate", separate);
}

/// The EZ lemma on the corpus: rebuilding every complex from its levelwise
/// element sets must find exactly one normal form per element (asserted inside
/// cellularize) and reproduce the complex up to isomorphism.
inline void suite_ez(const Cat& cat, std::uint64_t, Report& rep) {
    const std::string tag = "ez/" + cat->kind() + "/";
    for (const NamedComplex& nc : builtin_corpus(cat)) {
        long long elements = 0;
        for (int ov = 0; ov < cat->object_count(); ++ov)
            elements += static_cast<long long>(nc.complex.elements_at(ObjId{ov}).size());
        bool pass = false;
        std::string detail = std::to_string(elements) + " elements";
        try {
            Cellularized rt = cellularize(ComplexLevels(nc.complex).system());
            pass = is_isomorphic(nc.complex, rt.complex).has_value();
            if (!pass) detail += "; rebuilt complex differs";
        } catch (const Error& e) {
            detail += std::string("; ") + e.what();
        }
        rep.add(tag + nc.name, pass, detail);
    }
    // functoriality property on a corpus complex: act over all composable pairs
    for (const NamedComplex& nc : builtin_corpus(cat)) {
        if (nc.complex.cell_count() == 0 || nc.complex.cell_count() > 12) continue;
        bool pass = true;
        try {
            nc.complex.validate(CellComplex::Check::full);
        } catch (const Error&) {
            pass = false;
        }
        rep.add(tag + nc.name + "/functorial", pass);
    }
}

/// Skeletal induction: the attaching square of every corpus and randomized
/// complex is a pushout at every degree, and the skeleta filter the complex.
inline void suite_skeletal(const Cat& cat, std::uint64_t seed, Report& rep) {
    const std::string tag = "skeletal/" + cat->kind() + "/";
    std::vector<NamedComplex> pool = builtin_corpus(cat);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i)
        pool.push_back({"random-" + std::to_string(i),
                        random_complex(cat, rng, std::min(2, cat->bound()), 3)});
    for (const NamedComplex& nc : pool) {
        auto [filt, stable] = filtration_check(nc.complex);
        bool pass = filt;
        std::string detail = "stabilizes at " + std::to_string(stable);
        for (int n = 0; pass && n <= cat->bound(); ++n) {
            try {
                if (!is_pushout(skeletal_square(nc.complex, n))) {
                    pass = false;
                    detail = "square fails at n=" + std::to_string(n);
                }
            } catch (const Error& e) {
                pass = false;
                detail = e.what();
            }
            CellComplex sk = skeleton(nc.complex, n).complex;
            if (!(skeleton(sk, n).complex == sk)) pass = false;
        }
        rep.add(tag + nc.name, pass, detail);
    }
}

/// The closed latching formula for representable bipresheaves over the base,
/// for every tuple of degrees ≤ 2.
inline void suite_latching(const Cat& base, std::uint64_t, Report& rep) {
    const std::string tag = "latching/" + base->kind() + "/";
    Cat prod = square_category(base);
    int cap = std::min(2, base->bound());
    long long tuples = 0;
    bool pass = true;
    std::string detail;
    for (int av = 0; av < base->object_count() && pass; ++av)
        for (int a2v = 0; a2v < base->object_count() && pass; ++a2v)
            for (int bv = 0; bv < base->object_count() && pass; ++bv)
                for (int cv = 0; cv < base->object_count() && pass; ++cv) {
                    ObjId a{av}, a2{a2v}, b{bv}, c{cv};
                    if (base->degree(a) > cap || base->degree(a2) > cap ||
                        base->degree(b) > cap || base->degree(c) > cap)
                        continue;
                    ++tuples;
                    if (!latching_formula_check(prod, a, a2, b, c)) {
                        pass = false;
                        detail = "fails at (" + base->object_token(a) + "," +
                                 base->object_token(a2) + "," + base->object_token(b) + "," +
                                 base->object_token(c) + ")";
                    }
                }
    if (pass) detail = std::to_string(tuples) + " tuples";
    rep.add(tag + "formula-sweep", pass, detail);
    const ProductCat& p = require_product(prod);
    bool empty0 = true;
    for (ObjId a0 : base->objects_of_degree(0)) {
        Latching l = latching_object(representable(prod, p.pair_object(a0, a0)), a0);
        if (l.cz.complex.cell_count() != 0) empty0 = false;
    }
    rep.add(tag + "empty-at-degree-0", empty0);
}

/// The bipresheaf attaching square: a pushout for representable bicomplexes of
/// degree ≤ 2 and for randomized bicomplexes, at every n.
inline void suite_ezsquare(const Cat& base, std::uint64_t seed, Report& rep) {
    const std::string tag = "ezsquare/" + base->kind() + "/";
    Cat prod = square_category(base);
    const ProductCat& p = require_product(prod);
    auto check_all_n = [&](const CellComplex& x, const std::string& name) {
        bool pass = true;
        std::string detail;
        for (int n = -1; n <= base->bound() && pass; ++n) {
            try {
                if (!ez_square(x, n).verdict) {
                    pass = false;
                    detail = "not a pushout at n=" + std::to_string(n);
                }
            } catch (const Error& e) {
                pass = false;
                detail = e.what();
            }
        }
        rep.add(tag + name, pass, detail);
    };
    for (int av = 0; av < base->object_count(); ++av)
        for (int bv = 0; bv < base->object_count(); ++bv) {
            ObjId a{av}, b{bv};
            if (base->degree(a) + base->degree(b) > 2) continue;
            check_all_n(representable(prod, p.pair_object(a, b)),
                        "rep-(" + base->object_token(a) + "," + base->object_token(b) + ")");
        }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i)
        check_all_n(random_complex(prod, rng, 2, 2, 24), "random-" + std::to_string(i));
}

/// Diagonal structures: representable identities of the join and geometric
/// product, agreement of the categorical diagonal with the levelwise product,
/// the quantitative minimal-box fact, and the generated diagonal-lemma
/// instances under every structure applicable to the base.
inline void suite_diaglemma(const Cat& base, std::uint64_t seed, Report& rep) {
    const std::string tag = "diaglemma/" + base->kind() + "/";
    const SimplexCat* sx = detail::as_simplex(base);
    const BoxCat* bx = detail::as_box(base);
    if (!sx && !bx) throw InputError("diaglemma: suite runs over simplex or box bases");
    Cat prod = square_category(base);

    // representable identities of the binary tensors (degree ≤ 3 total)
    if (sx) {
        auto sbase = std::dynamic_pointer_cast<const SimplexCat>(base);
        auto sout = std::make_shared<SimplexCat>(2 * base->bound() + 1);
        Promonoidal join = Promonoidal::join_on(sbase, sout);
        bool pass = true;
        int count = 0;
        for (int m = 0; m <= base->bound(); ++m)
            for (int n = 0; n + m + 1 <= 3 && n <= base->bound(); ++n) {
                ++count;
                CellComplex t = tensor(representable(base, ObjId{m}),
                                       representable(base, ObjId{n}), join);
                if (!is_isomorphic(t, representable(Cat(sout), ObjId{m + n + 1})))
                    pass = false;
            }
        rep.add(tag + "join-representables", pass, std::to_string(count) + " pairs");
    }
    if (bx) {
        auto bbase = std::dynamic_pointer_cast<const BoxCat>(base);
        auto bout = std::make_shared<BoxCat>(2 * base->bound(), bbase->has_connections());
        Promonoidal geom = Promonoidal::geometric_on(bbase, bout);
        bool pass = true;
        int count = 0;
        for (int m = 0; m <= base->bound(); ++m)
            for (int n = 0; n + m <= 3 && n <= base->bound(); ++n) {
                ++count;
                CellComplex t = tensor(representable(base, ObjId{m}),
                                       representable(base, ObjId{n}), geom);
                if (!is_isomorphic(t, representable(Cat(bout), ObjId{m + n})))
                    pass = false;
            }
        rep.add(tag + "geometric-representables", pass, std::to_string(count) + " pairs");
    }
    // categorical diagonal of external products vs levelwise products
    {
        bool pass = true;
        int count = 0;
        for (const NamedComplex& nk : builtin_corpus(base)) {
            if (nk.complex.cell_count() == 0 || nk.complex.cell_count() > 9) continue;
            for (const NamedComplex& nl : builtin_corpus(base)) {
                if (nl.complex.cell_count() == 0 || nl.complex.cell_count() > 9) continue;
                ++count;
                DiagCat d = diagonal_categorical(
                    external_product(nk.complex, nl.complex, prod));
                CatProduct pr = categorical_product(nk.complex, nl.complex);
                if (!is_isomorphic(d.complex(), pr.cz.complex)) pass = false;
            }
        }
        rep.add(tag + "categorical-diagonal-vs-product", pass,
                std::to_string(count) + " pairs");
    }
    // the quantitative minimal-box fact and its simplex counterpart
    if (bx && !bx->has_connections() && base->bound() >= 2) {
        CellComplex sq = categorical_product(representable(base, ObjId{1}),
                                             representable(base, ObjId{1}))
                             .cz.complex;
        HomologySummary h = homology(sq);
        HomologySummary expect{{1, {}}, {1, {}}, {1, {}}};
        rep.add(tag + "square-product-homology", h == expect,
                "H = (1,1,1) expected, got " + to_string(h));
        bool not_equiv =
            !is_homology_equivalence(terminal_map(sq, representable(base, ObjId{0})));
        rep.add(tag + "square-collapse-not-equivalence", not_equiv);
    }
    if (sx && base->bound() >= 2) {
        CellComplex sq = categorical_product(representable(base, ObjId{1}),
                                             representable(base, ObjId{1}))
                             .cz.complex;
        bool equiv = is_homology_equivalence(terminal_map(sq, representable(base, ObjId{0})));
        rep.add(tag + "square-collapse-is-equivalence", equiv);
    }

    // generated diagonal-lemma instances
    std::mt19937_64 rng(seed);
    std::vector<DiagLemmaInstance> family = diag_lemma_family(base, 10, rng);
    rep.add(tag + "family-size", static_cast<int>(family.size()) >= 10,
            std::to_string(family.size()) + " instances");
    std::optional<Promonoidal> day_structure;
    if (sx)
        day_structure = Promonoidal::join_on(std::dynamic_pointer_cast<const SimplexCat>(base),
                                             std::make_shared<SimplexCat>(2 * base->bound() + 1));
    else
        day_structure = Promonoidal::geometric_on(
            std::dynamic_pointer_cast<const BoxCat>(base),
            std::make_shared<BoxCat>(2 * base->bound(), bx->has_connections()));
    const std::string day_name = sx ? "diag-join/" : "diag-geometric/";
    for (const DiagLemmaInstance& inst : family) {
        bool levelwise = true;
        std::string detail;
        try {
            for (int av = 0; av < base->object_count() && levelwise; ++av) {
                Curried cx = curry_level(inst.x, ObjId{av});
                Curried cy = curry_level(inst.y, ObjId{av});
                if (!is_homology_equivalence(curry_map(inst.f, cx, cy))) {
                    levelwise = false;
                    detail = "not levelwise at " + base->object_token(ObjId{av});
                }
            }
        } catch (const Error& e) {
            levelwise = false;
            detail = e.what();
        }
        rep.add(tag + "levelwise/" + inst.name, levelwise, detail);
        if (!levelwise) continue;
        Day dx = day_diagonal(inst.x, *day_structure);
        Day dy = day_diagonal(inst.y, *day_structure);
        rep.add(tag + day_name + inst.name,
                is_homology_equivalence(day_map(inst.f, dx, dy)));
        if (sx) {
            DiagCat cx = diagonal_categorical(inst.x);
            DiagCat cy = diagonal_categorical(inst.y);
            rep.add(tag + "diag-categorical/" + inst.name,
                    is_homology_equivalence(diagonal_categorical_map(inst.f, cx, cy)));
        }
    }
}

// ---- registry ---------------------------------------------------------------

using SuiteFn = void (*)(const Cat&, std::uint64_t, Report&);

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"reedy", &suite_reedy},         {"ez", &suite_ez},
        {"skeletal", &suite_skeletal},   {"latching", &suite_latching},
        {"ezsquare", &suite_ezsquare},   {"diaglemma", &suite_diaglemma},
    };
    return reg;
}

inline void run_suite(const std::string& name, const Cat& cat, std::uint64_t seed, Report& rep) {
    if (name == "all") {
        for (const auto& [n, fn] : suite_registry()) {
            try {
                fn(cat, seed, rep);
            } catch (const InputError& e) {
                // suites that need an atomic base report as skipped over others
                rep.add(n + "/" + cat->kind() + "/skipped", true, e.what());
            }
        }
        return;
    }
    auto it = suite_registry().find(name);
    if (it == suite_registry().end()) throw InputError("unknown suite '" + name + "'");
    it->second(cat, seed, rep);
}

}  // namespace ezcat

#endif  // EZCAT_VERIFY_HPP
