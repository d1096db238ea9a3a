// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   1. Reedy/EZ axioms over simplex, box, boxc and simplex x simplex at
//      degree bound 3: unique factorization, sections exist and separate.
//   2. Unique (degeneracy, non-degenerate cell) decomposition of every
//      element of every corpus complex, by exhaustive search.
//   3. The skeletal attaching square is a pushout for the corpus and 20
//      randomized complexes per base, at every degree within bound.
//   4. The closed latching formula for representable bipresheaves, all
//      tuples of degree ≤ 2 over the simplex and minimal box bases.
//   5. The bipresheaf attaching square is a pushout for representable
//      bicomplexes of degree ≤ 2 and 20 randomized bicomplexes, at every n.
//   6. Diagonal structures on representables: join([m],[n]) = Δ^{m+n+1},
//      geometric([1]^m,[1]^n) = [1]^{m+n} (both degree ≤ 3 total), and the
//      categorical diagonal of an external product is the levelwise product.
//   7. The minimal-box interval square has homology ranks (1,1,1) — so its
//      collapse to the point is not a homology equivalence — while the
//      simplex interval square collapses by a homology equivalence.
//   8. Generated families of ≥10 levelwise homology equivalences of
//      bipresheaves: the induced map on each applicable diagonal (join and
//      categorical over the simplex base, geometric over both box bases)
//      is a homology equivalence.

#include <chrono>
#include <iostream>

#include "ezcat/ezcat.hpp"

using namespace ezcat;

namespace {

struct Criterion {
    std::string label;
    Report rep;
};

bool emit(const Criterion& c) {
    std::cout << (c.rep.all_pass() ? "[PASS] " : "[FAIL] ") << c.label << " ("
              << c.rep.checks.size() << " checks)\n";
    for (const CheckResult& r : c.rep.checks)
        if (!r.pass)
            std::cout << "       failed: " << r.name
                      << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
    return c.rep.all_pass();
}

void take(Report& from, Report& to, const std::vector<std::string>& needles) {
    for (const CheckResult& c : from.checks)
        for (const std::string& n : needles)
            if (c.name.find(n) != std::string::npos) {
                to.checks.push_back(c);
                break;
            }
}

}  // namespace

int main() {
    const std::uint64_t seed = 20260808ULL;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Criterion> cs(9);
    cs[1].label = "criterion 1: Reedy/EZ axiom sweep at degree bound 3";
    cs[2].label = "criterion 2: unique EZ decomposition on the corpus";
    cs[3].label = "criterion 3: skeletal squares are pushouts (20 randomized per base)";
    cs[4].label = "criterion 4: latching formula for representables, degrees <= 2";
    cs[5].label = "criterion 5: bipresheaf squares are pushouts (degree <= 2 + 20 randomized)";
    cs[6].label = "criterion 6: diagonal structures on representables and products";
    cs[7].label = "criterion 7: minimal-box interval square has homology (1,1,1)";
    cs[8].label = "criterion 8: diagonal lemma instances (>= 10 levelwise equivalences)";

    for (const char* kind : {"simplex", "box", "boxc", "product:simplex,simplex"})
        suite_reedy(make_category(kind, 3), seed, cs[1].rep);

    for (const char* kind : {"simplex", "box", "boxc"}) {
        Cat cat = make_category(kind, 3);
        suite_ez(cat, seed, cs[2].rep);
        suite_skeletal(cat, seed, cs[3].rep);
    }

    for (const char* kind : {"simplex", "box"})
        suite_latching(make_category(kind, 2), seed, cs[4].rep);

    for (const char* kind : {"simplex", "box", "boxc"})
        suite_ezsquare(make_category(kind, 2), seed, cs[5].rep);

    for (const char* kind : {"simplex", "box", "boxc"}) {
        Report diag;
        suite_diaglemma(make_category(kind, 2), seed, diag);
        take(diag, cs[6].rep,
             {"join-representables", "geometric-representables",
              "categorical-diagonal-vs-product"});
        take(diag, cs[7].rep, {"square-product-homology", "square-collapse"});
        take(diag, cs[8].rep, {"family-size", "levelwise/", "diag-join/",
                               "diag-categorical/", "diag-geometric/"});
    }

    bool ok = true;
    for (int i = 1; i <= 8; ++i) {
        cs[i].rep.sort_by_name();
        ok = emit(cs[i]) && ok;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILURES") << " ("
              << dt << "s)\n";
    return ok ? 0 : 1;
}
