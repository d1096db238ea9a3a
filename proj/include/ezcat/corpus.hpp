// The built-in example corpus, seeded random complexes (by attaching cells
// along their boundaries and gluing vertices), random natural maps, and the
// generated family of levelwise homology equivalences of bipresheaves used by
// the diagonal-lemma verification.

#ifndef EZCAT_CORPUS_HPP
#define EZCAT_CORPUS_HPP

#include <random>

#include "ezcat/bipresheaf.hpp"
#include "ezcat/diagonal.hpp"

namespace ezcat {

struct NamedComplex {
    std::string name;
    CellComplex complex;
};

/// A natural map built cell by cell in degree order; images are filtered by
/// face compatibility, so the result is natural by construction.
inline std::optional<ComplexMap> random_map(const CellComplex& s, const CellComplex& t,
                                            std::mt19937_64& rng) {
    const Cat& cat = s.category();
    std::vector<int> order(s.cell_count());
    for (int i = 0; i < s.cell_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cat->degree(s.cell(a).shape) < cat->degree(s.cell(b).shape);
    });
    std::vector<Element> img(s.cell_count());
    std::function<bool(std::size_t)> go = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        std::vector<Element> cands = t.elements_at(s.cell(x).shape);
        std::shuffle(cands.begin(), cands.end(), rng);
        const auto& faces = cat->faces_into(s.cell(x).shape);
        for (const Element& e : cands) {
            bool ok = true;
            for (std::size_t sl = 0; sl < faces.size() && ok; ++sl) {
                Element sf = s.face_action(x, static_cast<int>(sl));
                Element want = t.act(img[sf.cell], sf.sigma);
                if (t.act(e, faces[sl]) != want) ok = false;
            }
            if (!ok) continue;
            img[x] = e;
            if (go(pos + 1)) return true;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return ComplexMap(s, t, std::move(img), false);
}

/// The map from the one-cell representable of a degree-0 object picking out a
/// given degree-0 element.
inline ComplexMap point_map(const CellComplex& pt, const CellComplex& k, const Element& at) {
    return ComplexMap(pt, k, {at}, false);
}

/// A random complex: start from a representable, then attach representables
/// along boundary maps and glue pairs of vertices.
inline CellComplex random_complex(const Cat& cat, std::mt19937_64& rng, int max_deg, int ops,
                                  int max_cells = 40) {
    std::vector<ObjId> objs;  // degree between 1 and max_deg
    std::vector<ObjId> points;
    for (int ov = 0; ov < cat->object_count(); ++ov) {
        int d = cat->degree(ObjId{ov});
        if (d >= 1 && d <= max_deg) objs.push_back(ObjId{ov});
        if (d == 0) points.push_back(ObjId{ov});
    }
    if (objs.empty()) return representable(cat, points[rng() % points.size()]);
    CellComplex k = representable(cat, objs[rng() % objs.size()]);
    for (int step = 0; step < ops && k.cell_count() < max_cells; ++step) {
        if (rng() % 3 != 0) {  // attach a representable along its boundary
            ObjId a = objs[rng() % objs.size()];
            SkeletonResult bd = skeleton(representable(cat, a), cat->degree(a) - 1);
            auto m = random_map(bd.complex, k, rng);
            if (!m) continue;
            k = pushout(bd.inclusion, *m).complex;
        } else {  // glue two degree-0 elements of a common shape
            ObjId p = points[rng() % points.size()];
            auto elems = k.elements_at(p);
            if (elems.size() < 2) continue;
            int i = static_cast<int>(rng() % elems.size());
            int j = static_cast<int>(rng() % elems.size());
            if (i == j) continue;
            CellComplex pt = representable(cat, p);
            CoproductResult two = coproduct(cat, {pt, pt});
            ComplexMap into_k =
                coproduct_map(two, {point_map(pt, k, elems[i]), point_map(pt, k, elems[j])});
            ComplexMap fold = coproduct_map(two, {ComplexMap::identity(pt),
                                                  ComplexMap::identity(pt)});
            k = pushout(into_k, fold).complex;
        }
    }
    return k;
}

/// Deterministic corpus per instance: representables, boundaries, a glued
/// chain, and for the simplex/box bases the categorical interval square.
inline std::vector<NamedComplex> builtin_corpus(const Cat& cat) {
    std::vector<NamedComplex> out;
    int cap = std::min(cat->bound(), 2);
    for (int ov = 0; ov < cat->object_count(); ++ov) {
        ObjId a{ov};
        if (cat->degree(a) > cap) continue;
        out.push_back({"rep-" + cat->object_token(a), representable(cat, a)});
        if (cat->degree(a) >= 1)
            out.push_back({"boundary-" + cat->object_token(a), boundary(cat, a)});
    }
    // glue two copies of a degree-1 representable end to end
    for (int ov = 0; ov < cat->object_count(); ++ov) {
        ObjId b{ov};
        if (cat->degree(b) != 1) continue;
        CellComplex edge = representable(cat, b);
        std::vector<std::pair<ObjId, Element>> verts;
        for (int pv = 0; pv < cat->object_count(); ++pv)
            if (cat->degree(ObjId{pv}) == 0)
                for (const Element& e : edge.elements_at(ObjId{pv})) verts.push_back({ObjId{pv}, e});
        if (verts.size() < 2) continue;
        CellComplex pt = representable(cat, verts.front().first);
        if (verts.front().first != verts.back().first) continue;
        ComplexMap to_b = point_map(pt, edge, verts.back().second);
        ComplexMap to_c = point_map(pt, edge, verts.front().second);
        out.push_back({"chain-" + cat->object_token(b), pushout(to_b, to_c).complex});
        break;
    }
    if (dynamic_cast<const SimplexCat*>(cat.get()) || dynamic_cast<const BoxCat*>(cat.get())) {
        if (cat->bound() >= 2) {
            CellComplex edge = representable(cat, ObjId{1});
            out.push_back({"square-product", categorical_product(edge, edge).cz.complex});
        }
    }
    return out;
}

// ---- generated diagonal-lemma instances -----------------------------------

struct DiagLemmaInstance {
    std::string name;
    CellComplex x, y;  // over a sum-bound product of the base with itself
    ComplexMap f;
};

/// Levelwise homology equivalences built from external products of
/// representable collapses/inclusions with identities, plus pushout-glued
/// combinations; the verification suite re-checks the levelwise property.
/// Instances are kept inside the truncation-exact range: the product degree
/// of every cell stays within the base bound, so every diagonal of an
/// instance is a genuinely finite complex within its instance.
inline std::vector<DiagLemmaInstance> diag_lemma_family(const Cat& base, int count,
                                                        std::mt19937_64& rng) {
    Cat prod = square_category(base);
    // contractible-to-contractible arrows g: ⟦a⟧ → ⟦b⟧ along minus or plus base arrows
    struct Piece {
        Representable dom, cod;
        MorId arrow;
        std::string name;
    };
    const int right_cap = base->bound() - 1;
    std::vector<Piece> pieces;
    for (int av = 0; av < base->object_count(); ++av) {
        ObjId a{av};
        if (base->degree(a) > 1) continue;
        for (MorId s : base->minus_out(a))
            pieces.push_back({representable_with_arrows(base, a),
                              representable_with_arrows(base, base->cod(s)), s,
                              "collapse" + base->payload_token(s)});
        for (MorId fc : base->faces_into(a))
            pieces.push_back({representable_with_arrows(base, base->dom(fc)),
                              representable_with_arrows(base, a), fc,
                              "face" + base->payload_token(fc)});
    }
    std::vector<CellComplex> rights;
    for (const NamedComplex& nc : builtin_corpus(base))
        if (nc.complex.cell_count() > 0 && nc.complex.max_degree() <= right_cap)
            rights.push_back(nc.complex);
    std::vector<DiagLemmaInstance> out;
    std::size_t pi = 0, ri = 0;
    while (static_cast<int>(out.size()) < count && !pieces.empty() && !rights.empty()) {
        const Piece& pc = pieces[pi % pieces.size()];
        const CellComplex& k = rights[ri % rights.size()];
        ++pi;
        ++ri;
        ComplexMap g = representable_map(pc.dom, pc.cod, pc.arrow);
        ExternalProduct xs = external_product_indexed(pc.dom.complex, k, prod);
        ExternalProduct ys = external_product_indexed(pc.cod.complex, k, prod);
        ComplexMap f = external_product_map(g, ComplexMap::identity(k), xs, ys);
        out.push_back({pc.name + "-x-" + std::to_string(ri), xs.complex, ys.complex, f});
        if (out.size() % 4 == 0) {
            // a glued variant: two copies of the same instance joined along a
            // common vertex slice ⟦a⟧ ⊠ pt
            std::vector<ObjId> pts;
            for (int pv = 0; pv < base->object_count(); ++pv)
                if (base->degree(ObjId{pv}) == 0) pts.push_back(ObjId{pv});
            ObjId p0 = pts[rng() % pts.size()];
            CellComplex ptc = representable(base, p0);
            auto kelems = k.elements_at(p0);
            if (kelems.size() >= 2) {
                ExternalProduct ss = external_product_indexed(pc.dom.complex, ptc, prod);
                ExternalProduct ts = external_product_indexed(pc.cod.complex, ptc, prod);
                ComplexMap s1 = external_product_map(
                    ComplexMap::identity(pc.dom.complex),
                    point_map(ptc, k, kelems.front()), ss, xs);
                ComplexMap s2 = external_product_map(
                    ComplexMap::identity(pc.dom.complex),
                    point_map(ptc, k, kelems.back()), ss, xs);
                PushoutResult pox = pushout(s1, s2);
                // glue the target the same way and mediate
                ComplexMap w1 = external_product_map(
                    ComplexMap::identity(pc.cod.complex),
                    point_map(ptc, k, kelems.front()), ts, ys);
                ComplexMap w2 = external_product_map(
                    ComplexMap::identity(pc.cod.complex),
                    point_map(ptc, k, kelems.back()), ts, ys);
                PushoutResult poy = pushout(w1, w2);
                ComplexMap fg = pushout_mediate(pox, compose(poy.from_b, f),
                                                compose(poy.from_c, f));
                out.push_back({pc.name + "-glued-" + std::to_string(ri), pox.complex,
                               poy.complex, fg});
            }
        }
    }
    out.resize(std::min<std::size_t>(out.size(), count));
    return out;
}

}  // namespace ezcat

#endif  // EZCAT_CORPUS_HPP
