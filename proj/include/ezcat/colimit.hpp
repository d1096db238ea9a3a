// Finite colimits of presheaves: levelwise set-level systems, extraction of
// cellular presentations from them (the computational Eilenberg-Zilber
// lemma), coproducts, pushouts by union-find, mediating maps and the pushout
// recognizer, and the skeletal-induction square.

#ifndef EZCAT_COLIMIT_HPP
#define EZCAT_COLIMIT_HPP

#include <functional>
#include <memory>
#include <numeric>

#include "ezcat/presheaf.hpp"

namespace ezcat {

/// A presheaf given levelwise: a finite token set per object and the action
/// act(m: c → b, token at b) → token at c of every enumerated morphism.
struct LevelSystem {
    Cat cat;
    std::vector<int> size;  // per ObjId
    std::function<int(MorId, int)> act;
};

/// A cellular presentation extracted from a level system, remembering how
/// tokens correspond to elements of the new complex.
struct Cellularized {
    CellComplex complex;
    std::vector<std::vector<Element>> token_nf;    // [object][token] -> element
    std::vector<std::pair<ObjId, int>> cell_token; // cell -> (object, token)
};

/// Levelwise view of an existing complex (tokens = canonical element order).
struct ComplexLevels {
    CellComplex complex;
    std::vector<std::vector<Element>> elems;                        // per object
    std::vector<std::unordered_map<Element, int, ElementHash>> index;

    explicit ComplexLevels(CellComplex k) : complex(std::move(k)) {
        const Cat& cat = complex.category();
        elems.resize(cat->object_count());
        index.resize(cat->object_count());
        for (int ov = 0; ov < cat->object_count(); ++ov) {
            elems[ov] = complex.elements_at(ObjId{ov});
            for (int i = 0; i < static_cast<int>(elems[ov].size()); ++i)
                index[ov][elems[ov][i]] = i;
        }
    }

    LevelSystem system() const {
        LevelSystem sys;
        sys.cat = complex.category();
        for (const auto& e : elems) sys.size.push_back(static_cast<int>(e.size()));
        sys.act = [this](MorId m, int tok) {
            const Cat& cat = complex.category();
            Element e = complex.act(elems[cat->cod(m).v][tok], m);
            return index[cat->dom(m).v].at(e);
        };
        return sys;
    }
};

/// Extract the cellular presentation of a level system: per level, the tokens
/// not hit by any non-identity degeneracy become cells, and every token is
/// assigned its unique (sigma, cell) normal form by exhaustive search — the
/// count being exactly one is the Eilenberg-Zilber lemma, and is asserted.
inline Cellularized cellularize(const LevelSystem& sys, const std::string& name_prefix = "c") {
    const Cat& cat = sys.cat;
    Cellularized out;
    out.token_nf.resize(cat->object_count());
    std::vector<Cell> cells;
    std::vector<std::vector<Element>> actions;
    std::vector<std::vector<int>> cell_of_token(cat->object_count());
    for (int d = 0; d <= cat->bound(); ++d) {
        for (ObjId a : cat->objects_of_degree(d)) {
            const int na = sys.size[a.v];
            std::vector<char> degen(na, 0);
            for (MorId s : cat->minus_out(a))
                for (int u = 0; u < sys.size[cat->cod(s).v]; ++u) degen[sys.act(s, u)] = 1;
            cell_of_token[a.v].assign(na, -1);
            for (int t = 0; t < na; ++t) {
                if (degen[t]) continue;
                cell_of_token[a.v][t] = static_cast<int>(cells.size());
                out.cell_token.emplace_back(a, t);
                cells.push_back({name_prefix + std::to_string(cells.size()), a});
                actions.emplace_back();
            }
            // unique normal form per token
            out.token_nf[a.v].assign(na, Element{});
            std::vector<int> hits(na, 0);
            for (int t = 0; t < na; ++t)
                if (cell_of_token[a.v][t] >= 0) {
                    out.token_nf[a.v][t] = {cat->identity(a), cell_of_token[a.v][t]};
                    hits[t] = 1;
                }
            for (MorId s : cat->minus_out(a)) {
                ObjId b = cat->cod(s);
                for (int u = 0; u < sys.size[b.v]; ++u) {
                    int c = cell_of_token[b.v][u];
                    if (c < 0) continue;
                    int t = sys.act(s, u);
                    out.token_nf[a.v][t] = {s, c};
                    ++hits[t];
                }
            }
            for (int t = 0; t < na; ++t)
                if (hits[t] != 1)
                    throw Error("cellularize: token admits " + std::to_string(hits[t]) +
                                " normal forms; the level system is not a presheaf");
        }
    }
    // face actions consult lower levels, which are complete by now
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        auto [a, t] = out.cell_token[c];
        for (MorId face : cat->faces_into(a))
            actions[c].push_back(out.token_nf[cat->dom(face).v][sys.act(face, t)]);
    }
    out.complex = CellComplex::make(cat, std::move(cells), std::move(actions),
                                    CellComplex::Check::none);
    return out;
}

// ---- coproducts ---------------------------------------------------------

struct CoproductResult {
    CellComplex complex;
    std::vector<ComplexMap> injections;
};

/// Disjoint union with tagged cell ids.
inline CoproductResult coproduct(const Cat& cat, const std::vector<CellComplex>& parts) {
    std::vector<Cell> cells;
    std::vector<std::vector<Element>> actions;
    std::vector<int> offset;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (!parts[p].category()->same_as(*cat))
            throw InputError("coproduct: component over a different instance");
        offset.push_back(static_cast<int>(cells.size()));
        for (int i = 0; i < parts[p].cell_count(); ++i) {
            cells.push_back({std::to_string(p) + "." + parts[p].cell(i).name,
                             parts[p].cell(i).shape});
            std::vector<Element> row;
            const auto& faces = cat->faces_into(parts[p].cell(i).shape);
            for (std::size_t s = 0; s < faces.size(); ++s) {
                Element e = parts[p].face_action(i, static_cast<int>(s));
                row.push_back({e.sigma, e.cell + offset[p]});
            }
            actions.push_back(std::move(row));
        }
    }
    CoproductResult res;
    res.complex = CellComplex::make(cat, std::move(cells), std::move(actions),
                                    CellComplex::Check::none);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<Element> img;
        for (int i = 0; i < parts[p].cell_count(); ++i)
            img.push_back(res.complex.cell_element(offset[p] + i));
        res.injections.emplace_back(parts[p], res.complex, std::move(img), false);
    }
    return res;
}

/// The map out of a coproduct determined by per-component maps.
inline ComplexMap coproduct_map(const CoproductResult& cop,
                                const std::vector<ComplexMap>& components) {
    std::vector<Element> img(cop.complex.cell_count());
    for (std::size_t p = 0; p < components.size(); ++p) {
        if (!(components[p].target() == components.front().target()))
            throw InputError("coproduct_map: component targets differ");
        const ComplexMap& inj = cop.injections[p];
        for (int i = 0; i < inj.source().cell_count(); ++i)
            img[inj.cell_images()[i].cell] = components[p].cell_images()[i];
    }
    return ComplexMap(cop.complex, components.empty() ? cop.complex
                                                      : components.front().target(),
                      std::move(img), false);
}

// ---- pushouts -----------------------------------------------------------

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);  // keep canonical minima
    }
};

}  // namespace detail

struct PushoutResult {
    CellComplex complex;
    ComplexMap from_b, from_c;

    // internals used by mediation
    std::shared_ptr<ComplexLevels> lb, lc;
    std::vector<std::vector<int>> cls;                // [object][slot] -> class
    std::vector<std::vector<int>> rep;                // [object][class] -> slot
    Cellularized data;

    std::pair<bool, Element> slot_info(ObjId a, int slot) const {
        int nb = static_cast<int>(lb->elems[a.v].size());
        if (slot < nb) return {true, lb->elems[a.v][slot]};
        return {false, lc->elems[a.v][slot - nb]};
    }
};

/// Levelwise pushout of B ←f− S −g→ C by union-find on B_a ⊔ C_a over the
/// relations f(s) ~ g(s), then cell extraction.
inline PushoutResult pushout(const ComplexMap& f, const ComplexMap& g) {
    if (!(f.source() == g.source()))
        throw InputError("pushout: the span legs do not share a source");
    const Cat& cat = f.source().category();
    PushoutResult res;
    res.lb = std::make_shared<ComplexLevels>(f.target());
    res.lc = std::make_shared<ComplexLevels>(g.target());
    ComplexLevels ls(f.source());
    const int no = cat->object_count();
    std::vector<detail::UnionFind> uf;
    uf.reserve(no);
    for (int ov = 0; ov < no; ++ov) {
        int nb = static_cast<int>(res.lb->elems[ov].size());
        int nc = static_cast<int>(res.lc->elems[ov].size());
        uf.emplace_back(nb + nc);
        for (const Element& s : ls.elems[ov]) {
            int ib = res.lb->index[ov].at(f.apply(s));
            int ic = res.lc->index[ov].at(g.apply(s));
            uf.back().unite(ib, nb + ic);
        }
    }
    // compress classes
    res.cls.resize(no);
    res.rep.resize(no);
    LevelSystem sys;
    sys.cat = cat;
    for (int ov = 0; ov < no; ++ov) {
        int n = static_cast<int>(uf[ov].parent.size());
        res.cls[ov].assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int r = uf[ov].find(i);
            if (res.cls[ov][r] < 0) {
                res.cls[ov][r] = static_cast<int>(res.rep[ov].size());
                res.rep[ov].push_back(r);
            }
            res.cls[ov][i] = res.cls[ov][r];
        }
        sys.size.push_back(static_cast<int>(res.rep[ov].size()));
    }
    const PushoutResult* rp = &res;
    sys.act = [rp, cat](MorId m, int tok) {
        ObjId b = cat->cod(m), a = cat->dom(m);
        int slot = rp->rep[b.v][tok];
        auto [in_b, e] = rp->slot_info(b, slot);
        const ComplexLevels& side = in_b ? *rp->lb : *rp->lc;
        Element img = side.complex.act(e, m);
        int islot = side.index[a.v].at(img);
        if (!in_b) islot += static_cast<int>(rp->lb->elems[a.v].size());
        return rp->cls[a.v][islot];
    };
    res.data = cellularize(sys, "p");
    res.complex = res.data.complex;
    // cocone legs on cells
    std::vector<Element> imgb, imgc;
    for (int i = 0; i < f.target().cell_count(); ++i) {
        ObjId a = f.target().cell(i).shape;
        int slot = res.lb->index[a.v].at(f.target().cell_element(i));
        imgb.push_back(res.data.token_nf[a.v][res.cls[a.v][slot]]);
    }
    for (int i = 0; i < g.target().cell_count(); ++i) {
        ObjId a = g.target().cell(i).shape;
        int slot = static_cast<int>(res.lb->elems[a.v].size()) +
                   res.lc->index[a.v].at(g.target().cell_element(i));
        imgc.push_back(res.data.token_nf[a.v][res.cls[a.v][slot]]);
    }
    res.from_b = ComplexMap(f.target(), res.complex, std::move(imgb), false);
    res.from_c = ComplexMap(g.target(), res.complex, std::move(imgc), false);
    return res;
}

/// The mediating map out of a computed pushout against a commuting test
/// cocone (p: B→T, q: C→T); verifies constancy on every class.
inline ComplexMap pushout_mediate(const PushoutResult& po, const ComplexMap& p,
                                  const ComplexMap& q) {
    std::vector<Element> img;
    for (int i = 0; i < po.complex.cell_count(); ++i) {
        auto [a, tok] = po.data.cell_token[i];
        std::optional<Element> chosen;
        for (int slot = 0; slot < static_cast<int>(po.cls[a.v].size()); ++slot) {
            if (po.cls[a.v][slot] != tok) continue;
            auto [in_b, e] = po.slot_info(a, slot);
            Element t = in_b ? p.apply(e) : q.apply(e);
            if (!chosen)
                chosen = t;
            else if (*chosen != t)
                throw InputError("pushout_mediate: cocone does not coequalize the span");
        }
        img.push_back(*chosen);
    }
    return ComplexMap(po.complex, p.target(), std::move(img), false);
}

struct Square {
    ComplexMap f, g;  // span:   f: S → B,  g: S → C
    ComplexMap p, q;  // cocone: p: B → Q,  q: C → Q
};

/// True iff the canonical comparison from the computed pushout to the
/// square's corner is a levelwise bijection. Throws if the square does not
/// commute.
inline bool is_pushout(const Square& sq) {
    if (!(compose(sq.p, sq.f) == compose(sq.q, sq.g)))
        throw InputError("is_pushout: the square does not commute");
    PushoutResult po = pushout(sq.f, sq.g);
    ComplexMap m = pushout_mediate(po, sq.p, sq.q);
    const Cat& cat = po.complex.category();
    ComplexLevels lq(sq.p.target());
    for (int ov = 0; ov < cat->object_count(); ++ov) {
        auto elems = po.complex.elements_at(ObjId{ov});
        if (elems.size() != lq.elems[ov].size()) return false;
        std::unordered_map<Element, int, ElementHash> seen;
        for (const Element& e : elems)
            if (!seen.emplace(m.apply(e), 1).second) return false;
    }
    return true;
}

// ---- the skeletal-induction square --------------------------------------

/// For each cell x of degree n, the boundary of its representable attaches
/// into the (n−1)-skeleton through x; the square of these coproducts over
/// Sk^{n-1} K → Sk^n K is the skeletal-induction pushout.
inline Square skeletal_square(const CellComplex& k, int n) {
    const Cat& cat = k.category();
    SkeletonResult skn = skeleton(k, n);
    SkeletonResult skn1 = skeleton(k, n - 1);
    std::vector<CellComplex> bds, reps;
    std::vector<ComplexMap> attach_n1, attach_n;  // per component
    for (int x = 0; x < k.cell_count(); ++x) {
        if (cat->degree(k.cell(x).shape) != n) continue;
        Representable rep = representable_with_arrows(cat, k.cell(x).shape);
        SkeletonResult bd = skeleton(rep.complex, n - 1);
        // attach: cell rho of the representable goes to x·rho
        std::vector<Element> into_n, into_n1;
        for (int i = 0; i < rep.complex.cell_count(); ++i) {
            Element e = k.act(k.cell_element(x), rep.arrows[i]);
            into_n.push_back({e.sigma, skn.cell_index[e.cell]});
            if (bd.cell_index[i] >= 0) into_n1.push_back({e.sigma, skn1.cell_index[e.cell]});
        }
        attach_n.emplace_back(rep.complex, skn.complex, std::move(into_n));
        attach_n1.emplace_back(bd.complex, skn1.complex, std::move(into_n1));
        bds.push_back(bd.complex);
        reps.push_back(rep.complex);
    }
    CoproductResult s = coproduct(cat, bds);
    CoproductResult c = coproduct(cat, reps);
    ComplexMap f = coproduct_map(s, attach_n1);  // S → Sk^{n-1}
    if (bds.empty()) f = ComplexMap(s.complex, skn1.complex, {}, false);
    // S → C: boundary-to-representable inclusions, componentwise
    std::vector<Element> gimg(s.complex.cell_count());
    for (std::size_t p = 0; p < bds.size(); ++p) {
        SkeletonResult bd = skeleton(reps[p], n - 1);
        for (int i = 0; i < bds[p].cell_count(); ++i) {
            // bd cell i corresponds to rep cell with bd.cell_index inverse
            int repcell = bd.inclusion.cell_images()[i].cell;
            gimg[s.injections[p].cell_images()[i].cell] =
                c.injections[p].cell_images()[repcell];
        }
    }
    ComplexMap g(s.complex, c.complex, std::move(gimg), false);
    // Sk^{n-1} → Sk^n inclusion
    std::vector<Element> pim;
    for (int i = 0; i < skn1.complex.cell_count(); ++i) {
        int kcell = skn1.inclusion.cell_images()[i].cell;
        pim.push_back(skn.complex.cell_element(skn.cell_index[kcell]));
    }
    ComplexMap p(skn1.complex, skn.complex, std::move(pim), false);
    ComplexMap q = coproduct_map(c, attach_n);
    if (reps.empty()) q = ComplexMap(c.complex, skn.complex, {}, false);
    return {std::move(f), std::move(g), std::move(p), std::move(q)};
}

}  // namespace ezcat

#endif  // EZCAT_COLIMIT_HPP
