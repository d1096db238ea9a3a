// Diagonal functors on bipresheaves: the categorical diagonal (precomposition
// with a ↦ (a,a)), and Day-convolution diagonals computed as coends against a
// promonoidal structure on the base — the join on simplicial sets and the
// geometric product on cubical sets. All are cocontinuous by construction
// (levelwise quotients), which the tests exercise.

#ifndef EZCAT_DIAGONAL_HPP
#define EZCAT_DIAGONAL_HPP

#include <map>
#include <tuple>

#include "ezcat/bipresheaf.hpp"
#include "ezcat/box_cat.hpp"
#include "ezcat/simplex_cat.hpp"

namespace ezcat {

/// The map of representables induced by chi: a → b.
inline ComplexMap representable_map(const Representable& ra, const Representable& rb,
                                    MorId chi) {
    const Cat& cat = ra.complex.category();
    std::unordered_map<int, int> rb_index;
    for (int i = 0; i < rb.complex.cell_count(); ++i) rb_index[rb.arrows[i].v] = i;
    std::vector<Element> img;
    for (std::size_t i = 0; i < ra.arrows.size(); ++i) {
        auto [m, pl] = cat->reedy_factorize(cat->compose(chi, ra.arrows[i]));
        img.push_back({m, rb_index.at(pl.v)});
    }
    return ComplexMap(ra.complex, rb.complex, std::move(img), false);
}

// ---- categorical products ---------------------------------------------------

struct CatProduct {
    Cellularized cz;
    std::shared_ptr<ComplexLevels> lk, ll;
    ComplexMap proj_k, proj_l;
    int token(ObjId level, int i, int j) const {
        return i * static_cast<int>(ll->elems[level.v].size()) + j;
    }
};

/// Levelwise product of presheaves over one base, cellularized.
inline CatProduct categorical_product(const CellComplex& k, const CellComplex& l) {
    if (!k.category()->same_as(*l.category()))
        throw InputError("categorical_product: instances differ");
    const Cat& cat = k.category();
    CatProduct out;
    out.lk = std::make_shared<ComplexLevels>(k);
    out.ll = std::make_shared<ComplexLevels>(l);
    LevelSystem sys;
    sys.cat = cat;
    for (int ov = 0; ov < cat->object_count(); ++ov)
        sys.size.push_back(static_cast<int>(out.lk->elems[ov].size() *
                                            out.ll->elems[ov].size()));
    sys.act = [&out, &cat](MorId m, int tok) {
        ObjId b = cat->cod(m), c = cat->dom(m);
        int nl = static_cast<int>(out.ll->elems[b.v].size());
        Element ek = out.lk->complex.act(out.lk->elems[b.v][tok / nl], m);
        Element el = out.ll->complex.act(out.ll->elems[b.v][tok % nl], m);
        return out.token(c, out.lk->index[c.v].at(ek), out.ll->index[c.v].at(el));
    };
    out.cz = cellularize(sys, "x");
    std::vector<Element> pk, pl;
    for (int c = 0; c < out.cz.complex.cell_count(); ++c) {
        auto [a, tok] = out.cz.cell_token[c];
        int nl = static_cast<int>(out.ll->elems[a.v].size());
        pk.push_back(out.lk->elems[a.v][tok / nl]);
        pl.push_back(out.ll->elems[a.v][tok % nl]);
    }
    out.proj_k = ComplexMap(out.cz.complex, k, std::move(pk), false);
    out.proj_l = ComplexMap(out.cz.complex, l, std::move(pl), false);
    return out;
}

// ---- the categorical diagonal -----------------------------------------------

struct DiagCat {
    Cellularized cz;  // over the base
    std::vector<std::vector<Element>> xelems;  // [a] -> elements of X at (a,a)
    std::vector<std::unordered_map<Element, int, ElementHash>> xindex;
    const CellComplex& complex() const { return cz.complex; }
};

/// Evaluation at a is X_{(a,a)}, action by the diagonal of each morphism.
inline DiagCat diagonal_categorical(const CellComplex& x) {
    const ProductCat& p = require_product(x.category());
    const Cat& base = p.left();
    if (x.category()->bound() < 2 * base->bound())
        throw BoundError("diagonal_categorical: product bound below twice the base bound",
                         2 * base->bound());
    DiagCat out;
    out.xelems.resize(base->object_count());
    out.xindex.resize(base->object_count());
    LevelSystem sys;
    sys.cat = base;
    for (int av = 0; av < base->object_count(); ++av) {
        out.xelems[av] = x.elements_at(p.pair_object(ObjId{av}, ObjId{av}));
        for (int t = 0; t < static_cast<int>(out.xelems[av].size()); ++t)
            out.xindex[av][out.xelems[av][t]] = t;
        sys.size.push_back(static_cast<int>(out.xelems[av].size()));
    }
    sys.act = [&x, &p, &out](MorId m, int tok) {
        ObjId b = p.left()->cod(m), c = p.left()->dom(m);
        Element z = x.act(out.xelems[b.v][tok], p.pair_morphism(m, m));
        return out.xindex[c.v].at(z);
    };
    out.cz = cellularize(sys, "d");
    return out;
}

inline ComplexMap diagonal_categorical_map(const ComplexMap& f, const DiagCat& dx,
                                           const DiagCat& dy) {
    std::vector<Element> img;
    for (int c = 0; c < dx.complex().cell_count(); ++c) {
        auto [a, tok] = dx.cz.cell_token[c];
        Element z = f.apply(dx.xelems[a.v][tok]);
        img.push_back(dy.cz.token_nf[a.v][dy.xindex[a.v].at(z)]);
    }
    return ComplexMap(dx.complex(), dy.complex(), std::move(img), false);
}

// ---- promonoidal structures ---------------------------------------------------

/// The value a ⊗ a' is a representable of the output instance: the join takes
/// ([m],[n]) to ⟦[m+n+1]⟧ and the geometric product takes ([1]^m,[1]^n) to
/// ⟦[1]^{m+n}⟧. The categorical structure (value = product of representables)
/// is realized directly by diagonal_categorical / categorical_product.
class Promonoidal {
  public:
    enum class Kind { join, geometric };

    static Promonoidal join_on(std::shared_ptr<const SimplexCat> base,
                               std::shared_ptr<const SimplexCat> out) {
        Promonoidal p;
        p.kind_ = Kind::join;
        p.sbase_ = std::move(base);
        p.sout_ = std::move(out);
        return p;
    }

    static Promonoidal geometric_on(std::shared_ptr<const BoxCat> base,
                                    std::shared_ptr<const BoxCat> out) {
        if (base->has_connections() != out->has_connections())
            throw InputError("geometric structure: base and output box variants differ");
        Promonoidal p;
        p.kind_ = Kind::geometric;
        p.bbase_ = std::move(base);
        p.bout_ = std::move(out);
        return p;
    }

    Kind kind() const { return kind_; }
    Cat base() const { return sbase_ ? Cat(sbase_) : Cat(bbase_); }
    Cat out() const { return sout_ ? Cat(sout_) : Cat(bout_); }

    int value_degree(int da, int db) const {
        return kind_ == Kind::join ? da + db + 1 : da + db;
    }

    ObjId value_object(ObjId a, ObjId b) const {
        int d = value_degree(base()->degree(a), base()->degree(b));
        if (d > out()->bound())
            throw BoundError("promonoidal value exceeds the output bound", d);
        return ObjId{d};  // simplex/box objects are indexed by degree
    }

    /// The output-instance arrow f ⊗ g.
    MorId arrow(MorId f, MorId g) const {
        if (kind_ == Kind::join) {
            const auto& vf = sbase_->values(f);
            const auto& vg = sbase_->values(g);
            int m2 = sbase_->degree(sbase_->cod(f));
            std::vector<int> v;
            for (int x : vf) v.push_back(x);
            for (int x : vg) v.push_back(m2 + 1 + x);
            ObjId d = value_object(sbase_->dom(f), sbase_->dom(g));
            ObjId c = value_object(sbase_->cod(f), sbase_->cod(g));
            return sout_->monotone(d, c, v);
        }
        const auto& pf = bbase_->outs(f);
        const auto& pg = bbase_->outs(g);
        int m = bbase_->degree(bbase_->dom(f));
        BoxCat::Payload pl = pf;
        for (BoxCat::Out o : pg) {
            for (int& i : o.blk) i += m;
            pl.push_back(std::move(o));
        }
        ObjId d = value_object(bbase_->dom(f), bbase_->dom(g));
        ObjId c = value_object(bbase_->cod(f), bbase_->cod(g));
        return bout_->lookup(d, c, pl);
    }

  private:
    Kind kind_ = Kind::join;
    std::shared_ptr<const SimplexCat> sbase_, sout_;
    std::shared_ptr<const BoxCat> bbase_, bout_;
};

// ---- Day convolution diagonals -------------------------------------------------

struct Day {
    Cellularized cz;  // over the promonoidal output instance
    // per output level: slots (product object, x index, p index) with classes
    std::vector<std::vector<std::tuple<int, int, int>>> slots;
    std::vector<std::vector<int>> cls;
    std::vector<std::map<std::tuple<int, int, int>, int>> slot_index;
    std::vector<std::vector<Element>> xelems;  // [product object] -> elements of X
    std::vector<std::unordered_map<Element, int, ElementHash>> xindex;
    std::vector<std::shared_ptr<ComplexLevels>> value;  // [product object]
    const CellComplex& complex() const { return cz.complex; }
};

/// The coend ∫^{(a,a')} X_{(a,a')} × (a ⊗ a'): levelwise quotient of the sums
/// by the relations along one-sided generators of the product instance.
inline Day day_diagonal(const CellComplex& x, const Promonoidal& pm) {
    const ProductCat& p = require_product(x.category());
    const Cat& base = pm.base();
    if (!p.left()->same_as(*base) || !p.right()->same_as(*base))
        throw InputError("day_diagonal: bipresheaf factors do not match the structure's base");
    const Cat out_cat = pm.out();
    Day day;
    const int no = p.object_count();
    day.xelems.resize(no);
    day.xindex.resize(no);
    day.value.resize(no);
    // every level with elements contributes a value complex, so the output
    // instance must house the value of each such pair (for complexes filling
    // their instance this is the sum of the factor bounds, plus one for join)
    int required = -1;
    for (int ov = 0; ov < no; ++ov) {
        day.xelems[ov] = x.elements_at(ObjId{ov});
        for (int t = 0; t < static_cast<int>(day.xelems[ov].size()); ++t)
            day.xindex[ov][day.xelems[ov][t]] = t;
        if (day.xelems[ov].empty()) continue;
        auto [l, r] = p.factors(ObjId{ov});
        required = std::max(required, pm.value_degree(base->degree(l), base->degree(r)));
    }
    if (required > out_cat->bound())
        throw BoundError("day_diagonal: output instance cannot house all values", required);
    std::vector<Representable> vrep(no);
    for (int ov = 0; ov < no; ++ov) {
        if (day.xelems[ov].empty()) continue;
        auto [l, r] = p.factors(ObjId{ov});
        vrep[ov] = representable_with_arrows(out_cat, pm.value_object(l, r));
        day.value[ov] = std::make_shared<ComplexLevels>(vrep[ov].complex);
    }
    // slot spaces per output level
    const int nout = out_cat->object_count();
    day.slots.resize(nout);
    day.cls.resize(nout);
    day.slot_index.resize(nout);
    for (int cv = 0; cv < nout; ++cv) {
        for (int ov = 0; ov < no; ++ov) {
            if (!day.value[ov]) continue;
            int np = static_cast<int>(day.value[ov]->elems[cv].size());
            for (int xi = 0; xi < static_cast<int>(day.xelems[ov].size()); ++xi)
                for (int pi = 0; pi < np; ++pi) {
                    day.slot_index[cv][{ov, xi, pi}] =
                        static_cast<int>(day.slots[cv].size());
                    day.slots[cv].emplace_back(ov, xi, pi);
                }
        }
    }
    std::vector<detail::UnionFind> uf;
    for (int cv = 0; cv < nout; ++cv)
        uf.emplace_back(static_cast<int>(day.slots[cv].size()));
    // relations along one-sided generators chi: o1 → o2
    auto relate = [&](ObjId o1, ObjId o2, MorId chi, const ComplexMap& vmap) {
        if (day.xelems[o2.v].empty() || !day.value[o1.v]) return;
        for (int xi = 0; xi < static_cast<int>(day.xelems[o2.v].size()); ++xi) {
            Element xr = x.act(day.xelems[o2.v][xi], chi);
            int xr_idx = day.xindex[o1.v].at(xr);
            for (int cv = 0; cv < nout; ++cv) {
                for (int pi = 0;
                     pi < static_cast<int>(day.value[o1.v]->elems[cv].size()); ++pi) {
                    Element pp = vmap.apply(day.value[o1.v]->elems[cv][pi]);
                    int pp_idx = day.value[o2.v]->index[cv].at(pp);
                    uf[cv].unite(day.slot_index[cv].at({o1.v, xr_idx, pi}),
                                 day.slot_index[cv].at({o2.v, xi, pp_idx}));
                }
            }
        }
    };
    for (int ov = 0; ov < no; ++ov) {
        if (!day.value[ov]) continue;
        ObjId o1{ov};
        auto [l, r] = p.factors(o1);
        auto one_sided = [&](MorId gl, MorId gr) {
            ObjId t1 = base->cod(gl), t2 = base->cod(gr);
            if (base->degree(t1) + base->degree(t2) > p.bound()) return;
            ObjId o2 = p.pair_object(t1, t2);
            if (day.xelems[o2.v].empty() || !day.value[o2.v]) return;
            MorId chi = p.pair_morphism(gl, gr);
            ComplexMap vmap = representable_map(vrep[ov], vrep[o2.v], pm.arrow(gl, gr));
            relate(o1, o2, chi, vmap);
        };
        for (MorId g : base->minus_generators_out(l)) one_sided(g, base->identity(r));
        for (MorId g : base->minus_generators_out(r)) one_sided(base->identity(l), g);
        for (ObjId t : base->objects_of_degree(base->degree(l) + 1))
            for (MorId g : base->faces_into(t))
                if (base->dom(g) == l) one_sided(g, base->identity(r));
        for (ObjId t : base->objects_of_degree(base->degree(r) + 1))
            for (MorId g : base->faces_into(t))
                if (base->dom(g) == r) one_sided(base->identity(l), g);
    }
    // compress classes and cellularize over the output instance
    std::vector<std::vector<int>> rep(nout);
    LevelSystem sys;
    sys.cat = out_cat;
    for (int cv = 0; cv < nout; ++cv) {
        int n = static_cast<int>(day.slots[cv].size());
        day.cls[cv].assign(n, -1);
        int classes = 0;
        for (int s = 0; s < n; ++s) {
            int root = uf[cv].find(s);
            if (day.cls[cv][root] < 0) {
                day.cls[cv][root] = classes++;
                rep[cv].push_back(root);
            }
            day.cls[cv][s] = day.cls[cv][root];
        }
        sys.size.push_back(classes);
    }
    sys.act = [&day, &out_cat, &rep](MorId m, int tok) {
        ObjId b = out_cat->cod(m), c = out_cat->dom(m);
        auto [ov, xi, pi] = day.slots[b.v][rep[b.v][tok]];
        Element pp = day.value[ov]->complex.act(day.value[ov]->elems[b.v][pi], m);
        int pp_idx = day.value[ov]->index[c.v].at(pp);
        return day.cls[c.v][day.slot_index[c.v].at({ov, xi, pp_idx})];
    };
    day.cz = cellularize(sys, "y");
    return day;
}

/// diag f for the Day diagonal: [(x, p)] ↦ [(f x, p)].
inline ComplexMap day_map(const ComplexMap& f, const Day& dx, const Day& dy) {
    std::vector<Element> img;
    for (int c = 0; c < dx.complex().cell_count(); ++c) {
        auto [lvl, tok] = dx.cz.cell_token[c];
        // find a slot in this class
        int slot = -1;
        for (int s = 0; s < static_cast<int>(dx.cls[lvl.v].size()); ++s)
            if (dx.cls[lvl.v][s] == tok) {
                slot = s;
                break;
            }
        auto [ov, xi, pi] = dx.slots[lvl.v][slot];
        Element y = f.apply(dx.xelems[ov][xi]);
        int yi = dy.xindex[ov].at(y);
        int cls = dy.cls[lvl.v][dy.slot_index[lvl.v].at({ov, yi, pi})];
        img.push_back(dy.cz.token_nf[lvl.v][cls]);
    }
    return ComplexMap(dx.complex(), dy.complex(), std::move(img), false);
}

// ---- binary tensors ----------------------------------------------------------

/// diag(K ⊠ L) for a Day structure; the categorical-product tensor is
/// categorical_product(K, L) directly.
inline CellComplex tensor(const CellComplex& k, const CellComplex& l, const Promonoidal& pm) {
    Cat prod = std::make_shared<ProductCat>(k.category(), l.category(),
                                            k.category()->bound() + l.category()->bound());
    return day_diagonal(external_product(k, l, prod), pm).complex();
}

}  // namespace ezcat

#endif  // EZCAT_DIAGONAL_HPP
