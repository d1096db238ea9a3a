// Finite presheaves on an EZ category instance.
//
// A presheaf is stored cellularly: the non-degenerate cells, plus for every
// cell and every generating face the normal form (a minus arrow and a cell)
// of the face of that cell. Every other value is derived: an element at
// level a is a pair (sigma: a → b in A₋, cell of shape b), unique by the
// Eilenberg-Zilber lemma, and the action of an arbitrary morphism is
// evaluated through Reedy factorization and face splittings.

#ifndef EZCAT_PRESHEAF_HPP
#define EZCAT_PRESHEAF_HPP

#include <algorithm>
#include <unordered_map>

#include "ezcat/category.hpp"

namespace ezcat {

/// An element in EZ normal form; its level is dom(sigma).
struct Element {
    MorId sigma;
    int cell = -1;
    auto operator<=>(const Element&) const = default;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const {
        std::size_t h = std::hash<int>{}(e.sigma.v);
        hash_mix(h, std::hash<int>{}(e.cell));
        return h;
    }
};

struct Cell {
    std::string name;
    ObjId shape;
};

class CellComplex {
  public:
    enum class Check { none, faces, full };

    CellComplex() = default;

    static CellComplex empty(Cat cat) {
        CellComplex k;
        k.cat_ = std::move(cat);
        return k;
    }

    /// Assemble from cells and per-face normal forms. face_actions[i] must be
    /// parallel to category->faces_into(cells[i].shape).
    static CellComplex make(Cat cat, std::vector<Cell> cells,
                            std::vector<std::vector<Element>> face_actions,
                            Check check = Check::faces) {
        CellComplex k;
        k.cat_ = std::move(cat);
        k.cells_ = std::move(cells);
        k.face_act_ = std::move(face_actions);
        k.verify_wellformed();
        k.validate(check);
        return k;
    }

    const Cat& category() const { return cat_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }

    Element cell_element(int i) const { return {cat_->identity(cells_[i].shape), i}; }
    ObjId level(const Element& x) const { return cat_->dom(x.sigma); }
    bool is_degenerate(const Element& x) const { return !cat_->is_identity(x.sigma); }

    int max_degree() const {
        int d = -1;
        for (const Cell& c : cells_) d = std::max(d, cat_->degree(c.shape));
        return d;
    }

    /// Cells per degree 0..max; empty vector for the empty presheaf.
    std::vector<int> census() const {
        std::vector<int> out(max_degree() + 1, 0);
        for (const Cell& c : cells_) ++out[cat_->degree(c.shape)];
        return out;
    }

    /// Normal form of the face of a cell, aligned with faces_into(shape).
    const Element& face_action(int cell, int slot) const { return face_act_[cell][slot]; }

    /// Normal form of x · phi for phi: c → level(x).
    Element act(const Element& x, MorId phi) const {
        if (x.cell < 0 || x.cell >= cell_count())
            throw std::invalid_argument("act: not an element of this complex");
        if (cat_->cod(phi) != level(x)) throw std::invalid_argument("act: shape mismatch");
        return cell_act(x.cell, cat_->compose(x.sigma, phi));
    }

    /// The unique (sigma ∈ A₋, non-degenerate cell) pair with cell·sigma = x.
    std::pair<MorId, int> ez_decompose(const Element& x) const {
        if (x.cell < 0 || x.cell >= cell_count() || !cat_->is_minus(x.sigma) ||
            cat_->cod(x.sigma) != cells_[x.cell].shape)
            throw std::invalid_argument("ez_decompose: not an element of this complex");
        return {x.sigma, x.cell};
    }

    /// All elements at level a, in canonical order.
    std::vector<Element> elements_at(ObjId a) const {
        std::vector<Element> out;
        for (int bv = 0; bv < cat_->object_count(); ++bv) {
            for (MorId s : cat_->hom(a, ObjId{bv})) {
                if (!cat_->is_minus(s)) continue;
                for (int c = 0; c < cell_count(); ++c)
                    if (cells_[c].shape == ObjId{bv}) out.push_back({s, c});
            }
        }
        return out;
    }

    /// Functoriality check: faces-of-faces (load-time default) or every
    /// composable pair of enumerated morphisms (corpus tests).
    void validate(Check check) const {
        if (check == Check::none) return;
        if (check == Check::faces) {
            for (int c = 0; c < cell_count(); ++c) {
                ObjId b = cells_[c].shape;
                for (MorId d1 : cat_->faces_into(b)) {
                    Element e1 = face_act_[c][cat_->face_slot(d1)];
                    for (MorId d2 : cat_->faces_into(cat_->dom(d1))) {
                        if (act(e1, d2) != cell_act(c, cat_->compose(d1, d2)))
                            throw InputError("face actions violate functoriality at cell '" +
                                             cells_[c].name + "'");
                    }
                }
            }
            return;
        }
        for (int c = 0; c < cell_count(); ++c) {
            ObjId b = cells_[c].shape;
            for (int uv = 0; uv < cat_->object_count(); ++uv)
                for (MorId phi : cat_->hom(ObjId{uv}, b)) {
                    Element e1 = cell_act(c, phi);
                    for (int wv = 0; wv < cat_->object_count(); ++wv)
                        for (MorId psi : cat_->hom(ObjId{wv}, ObjId{uv})) {
                            if (act(e1, psi) != cell_act(c, cat_->compose(phi, psi)))
                                throw InputError("action violates functoriality at cell '" +
                                                 cells_[c].name + "'");
                        }
                }
        }
    }

    friend bool operator==(const CellComplex& a, const CellComplex& b) {
        if (!a.cat_ || !b.cat_) return !a.cat_ && !b.cat_;
        if (!a.cat_->same_as(*b.cat_)) return false;
        if (a.cells_.size() != b.cells_.size()) return false;
        for (std::size_t i = 0; i < a.cells_.size(); ++i)
            if (a.cells_[i].name != b.cells_[i].name || a.cells_[i].shape != b.cells_[i].shape)
                return false;
        return a.face_act_ == b.face_act_;
    }

  private:
    Cat cat_;
    std::vector<Cell> cells_;
    std::vector<std::vector<Element>> face_act_;

    // Normal form of cell · psi for arbitrary psi: c → shape(cell). The plus
    // part is peeled one generating face at a time; recursion descends in the
    // codomain degree, so it terminates for any stored data.
    Element cell_act(int cell, MorId psi) const {
        auto [psi_m, psi_p] = cat_->reedy_factorize(psi);
        Element e{cat_->identity(cat_->cod(psi_p)), cell};
        while (!cat_->is_identity(psi_p)) {
            auto [face, rest] = cat_->plus_split(psi_p);
            const Element& nf = face_act_[e.cell][cat_->face_slot(face)];
            // cell·(face∘rest) = (cell·face)·rest = nf_cell·(nf_sigma∘rest)
            MorId carry = cat_->compose(nf.sigma, rest);
            auto [cm, cp] = cat_->reedy_factorize(carry);
            e.cell = nf.cell;
            psi_p = cp;
            psi_m = cat_->compose(cm, psi_m);
        }
        e.sigma = psi_m;
        return e;
    }

    void verify_wellformed() const {
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (cells_[i].shape.v < 0 || cells_[i].shape.v >= cat_->object_count())
                throw InputError("cell '" + cells_[i].name + "' has an invalid shape");
            const auto& faces = cat_->faces_into(cells_[i].shape);
            if (face_act_[i].size() != faces.size())
                throw InputError("cell '" + cells_[i].name + "' is missing face actions");
            for (std::size_t s = 0; s < faces.size(); ++s) {
                const Element& e = face_act_[i][s];
                if (e.cell < 0 || e.cell >= cell_count())
                    throw InputError("face action of '" + cells_[i].name +
                                     "' references an unknown cell");
                if (!cat_->is_minus(e.sigma) || cat_->dom(e.sigma) != cat_->dom(faces[s]) ||
                    cat_->cod(e.sigma) != cells_[e.cell].shape)
                    throw InputError("face action of '" + cells_[i].name +
                                     "' is not a valid normal form");
            }
        }
        for (std::size_t i = 0; i + 1 < cells_.size(); ++i)
            for (std::size_t j = i + 1; j < cells_.size(); ++j)
                if (cells_[i].name == cells_[j].name)
                    throw InputError("duplicate cell id '" + cells_[i].name + "'");
    }
};

// ---- basic constructions ----------------------------------------------

struct Representable {
    CellComplex complex;
    std::vector<MorId> arrows;  // the plus arrow of each cell, in cell order
};

/// The representable presheaf of a: one cell per plus arrow into a, acting by
/// Reedy factorization of composites; evaluation at c recovers hom(c, a).
inline Representable representable_with_arrows(const Cat& cat, ObjId a) {
    std::vector<Cell> cells;
    std::vector<MorId> arrows;
    std::unordered_map<int, int> index;
    for (int cv = 0; cv < cat->object_count(); ++cv)
        for (MorId rho : cat->hom(ObjId{cv}, a))
            if (cat->is_plus(rho)) {
                index[rho.v] = static_cast<int>(arrows.size());
                arrows.push_back(rho);
                cells.push_back({cat->payload_token(rho), ObjId{cv}});
            }
    std::vector<std::vector<Element>> actions(arrows.size());
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        for (MorId face : cat->faces_into(cat->dom(arrows[i]))) {
            auto [m, p] = cat->reedy_factorize(cat->compose(arrows[i], face));
            actions[i].push_back({m, index.at(p.v)});
        }
    }
    return {CellComplex::make(cat, std::move(cells), std::move(actions), CellComplex::Check::none),
            std::move(arrows)};
}

inline CellComplex representable(const Cat& cat, ObjId a) {
    return representable_with_arrows(cat, a).complex;
}

struct SkeletonResult;
class ComplexMap;

/// Cell-wise map of presheaves; values on degenerate elements follow by
/// naturality from the cell assignment.
class ComplexMap {
  public:
    ComplexMap() = default;
    ComplexMap(CellComplex src, CellComplex tgt, std::vector<Element> cell_images,
               bool check_naturality = true)
        : src_(std::move(src)), tgt_(std::move(tgt)), image_(std::move(cell_images)) {
        if (static_cast<int>(image_.size()) != src_.cell_count())
            throw InputError("map: one image per source cell required");
        if (!src_.category()->same_as(*tgt_.category()))
            throw InputError("map: source and target live over different instances");
        const auto& cat = *src_.category();
        for (int i = 0; i < src_.cell_count(); ++i)
            if (tgt_.level(image_[i]) != src_.cell(i).shape)
                throw InputError("map: image of cell '" + src_.cell(i).name +
                                 "' has the wrong shape");
        if (check_naturality) {
            for (int i = 0; i < src_.cell_count(); ++i)
                for (MorId face : cat.faces_into(src_.cell(i).shape)) {
                    Element lhs = tgt_.act(image_[i], face);
                    Element rhs = apply(src_.face_action(i, cat.face_slot(face)));
                    if (lhs != rhs)
                        throw InputError("map is not natural at cell '" + src_.cell(i).name +
                                         "'");
                }
        }
    }

    static ComplexMap identity(const CellComplex& k) {
        std::vector<Element> img;
        for (int i = 0; i < k.cell_count(); ++i) img.push_back(k.cell_element(i));
        return ComplexMap(k, k, std::move(img), false);
    }

    const CellComplex& source() const { return src_; }
    const CellComplex& target() const { return tgt_; }
    const std::vector<Element>& cell_images() const { return image_; }

    Element apply(const Element& x) const { return tgt_.act(image_[x.cell], x.sigma); }

    friend ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
        if (!(f.tgt_ == g.src_)) throw InputError("compose: maps are not composable");
        std::vector<Element> img;
        for (const Element& e : f.image_) img.push_back(g.apply(e));
        return ComplexMap(f.src_, g.tgt_, std::move(img), false);
    }

    friend bool operator==(const ComplexMap& a, const ComplexMap& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.image_ == b.image_;
    }

  private:
    CellComplex src_, tgt_;
    std::vector<Element> image_;
};

struct SkeletonResult {
    CellComplex complex;
    ComplexMap inclusion;
    std::vector<int> cell_index;  // ambient cell -> skeleton cell, -1 if dropped
};

/// Subcomplex on the cells of degree ≤ n (empty for n < 0), with inclusion.
inline SkeletonResult skeleton(const CellComplex& k, int n) {
    const Cat& cat = k.category();
    std::vector<int> keep(k.cell_count(), -1);
    std::vector<Cell> cells;
    for (int i = 0; i < k.cell_count(); ++i)
        if (cat->degree(k.cell(i).shape) <= n) {
            keep[i] = static_cast<int>(cells.size());
            cells.push_back(k.cell(i));
        }
    std::vector<std::vector<Element>> actions(cells.size());
    std::vector<Element> incl;
    for (int i = 0; i < k.cell_count(); ++i) {
        if (keep[i] < 0) continue;
        for (std::size_t s = 0; s < cat->faces_into(k.cell(i).shape).size(); ++s) {
            Element e = k.face_action(i, static_cast<int>(s));
            actions[keep[i]].push_back({e.sigma, keep[e.cell]});
        }
    }
    CellComplex sk = CellComplex::make(cat, std::move(cells), std::move(actions),
                                       CellComplex::Check::none);
    for (int i = 0; i < k.cell_count(); ++i)
        if (keep[i] >= 0) incl.push_back(k.cell_element(i));
    ComplexMap inclusion(sk, k, std::move(incl), false);
    return {std::move(sk), std::move(inclusion), std::move(keep)};
}

/// ∂⟦a⟧: the (deg a − 1)-skeleton of the representable of a.
inline CellComplex boundary(const Cat& cat, ObjId a) {
    return skeleton(representable(cat, a), cat->degree(a) - 1).complex;
}

/// Monotone stabilizing filtration Sk⁻¹ ⊆ Sk⁰ ⊆ ... ⊆ K; returns whether it
/// holds together with the stabilization index.
inline std::pair<bool, int> filtration_check(const CellComplex& k) {
    constexpr int kUnset = -99;
    int stable = kUnset;
    std::vector<std::string> prev;  // previous skeleton's cell names, in cell order
    for (int n = -1; n <= k.category()->bound(); ++n) {
        CellComplex sk = skeleton(k, n).complex;
        std::vector<std::string> names;
        for (const Cell& c : sk.cells()) names.push_back(c.name);
        // skeleta keep the ambient cell order, so inclusion is a subsequence test
        std::size_t p = 0;
        for (const std::string& nm : names)
            if (p < prev.size() && prev[p] == nm) ++p;
        if (p != prev.size()) return {false, -2};
        if (static_cast<int>(names.size()) == k.cell_count() && stable == kUnset) stable = n;
        prev = std::move(names);
    }
    if (static_cast<int>(prev.size()) != k.cell_count()) return {false, -2};
    return {stable == std::max(k.max_degree(), -1), stable};
}

/// Shape- and action-preserving bijection of cells, by degree-stratified
/// backtracking: lower cells are matched first, so face compatibility is a
/// pure check at assignment time.
inline std::optional<ComplexMap> is_isomorphic(const CellComplex& k, const CellComplex& l) {
    if (!k.category()->same_as(*l.category())) return std::nullopt;
    if (k.cell_count() != l.cell_count()) return std::nullopt;
    const Cat& cat = k.category();
    // group cells by shape, both sides; counts must agree
    std::unordered_map<int, std::vector<int>> lk, ll;
    for (int i = 0; i < k.cell_count(); ++i) lk[k.cell(i).shape.v].push_back(i);
    for (int i = 0; i < l.cell_count(); ++i) ll[l.cell(i).shape.v].push_back(i);
    if (lk.size() != ll.size()) return std::nullopt;
    for (auto& [shape, cells] : lk) {
        auto it = ll.find(shape);
        if (it == ll.end() || it->second.size() != cells.size()) return std::nullopt;
    }
    std::vector<int> order;  // k-cells by increasing degree
    for (int i = 0; i < k.cell_count(); ++i) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = cat->degree(k.cell(a).shape), db = cat->degree(k.cell(b).shape);
        return da != db ? da < db : a < b;
    });
    std::vector<int> img(k.cell_count(), -1), used(l.cell_count(), 0);
    auto compatible = [&](int a, int b) {
        const auto& faces = cat->faces_into(k.cell(a).shape);
        for (std::size_t s = 0; s < faces.size(); ++s) {
            Element ek = k.face_action(a, static_cast<int>(s));
            Element el = l.face_action(b, static_cast<int>(s));
            if (ek.sigma != el.sigma || img[ek.cell] != el.cell) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int a = order[pos];
        for (int b : ll.at(k.cell(a).shape.v)) {
            if (used[b] || !compatible(a, b)) continue;
            img[a] = b;
            used[b] = 1;
            if (go(pos + 1)) return true;
            img[a] = -1;
            used[b] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    std::vector<Element> images;
    for (int i = 0; i < k.cell_count(); ++i) images.push_back(l.cell_element(img[i]));
    return ComplexMap(k, l, std::move(images), false);
}

/// The unique map to the terminal presheaf ⟦a₀⟧ when a₀ has degree 0 and is
/// terminal-like (exactly one element per level), e.g. ⟦[0]⟧ or ⟦[1]^0⟧.
inline ComplexMap terminal_map(const CellComplex& k, const CellComplex& point) {
    std::vector<Element> img;
    for (int i = 0; i < k.cell_count(); ++i) {
        auto elems = point.elements_at(k.cell(i).shape);
        if (elems.size() != 1) throw InputError("terminal_map: target is not terminal");
        img.push_back(elems[0]);
    }
    return ComplexMap(k, point, std::move(img));
}

}  // namespace ezcat

#endif  // EZCAT_PRESHEAF_HPP
