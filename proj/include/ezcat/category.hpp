// Finite, enumerated Eilenberg-Zilber category instances.
//
// A category instance owns immutable object/morphism tables truncated to a
// degree bound. Objects and morphisms are addressed by table indices; the
// concrete encodings (monotone maps, box coordinate assignments, pairs,
// slice triangles) live in the derived classes, which supply composition and
// Reedy factorization. Everything else (hom enumeration, sections, latching
// categories, canonical degeneracy words) is generic.

#ifndef EZCAT_CATEGORY_HPP
#define EZCAT_CATEGORY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ezcat/core.hpp"

namespace ezcat {

class EzCategory;
using Cat = std::shared_ptr<const EzCategory>;

class ProductCat;
class SliceCat;

class EzCategory {
  public:
    virtual ~EzCategory() = default;

    /// Canonical instance token as used by the CLI and file headers,
    /// e.g. "simplex", "boxc", "product:simplex@2,simplex@2".
    virtual std::string kind() const = 0;

    int bound() const { return bound_; }

    /// Structural identity: same construction, same truncation.
    std::string signature() const { return kind() + "@" + std::to_string(bound_); }
    bool same_as(const EzCategory& o) const { return this == &o || signature() == o.signature(); }

    int object_count() const { return static_cast<int>(obj_degree_.size()); }
    int degree(ObjId a) const { return obj_degree_[a.v]; }
    const std::vector<ObjId>& objects_of_degree(int d) const {
        static const std::vector<ObjId> kEmpty;
        if (d < 0 || d >= static_cast<int>(by_degree_.size())) return kEmpty;
        return by_degree_[d];
    }

    int morphism_count() const { return static_cast<int>(mors_.size()); }
    ObjId dom(MorId m) const { return mors_[m.v].dom; }
    ObjId cod(MorId m) const { return mors_[m.v].cod; }
    bool is_minus(MorId m) const { return mors_[m.v].minus; }
    bool is_plus(MorId m) const { return mors_[m.v].plus; }
    bool is_identity(MorId m) const { return identity_[mors_[m.v].dom.v] == m; }
    MorId identity(ObjId a) const { return identity_[a.v]; }

    /// Complete, duplicate-free enumeration of arrows from → to, in canonical
    /// (payload-lexicographic) order.
    const std::vector<MorId>& hom(ObjId from, ObjId to) const {
        return hom_[from.v * object_count() + to.v];
    }

    MorId compose(MorId g, MorId f) const {
        if (cod(f) != dom(g)) throw std::invalid_argument("compose: codomain/domain mismatch");
        if (!compose_cache_.empty())
            return compose_cache_[static_cast<std::size_t>(g.v) * morphism_count() + f.v];
        return compose_impl(g, f);
    }

    /// The unique (minus, plus) pair with plus ∘ minus = phi.
    std::pair<MorId, MorId> reedy_factorize(MorId phi) const { return factorize_impl(phi); }

    /// Codegree-1 plus arrows into b (the generating faces).
    const std::vector<MorId>& faces_into(ObjId b) const { return faces_into_[b.v]; }

    /// Position of a face within faces_into(cod(face)).
    int face_slot(MorId face) const {
        int s = face_slot_[face.v];
        if (s < 0) throw std::invalid_argument("face_slot: not a generating face");
        return s;
    }

    /// For a non-identity plus arrow rho, a splitting rho = face ∘ rest with
    /// rest ∈ A₊ (always exists; fixed once at construction).
    std::pair<MorId, MorId> plus_split(MorId rho) const {
        auto s = plus_split_[rho.v];
        if (s.first.v < 0) throw std::invalid_argument("plus_split: not a non-identity plus arrow");
        return s;
    }

    /// Non-identity minus arrows out of a.
    const std::vector<MorId>& minus_out(ObjId a) const { return minus_out_[a.v]; }

    /// Degree-drop-1 minus arrows out of a (the generating degeneracies,
    /// including connections for the box variant that has them).
    const std::vector<MorId>& minus_generators_out(ObjId a) const { return minus_gens_[a.v]; }

    /// All s with sigma ∘ s = id; requires sigma ∈ A₋.
    std::vector<MorId> sections(MorId sigma) const {
        if (!is_minus(sigma)) throw std::invalid_argument("sections: morphism is not in the minus class");
        std::vector<MorId> out;
        for (MorId s : hom(cod(sigma), dom(sigma)))
            if (compose(sigma, s) == identity(cod(sigma))) out.push_back(s);
        return out;
    }

    struct LatchingCategory {
        std::vector<MorId> objects;  // non-identity sigma: a → b in A₋
        // (from, to, tau): non-identity tau ∈ A₋ with tau ∘ objects[from] = objects[to]
        std::vector<std::tuple<int, int, MorId>> arrows;
    };

    LatchingCategory latching_category(ObjId a) const {
        LatchingCategory lc;
        lc.objects = minus_out(a);
        std::map<MorId, int> index;
        for (int i = 0; i < static_cast<int>(lc.objects.size()); ++i) index[lc.objects[i]] = i;
        for (int i = 0; i < static_cast<int>(lc.objects.size()); ++i) {
            MorId s = lc.objects[i];
            for (MorId tau : minus_out(cod(s))) {
                MorId t = compose(tau, s);
                lc.arrows.emplace_back(i, index.at(t), tau);
            }
        }
        return lc;
    }

    // ---- tokens -----------------------------------------------------------

    virtual std::string object_token(ObjId) const = 0;
    virtual std::string generator_name(MorId) const = 0;  // faces and minus generators
    virtual std::string payload_token(MorId) const = 0;   // display only

    std::optional<ObjId> parse_object(const std::string& tok) const {
        auto it = object_by_token_.find(tok);
        if (it == object_by_token_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<MorId> parse_face(const std::string& name, ObjId into) const {
        auto it = face_by_name_[into.v].find(name);
        if (it == face_by_name_[into.v].end()) return std::nullopt;
        return it->second;
    }

    /// Canonical word in minus generators for sigma ∈ A₋, leftmost generator
    /// applied first; "id" for identities.
    std::string minus_word(MorId sigma) const {
        if (!is_minus(sigma)) throw std::invalid_argument("minus_word: not a minus morphism");
        if (is_identity(sigma)) return "id";
        std::string word;
        MorId rest = sigma;
        while (!is_identity(rest)) {
            bool found = false;
            for (MorId g : minus_generators_out(dom(rest))) {
                for (MorId r2 : hom(cod(g), cod(rest))) {
                    if (is_minus(r2) && compose(r2, g) == rest) {
                        if (!word.empty()) word += '.';
                        word += generator_name(g);
                        rest = r2;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) throw Error("minus_word: morphism does not factor through a generator");
        }
        return word;
    }

    std::optional<MorId> parse_minus_word(const std::string& word, ObjId domain) const {
        MorId acc = identity(domain);
        if (word == "id") return acc;
        std::size_t pos = 0;
        while (pos <= word.size()) {
            std::size_t dot = word.find('.', pos);
            std::string name = word.substr(pos, dot == std::string::npos ? dot : dot - pos);
            auto it = minus_gen_by_name_[cod(acc).v].find(name);
            if (it == minus_gen_by_name_[cod(acc).v].end()) return std::nullopt;
            acc = compose(it->second, acc);
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
        return acc;
    }

    // Narrow casts used by the bipresheaf/diagonal layers.
    virtual const ProductCat* as_product() const { return nullptr; }
    virtual const SliceCat* as_slice() const { return nullptr; }

  protected:
    explicit EzCategory(int bound) : bound_(bound) {
        if (bound < 0) throw std::invalid_argument("degree bound must be non-negative");
    }

    ObjId add_object(int deg) {
        ObjId id{object_count()};
        obj_degree_.push_back(deg);
        if (deg >= static_cast<int>(by_degree_.size())) by_degree_.resize(deg + 1);
        by_degree_[deg].push_back(id);
        return id;
    }

    MorId add_morphism(ObjId d, ObjId c, bool minus, bool plus, bool is_id) {
        MorId id{morphism_count()};
        mors_.push_back({d, c, minus, plus});
        hom_staging_.emplace_back(d, c, id);
        if (is_id) {
            if (identity_.size() <= static_cast<std::size_t>(d.v)) identity_.resize(d.v + 1);
            identity_[d.v] = id;
        }
        return id;
    }

    /// Build the derived lookup tables; call at the end of construction.
    void finalize() {
        const int no = object_count();
        hom_.assign(static_cast<std::size_t>(no) * no, {});
        for (auto& [d, c, id] : hom_staging_) hom_[d.v * no + c.v].push_back(id);
        hom_staging_.clear();
        faces_into_.assign(no, {});
        minus_out_.assign(no, {});
        minus_gens_.assign(no, {});
        for (int mv = 0; mv < morphism_count(); ++mv) {
            MorId m{mv};
            if (is_identity(m)) continue;
            int dd = degree(dom(m)), dc = degree(cod(m));
            if (is_plus(m) && dc == dd + 1) faces_into_[cod(m).v].push_back(m);
            if (is_minus(m)) {
                minus_out_[dom(m).v].push_back(m);
                if (dd == dc + 1) minus_gens_[dom(m).v].push_back(m);
            }
        }
        object_by_token_.clear();
        for (int ov = 0; ov < no; ++ov) object_by_token_[object_token(ObjId{ov})] = ObjId{ov};
        face_by_name_.assign(no, {});
        minus_gen_by_name_.assign(no, {});
        for (int ov = 0; ov < no; ++ov) {
            for (MorId f : faces_into_[ov]) face_by_name_[ov][generator_name(f)] = f;
            for (MorId g : minus_gens_[ov]) minus_gen_by_name_[ov][generator_name(g)] = g;
        }
        face_slot_.assign(morphism_count(), -1);
        for (int ov = 0; ov < no; ++ov)
            for (int s = 0; s < static_cast<int>(faces_into_[ov].size()); ++s)
                face_slot_[faces_into_[ov][s].v] = s;
        plus_split_.assign(morphism_count(), {MorId{}, MorId{}});
        std::vector<std::vector<MorId>> plus_hom(static_cast<std::size_t>(no) * no);
        for (int mv = 0; mv < morphism_count(); ++mv)
            if (is_plus(MorId{mv}))
                plus_hom[dom(MorId{mv}).v * no + cod(MorId{mv}).v].push_back(MorId{mv});
        for (int mv = 0; mv < morphism_count(); ++mv) {
            MorId rho{mv};
            if (!is_plus(rho) || is_identity(rho)) continue;
            bool found = false;
            for (MorId face : faces_into_[cod(rho).v]) {
                for (MorId rest : plus_hom[dom(rho).v * no + dom(face).v]) {
                    if (compose_impl(face, rest) == rho) {
                        plus_split_[mv] = {face, rest};
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) throw std::logic_error("plus arrow does not factor through a face");
        }
        // dense composition table for small instances; sweeps and colimit
        // closures are composition-heavy
        const int nm = morphism_count();
        if (nm > 0 && nm <= 4000) {
            compose_cache_.assign(static_cast<std::size_t>(nm) * nm, MorId{});
            for (int gv = 0; gv < nm; ++gv)
                for (int fv = 0; fv < nm; ++fv)
                    if (cod(MorId{fv}) == dom(MorId{gv}))
                        compose_cache_[static_cast<std::size_t>(gv) * nm + fv] =
                            compose_impl(MorId{gv}, MorId{fv});
        }
    }

    virtual MorId compose_impl(MorId g, MorId f) const = 0;
    virtual std::pair<MorId, MorId> factorize_impl(MorId) const = 0;

  private:
    struct MorRec {
        ObjId dom, cod;
        bool minus, plus;
    };

    int bound_;
    std::vector<int> obj_degree_;
    std::vector<std::vector<ObjId>> by_degree_;
    std::vector<MorRec> mors_;
    std::vector<MorId> identity_;
    std::vector<std::vector<MorId>> hom_;
    std::vector<std::tuple<ObjId, ObjId, MorId>> hom_staging_;
    std::vector<std::vector<MorId>> faces_into_;
    std::vector<std::vector<MorId>> minus_out_;
    std::vector<std::vector<MorId>> minus_gens_;
    std::vector<int> face_slot_;
    std::vector<std::pair<MorId, MorId>> plus_split_;
    std::map<std::string, ObjId> object_by_token_;
    std::vector<std::map<std::string, MorId>> face_by_name_;
    std::vector<std::map<std::string, MorId>> minus_gen_by_name_;
    std::vector<MorId> compose_cache_;
};

}  // namespace ezcat

#endif  // EZCAT_CATEGORY_HPP
