// Slice of an EZ category instance at a base object: objects are the arrows
// psi: b → basepoint, morphisms (psi1) → (psi2) are the base arrows h with
// psi2 ∘ h = psi1, and the EZ structure (degree, classes, factorization) is
// created from the arrow's domain side, where every base section of a minus
// arrow automatically respects the triangle.

#ifndef EZCAT_SLICE_CAT_HPP
#define EZCAT_SLICE_CAT_HPP

#include <unordered_map>

#include "ezcat/category.hpp"

namespace ezcat {

class SliceCat final : public EzCategory {
  public:
    SliceCat(Cat base, ObjId point, int bound)
        : EzCategory(bound), base_(std::move(base)), point_(point) {
        if (bound > base_->bound())
            throw BoundError("slice bound exceeds the base category bound", bound);
        for (int deg = 0; deg <= bound; ++deg)
            for (ObjId b : base_->objects_of_degree(deg)) {
                const auto& arrows = base_->hom(b, point_);
                for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
                    add_object(deg);
                    obj_arrow_.push_back(arrows[k]);
                    obj_index_.push_back(k);
                }
            }
        for (int a = 0; a < object_count(); ++a)
            for (int b = 0; b < object_count(); ++b) {
                MorId psi1 = obj_arrow_[a], psi2 = obj_arrow_[b];
                for (MorId h : base_->hom(base_->dom(psi1), base_->dom(psi2))) {
                    if (base_->compose(psi2, h) != psi1) continue;
                    MorId m = add_morphism(ObjId{a}, ObjId{b}, base_->is_minus(h),
                                           base_->is_plus(h),
                                           a == b && base_->is_identity(h));
                    mor_base_.push_back(h);
                    mor_intern_[{a * object_count() + b, h.v}] = m;
                }
            }
        finalize();
    }

    std::string kind() const override {
        return "slice:" + base_->kind() + "@" + std::to_string(base_->bound()) + "," +
               base_->object_token(point_);
    }

    const SliceCat* as_slice() const override { return this; }

    const Cat& base() const { return base_; }
    ObjId point() const { return point_; }
    MorId underlying_arrow(ObjId a) const { return obj_arrow_[a.v]; }
    MorId underlying(MorId m) const { return mor_base_[m.v]; }

    std::string object_token(ObjId a) const override {
        return base_->object_token(base_->dom(obj_arrow_[a.v])) + "/" +
               std::to_string(obj_index_[a.v]);
    }

    std::string generator_name(MorId m) const override {
        return base_->generator_name(mor_base_[m.v]);
    }

    std::string payload_token(MorId m) const override {
        return base_->payload_token(mor_base_[m.v]);
    }

  protected:
    MorId compose_impl(MorId g, MorId f) const override {
        MorId h = base_->compose(mor_base_[g.v], mor_base_[f.v]);
        return mor_intern_.at({dom(f).v * object_count() + cod(g).v, h.v});
    }

    std::pair<MorId, MorId> factorize_impl(MorId phi) const override {
        auto [hm, hp] = base_->reedy_factorize(mor_base_[phi.v]);
        MorId mid_arrow = base_->compose(obj_arrow_[cod(phi).v], hp);
        ObjId mid = object_of(mid_arrow);
        return {mor_intern_.at({dom(phi).v * object_count() + mid.v, hm.v}),
                mor_intern_.at({mid.v * object_count() + cod(phi).v, hp.v})};
    }

  private:
    Cat base_;
    ObjId point_;
    std::vector<MorId> obj_arrow_;  // per slice object: the base arrow b → point
    std::vector<int> obj_index_;    // its index within hom(b, point)
    std::vector<MorId> mor_base_;
    std::unordered_map<std::pair<int, int>, MorId, IntPairHash> mor_intern_;

    ObjId object_of(MorId arrow) const {
        for (int a = 0; a < object_count(); ++a)
            if (obj_arrow_[a] == arrow) return ObjId{a};
        throw std::logic_error("slice: arrow is not an object of the slice");
    }
};

}  // namespace ezcat

#endif  // EZCAT_SLICE_CAT_HPP
