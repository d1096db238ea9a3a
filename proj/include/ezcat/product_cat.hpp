// Product of two EZ category instances. Objects are pairs within the product
// degree bound, morphisms are pairs of morphisms, the minus/plus classes and
// Reedy factorization are componentwise, and the degree of a pair is the sum
// of the factor degrees.

#ifndef EZCAT_PRODUCT_CAT_HPP
#define EZCAT_PRODUCT_CAT_HPP

#include <algorithm>
#include <unordered_map>

#include "ezcat/category.hpp"

namespace ezcat {

class ProductCat final : public EzCategory {
  public:
    ProductCat(Cat left, Cat right, int bound)
        : EzCategory(bound), left_(std::move(left)), right_(std::move(right)) {
        std::vector<std::tuple<int, int, int>> objs;  // (degree, l, r)
        for (int l = 0; l < left_->object_count(); ++l)
            for (int r = 0; r < right_->object_count(); ++r) {
                int d = left_->degree(ObjId{l}) + right_->degree(ObjId{r});
                if (d <= bound) objs.emplace_back(d, l, r);
            }
        std::sort(objs.begin(), objs.end());
        for (auto [d, l, r] : objs) {
            ObjId id = add_object(d);
            obj_pair_.push_back({ObjId{l}, ObjId{r}});
            obj_intern_[{l, r}] = id;
        }
        for (int a = 0; a < object_count(); ++a)
            for (int b = 0; b < object_count(); ++b) {
                auto [al, ar] = obj_pair_[a];
                auto [bl, br] = obj_pair_[b];
                for (MorId f : left_->hom(al, bl))
                    for (MorId g : right_->hom(ar, br)) {
                        MorId m = add_morphism(
                            ObjId{a}, ObjId{b}, left_->is_minus(f) && right_->is_minus(g),
                            left_->is_plus(f) && right_->is_plus(g),
                            left_->is_identity(f) && right_->is_identity(g));
                        mor_pair_.push_back({f, g});
                        mor_intern_[{f.v, g.v}] = m;
                    }
            }
        finalize();
    }

    std::string kind() const override {
        return "product:" + left_->kind() + "@" + std::to_string(left_->bound()) + "," +
               right_->kind() + "@" + std::to_string(right_->bound());
    }

    const ProductCat* as_product() const override { return this; }

    const Cat& left() const { return left_; }
    const Cat& right() const { return right_; }

    std::pair<ObjId, ObjId> factors(ObjId a) const { return obj_pair_[a.v]; }
    std::pair<MorId, MorId> mor_factors(MorId m) const { return mor_pair_[m.v]; }

    ObjId pair_object(ObjId l, ObjId r) const {
        auto it = obj_intern_.find({l.v, r.v});
        if (it == obj_intern_.end())
            throw BoundError("object pair exceeds the product degree bound",
                             left_->degree(l) + right_->degree(r));
        return it->second;
    }

    MorId pair_morphism(MorId f, MorId g) const { return mor_intern_.at({f.v, g.v}); }

    std::string object_token(ObjId a) const override {
        auto [l, r] = obj_pair_[a.v];
        return "(" + left_->object_token(l) + "," + right_->object_token(r) + ")";
    }

    std::string generator_name(MorId m) const override {
        auto [f, g] = mor_pair_[m.v];
        if (!left_->is_identity(f) && right_->is_identity(g)) return "L:" + left_->generator_name(f);
        if (left_->is_identity(f) && !right_->is_identity(g)) return "R:" + right_->generator_name(g);
        throw std::logic_error("generator_name: not a one-sided generator");
    }

    std::string payload_token(MorId m) const override {
        auto [f, g] = mor_pair_[m.v];
        return "(" + left_->payload_token(f) + ";" + right_->payload_token(g) + ")";
    }

  protected:
    MorId compose_impl(MorId g, MorId f) const override {
        auto [gl, gr] = mor_pair_[g.v];
        auto [fl, fr] = mor_pair_[f.v];
        return mor_intern_.at({left_->compose(gl, fl).v, right_->compose(gr, fr).v});
    }

    std::pair<MorId, MorId> factorize_impl(MorId phi) const override {
        auto [l, r] = mor_pair_[phi.v];
        auto [lm, lp] = left_->reedy_factorize(l);
        auto [rm, rp] = right_->reedy_factorize(r);
        return {mor_intern_.at({lm.v, rm.v}), mor_intern_.at({lp.v, rp.v})};
    }

  private:
    Cat left_, right_;
    std::vector<std::pair<ObjId, ObjId>> obj_pair_;
    std::vector<std::pair<MorId, MorId>> mor_pair_;
    std::unordered_map<std::pair<int, int>, ObjId, IntPairHash> obj_intern_;
    std::unordered_map<std::pair<int, int>, MorId, IntPairHash> mor_intern_;
};

}  // namespace ezcat

#endif  // EZCAT_PRODUCT_CAT_HPP
