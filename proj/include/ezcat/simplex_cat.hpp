// The simplex category: objects [m] for m ≤ bound, morphisms the monotone
// maps encoded as value vectors. Minus = surjections, plus = injections.

#ifndef EZCAT_SIMPLEX_CAT_HPP
#define EZCAT_SIMPLEX_CAT_HPP

#include <unordered_map>

#include "ezcat/category.hpp"

namespace ezcat {

class SimplexCat final : public EzCategory {
  public:
    explicit SimplexCat(int bound) : EzCategory(bound) {
        for (int m = 0; m <= bound; ++m) add_object(m);
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; n <= bound; ++n) {
                std::vector<int> v(m + 1, 0);
                // odometer over monotone vectors in lexicographic order
                while (true) {
                    add(ObjId{m}, ObjId{n}, v);
                    int i = m;
                    while (i >= 0 && v[i] == n) --i;
                    if (i < 0) break;
                    ++v[i];
                    for (int j = i + 1; j <= m; ++j) v[j] = v[i];
                }
            }
        finalize();
    }

    std::string kind() const override { return "simplex"; }

    std::string object_token(ObjId a) const override {
        return "[" + std::to_string(degree(a)) + "]";
    }

    const std::vector<int>& values(MorId m) const { return payload_[m.v]; }

    /// For a generating face, the skipped value i of d<i>.
    int face_index(MorId m) const {
        const auto& v = payload_[m.v];
        for (int j = 0; j < static_cast<int>(v.size()); ++j)
            if (v[j] != j) return j;
        return static_cast<int>(v.size());
    }

    /// Look up a monotone map by its value vector.
    MorId monotone(ObjId d, ObjId c, const std::vector<int>& v) const {
        auto it = intern_.find(key(d, c, v));
        if (it == intern_.end()) throw std::invalid_argument("monotone: no such morphism");
        return it->second;
    }

    std::string generator_name(MorId m) const override {
        const auto& v = payload_[m.v];
        int dd = degree(dom(m)), dc = degree(cod(m));
        if (is_plus(m) && dc == dd + 1) {  // face d<i>: the skipped value
            int i = dc;
            for (int j = 0; j <= dd; ++j)
                if (v[j] != j) {
                    i = j;
                    break;
                }
            return "d" + std::to_string(i);
        }
        if (is_minus(m) && dd == dc + 1) {  // degeneracy s<i>: the repeated value
            for (int j = 0; j < dd; ++j)
                if (v[j] == v[j + 1]) return "s" + std::to_string(v[j]);
        }
        throw std::logic_error("generator_name: not a generator");
    }

    std::string payload_token(MorId m) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < payload_[m.v].size(); ++i)
            s += (i ? "," : "") + std::to_string(payload_[m.v][i]);
        return s + ")";
    }

  protected:
    MorId compose_impl(MorId g, MorId f) const override {
        const auto& vg = payload_[g.v];
        const auto& vf = payload_[f.v];
        std::vector<int> v(vf.size());
        for (std::size_t i = 0; i < vf.size(); ++i) v[i] = vg[vf[i]];
        return intern_.at(key(dom(f), cod(g), v));
    }

    std::pair<MorId, MorId> factorize_impl(MorId phi) const override {
        const auto& v = payload_[phi.v];
        std::vector<int> image;
        for (int x : v)
            if (image.empty() || image.back() != x) image.push_back(x);
        std::vector<int> vm(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            vm[i] = static_cast<int>(std::lower_bound(image.begin(), image.end(), v[i]) -
                                     image.begin());
        ObjId mid{static_cast<int>(image.size()) - 1};
        return {intern_.at(key(dom(phi), mid, vm)), intern_.at(key(mid, cod(phi), image))};
    }

  private:
    std::vector<std::vector<int>> payload_;
    std::unordered_map<std::vector<int>, MorId, IntVecHash> intern_;

    static std::vector<int> key(ObjId d, ObjId c, const std::vector<int>& v) {
        std::vector<int> k;
        k.reserve(v.size() + 2);
        k.push_back(d.v);
        k.push_back(c.v);
        k.insert(k.end(), v.begin(), v.end());
        return k;
    }

    void add(ObjId d, ObjId c, const std::vector<int>& v) {
        const int n = degree(c);
        bool surj = v.front() == 0 && v.back() == n;
        for (std::size_t i = 0; surj && i + 1 < v.size(); ++i)
            if (v[i + 1] - v[i] > 1) surj = false;
        bool inj = true;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i + 1] <= v[i]) inj = false;
        bool is_id = d == c;
        for (std::size_t i = 0; is_id && i < v.size(); ++i)
            if (v[i] != static_cast<int>(i)) is_id = false;
        MorId m = add_morphism(d, c, surj, inj, is_id);
        payload_.push_back(v);
        intern_[key(d, c, v)] = m;
    }
};

}  // namespace ezcat

#endif  // EZCAT_SIMPLEX_CAT_HPP
