// The box category: objects [1]^n for n ≤ bound. A morphism [1]^m → [1]^n is
// encoded per output coordinate as constant 0, constant 1, or the max of a
// nonempty block of input coordinates; blocks are pairwise disjoint and
// cross-ordered (every element of an earlier block precedes every element of
// a later one). The minimal variant restricts blocks to singletons, which
// recovers exactly the composites of faces and degeneracies; the variant with
// (positive) connections allows arbitrary blocks. Minus = block-only maps,
// plus = maps using every input once, in order, as a singleton.

#ifndef EZCAT_BOX_CAT_HPP
#define EZCAT_BOX_CAT_HPP

#include <unordered_map>

#include "ezcat/category.hpp"

namespace ezcat {

class BoxCat final : public EzCategory {
  public:
    struct Out {
        int cst = -1;            // 0 or 1 for constants, -1 for a block
        std::vector<int> blk;    // sorted input coordinates, 1-based
    };
    using Payload = std::vector<Out>;

    BoxCat(int bound, bool connections) : EzCategory(bound), connections_(connections) {
        for (int n = 0; n <= bound; ++n) add_object(n);
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; n <= bound; ++n) {
                Payload p;
                gen(ObjId{m}, ObjId{n}, m, n, 0, p);
            }
        finalize();
    }

    std::string kind() const override { return connections_ ? "boxc" : "box"; }
    bool has_connections() const { return connections_; }

    std::string object_token(ObjId a) const override {
        return "[1]^" + std::to_string(degree(a));
    }

    const Payload& outs(MorId m) const { return payload_[m.v]; }

    MorId lookup(ObjId d, ObjId c, const Payload& p) const {
        auto it = intern_.find(key(d, c, p));
        if (it == intern_.end()) throw std::invalid_argument("BoxCat::lookup: no such morphism");
        return it->second;
    }

    /// For a generating face d<i>^<e>, the pair (i, e) with i 1-based.
    std::pair<int, int> face_info(MorId m) const {
        const Payload& p = payload_[m.v];
        for (int j = 0; j < static_cast<int>(p.size()); ++j)
            if (p[j].cst >= 0) return {j + 1, p[j].cst};
        throw std::logic_error("face_info: not a face");
    }

    std::string generator_name(MorId m) const override {
        const Payload& p = payload_[m.v];
        int dd = degree(dom(m)), dc = degree(cod(m));
        if (is_plus(m) && dc == dd + 1) {  // face d<i>^<e>: the constant output
            for (int j = 0; j < dc; ++j)
                if (p[j].cst >= 0)
                    return "d" + std::to_string(j + 1) + "^" + std::to_string(p[j].cst);
        }
        if (is_minus(m) && dd == dc + 1) {
            int used = 0;
            for (const Out& o : p) used += static_cast<int>(o.blk.size());
            if (used == dd) {  // connection g<i>: the one block of size two
                for (const Out& o : p)
                    if (o.blk.size() == 2) return "g" + std::to_string(o.blk[0]);
            } else {  // degeneracy s<i>: the skipped input
                int expect = 1;
                for (const Out& o : p) {
                    if (o.blk[0] != expect) return "s" + std::to_string(expect);
                    ++expect;
                }
                return "s" + std::to_string(dd);
            }
        }
        throw std::logic_error("generator_name: not a generator");
    }

    std::string payload_token(MorId m) const override {
        std::string s = "(";
        const Payload& p = payload_[m.v];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) s += ",";
            if (p[j].cst >= 0) {
                s += std::to_string(p[j].cst);
            } else {
                for (std::size_t k = 0; k < p[j].blk.size(); ++k)
                    s += (k ? "v" : "x") + std::to_string(p[j].blk[k]);
            }
        }
        return s + ")";
    }

  protected:
    MorId compose_impl(MorId g, MorId f) const override {
        const Payload& pg = payload_[g.v];
        const Payload& pf = payload_[f.v];
        Payload r(pg.size());
        for (std::size_t k = 0; k < pg.size(); ++k) {
            if (pg[k].cst >= 0) {
                r[k].cst = pg[k].cst;
                continue;
            }
            bool one = false;
            std::vector<int> u;
            for (int j : pg[k].blk) {
                const Out& o = pf[j - 1];
                if (o.cst == 1) one = true;
                if (o.cst < 0) u.insert(u.end(), o.blk.begin(), o.blk.end());
            }
            if (one)
                r[k].cst = 1;
            else if (u.empty())
                r[k].cst = 0;
            else {
                std::sort(u.begin(), u.end());
                r[k].blk = std::move(u);
            }
        }
        return intern_.at(key(dom(f), cod(g), r));
    }

    std::pair<MorId, MorId> factorize_impl(MorId phi) const override {
        const Payload& p = payload_[phi.v];
        Payload pm, pp(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j].cst >= 0) {
                pp[j].cst = p[j].cst;
            } else {
                pp[j].blk = {static_cast<int>(pm.size()) + 1};
                pm.push_back(p[j]);
            }
        }
        ObjId mid{static_cast<int>(pm.size())};
        return {intern_.at(key(dom(phi), mid, pm)), intern_.at(key(mid, cod(phi), pp))};
    }

  private:
    bool connections_;
    std::vector<Payload> payload_;
    std::unordered_map<std::vector<int>, MorId, IntVecHash> intern_;

    static std::vector<int> key(ObjId d, ObjId c, const Payload& p) {
        std::vector<int> k{d.v, c.v};
        for (const Out& o : p) {
            if (o.cst >= 0) {
                k.push_back(-1 - o.cst);
            } else {
                k.push_back(static_cast<int>(o.blk.size()));
                k.insert(k.end(), o.blk.begin(), o.blk.end());
            }
        }
        return k;
    }

    // Enumerate outputs left to right; "lo" is one past the maximum input used
    // so far, which enforces the cross-ordering of blocks.
    void gen(ObjId d, ObjId c, int m, int n, int lo, Payload& p) {
        if (static_cast<int>(p.size()) == n) {
            add(d, c, p);
            return;
        }
        p.push_back(Out{0, {}});
        gen(d, c, m, n, lo, p);
        p.back().cst = 1;
        gen(d, c, m, n, lo, p);
        p.back().cst = -1;
        gen_blocks(d, c, m, n, lo + 1, p);
        p.pop_back();
    }

    void gen_blocks(ObjId d, ObjId c, int m, int n, int next, Payload& p) {
        for (int e = next; e <= m; ++e) {
            p.back().blk.push_back(e);
            gen(d, c, m, n, e, p);
            if (connections_) gen_blocks(d, c, m, n, e + 1, p);
            p.back().blk.pop_back();
        }
    }

    void add(ObjId d, ObjId c, const Payload& p) {
        bool minus = true;
        for (const Out& o : p)
            if (o.cst >= 0) minus = false;
        bool plus = true;  // singleton blocks covering every input in order
        int expect = 1;
        for (const Out& o : p) {
            if (o.cst >= 0) continue;
            if (o.blk.size() != 1 || o.blk[0] != expect) {
                plus = false;
                break;
            }
            ++expect;
        }
        if (plus && expect != degree(d) + 1) plus = false;
        bool is_id = d == c && minus && plus;
        MorId mid = add_morphism(d, c, minus, plus, is_id);
        payload_.push_back(p);
        intern_[key(d, c, p)] = mid;
    }
};

}  // namespace ezcat

#endif  // EZCAT_BOX_CAT_HPP
