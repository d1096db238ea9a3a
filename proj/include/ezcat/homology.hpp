// Integral homology of presheaves over the simplex and box bases, through
// normalized chains (free on the non-degenerate cells, degenerate faces
// dropped) and Smith normal form, plus the homology-equivalence test for maps
// used as the computable stand-in for weak equivalence.

#ifndef EZCAT_HOMOLOGY_HPP
#define EZCAT_HOMOLOGY_HPP

#include "ezcat/box_cat.hpp"
#include "ezcat/linalg.hpp"
#include "ezcat/presheaf.hpp"
#include "ezcat/simplex_cat.hpp"

namespace ezcat {

struct ChainComplex {
    int top = -1;
    std::vector<std::vector<int>> basis;  // per degree: cell indices
    std::vector<MatZ> d;                  // d[n] : C_n → C_{n-1}; d[0] has 0 rows

    const MatZ& boundary(int n) const { return d[n]; }
};

/// Normalized chains: the simplex differential is the alternating face sum,
/// the box differential is sum_i (-1)^i (d_i^1 - d_i^0); faces with degenerate
/// normal forms drop out. d∘d = 0 is verified on construction.
inline ChainComplex chain_complex(const CellComplex& k) {
    const Cat& cat = k.category();
    const auto* sx = dynamic_cast<const SimplexCat*>(cat.get());
    const auto* bx = dynamic_cast<const BoxCat*>(cat.get());
    if (!sx && !bx)
        throw UnsupportedBaseError("homology is defined over the simplex and box bases only (got " +
                                   cat->kind() + ")");
    ChainComplex ch;
    ch.top = k.max_degree();
    ch.basis.resize(ch.top + 1);
    std::vector<int> pos(k.cell_count());
    for (int i = 0; i < k.cell_count(); ++i) {
        int deg = cat->degree(k.cell(i).shape);
        pos[i] = static_cast<int>(ch.basis[deg].size());
        ch.basis[deg].push_back(i);
    }
    ch.d.resize(ch.top + 1);
    for (int n = 0; n <= ch.top; ++n) {
        int rows = n > 0 ? static_cast<int>(ch.basis[n - 1].size()) : 0;
        ch.d[n] = MatZ(rows, static_cast<int>(ch.basis[n].size()));
        if (n == 0) continue;
        for (int col = 0; col < static_cast<int>(ch.basis[n].size()); ++col) {
            int cell = ch.basis[n][col];
            const auto& faces = cat->faces_into(k.cell(cell).shape);
            for (std::size_t s = 0; s < faces.size(); ++s) {
                Element e = k.face_action(cell, static_cast<int>(s));
                if (!cat->is_identity(e.sigma)) continue;  // degenerate face drops
                long long sign;
                if (sx) {
                    sign = sx->face_index(faces[s]) % 2 == 0 ? 1 : -1;
                } else {
                    auto [i, eps] = bx->face_info(faces[s]);
                    sign = (i % 2 == 0 ? 1 : -1) * (eps == 1 ? 1 : -1);
                }
                ch.d[n].at(pos[e.cell], col) += BigInt(sign);
            }
        }
    }
    for (int n = 1; n < ch.top; ++n)
        if (!(ch.d[n] * ch.d[n + 1]).is_zero())
            throw Error("chain_complex: d∘d != 0");
    return ch;
}

struct HomologyGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // coefficients > 1 in divisibility order
    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
};

using HomologySummary = std::vector<HomologyGroup>;  // degrees 0..top

inline HomologySummary homology(const ChainComplex& ch) {
    HomologySummary out(ch.top + 1);
    std::vector<int> r(ch.top + 2, 0);
    std::vector<std::vector<BigInt>> factors(ch.top + 2);
    for (int n = 0; n <= ch.top; ++n) {
        SmithResult s = smith_normal_form(ch.d[n]);
        r[n] = s.rank;
        factors[n] = s.factors;
    }
    for (int n = 0; n <= ch.top; ++n) {
        out[n].rank = static_cast<int>(ch.basis[n].size()) - r[n] - r[n + 1];
        for (const BigInt& f : factors[n + 1])
            if (!(f == BigInt(1))) out[n].torsion.push_back(f);
    }
    return out;
}

inline HomologySummary homology(const CellComplex& k) { return homology(chain_complex(k)); }

inline std::string to_string(const HomologySummary& h) {
    std::string s;
    for (std::size_t n = 0; n < h.size(); ++n) {
        s += "H_" + std::to_string(n) + " = ";
        if (h[n].rank == 0 && h[n].torsion.empty()) {
            s += "0";
        } else {
            s += "Z^" + std::to_string(h[n].rank);
            for (const BigInt& t : h[n].torsion) s += " + Z/" + t.str();
        }
        s += "\n";
    }
    if (h.empty()) s = "trivial (empty complex)\n";
    return s;
}

inline long long euler_characteristic(const ChainComplex& ch) {
    long long e = 0;
    for (int n = 0; n <= ch.top; ++n)
        e += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(ch.basis[n].size());
    return e;
}

inline long long euler_characteristic(const HomologySummary& h) {
    long long e = 0;
    for (std::size_t n = 0; n < h.size(); ++n)
        e += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(h[n].rank);
    return e;
}

namespace detail {

inline int chain_dim(const ChainComplex& ch, int n) {
    return n >= 0 && n <= ch.top ? static_cast<int>(ch.basis[n].size()) : 0;
}

inline MatZ chain_d(const ChainComplex& ch, int n) {
    if (n >= 0 && n <= ch.top) return ch.d[n];
    return MatZ(chain_dim(ch, n - 1), chain_dim(ch, n));
}

}  // namespace detail

/// The induced chain map in each degree (degenerate images drop out), checked
/// to commute with the differentials.
inline std::vector<MatZ> chain_map(const ComplexMap& f, const ChainComplex& ck,
                                   const ChainComplex& cl) {
    const Cat& cat = f.source().category();
    int top = std::max(ck.top, cl.top);
    std::vector<int> posl(f.target().cell_count());
    for (int n = 0; n <= cl.top; ++n)
        for (int j = 0; j < static_cast<int>(cl.basis[n].size()); ++j)
            posl[cl.basis[n][j]] = j;
    std::vector<MatZ> fm(top + 1);
    for (int n = 0; n <= top; ++n) {
        fm[n] = MatZ(detail::chain_dim(cl, n), detail::chain_dim(ck, n));
        if (n > ck.top || n > cl.top) continue;
        for (int col = 0; col < fm[n].cols(); ++col) {
            Element e = f.cell_images()[ck.basis[n][col]];
            if (!cat->is_identity(e.sigma)) continue;
            fm[n].at(posl[e.cell], col) = 1;
        }
    }
    for (int n = 1; n <= top; ++n)
        if (!(detail::chain_d(cl, n) * fm[n] == fm[n - 1] * detail::chain_d(ck, n)))
            throw Error("chain_map: the map does not commute with the differentials");
    return fm;
}

namespace detail {

struct HomologyPresentation {
    MatZ cycles;   // columns: basis of the cycle lattice in degree n
    MatZ rels;     // boundaries expressed in that basis; H = coker(rels)
    HomologyGroup group;
};

inline HomologyPresentation presentation(const ChainComplex& ch, int n) {
    HomologyPresentation out;
    int cn = n <= ch.top ? static_cast<int>(ch.basis[n].size()) : 0;
    MatZ dn = n <= ch.top ? ch.d[n] : MatZ(0, cn);
    out.cycles = kernel_basis(dn);
    MatZ dn1 = n + 1 <= ch.top ? ch.d[n + 1]
                               : MatZ(cn, 0);
    auto expr = solve(out.cycles, dn1);
    if (!expr) throw Error("homology: boundaries are not cycles");
    out.rels = *expr;
    SmithResult s = smith_normal_form(out.rels);
    out.group.rank = out.cycles.cols() - s.rank;
    for (const BigInt& f : s.factors)
        if (!(f == BigInt(1))) out.group.torsion.push_back(f);
    return out;
}

}  // namespace detail

/// True iff the induced maps on integral homology are isomorphisms in every
/// degree. Finitely generated abelian groups are Hopfian, so equality of the
/// group invariants plus surjectivity of the induced map decides this exactly.
inline bool is_homology_equivalence(const ComplexMap& f) {
    ChainComplex ck = chain_complex(f.source());
    ChainComplex cl = chain_complex(f.target());
    std::vector<MatZ> fm = chain_map(f, ck, cl);
    int top = std::max(ck.top, cl.top);
    for (int n = 0; n <= top; ++n) {
        detail::HomologyPresentation pk = detail::presentation(ck, n);
        detail::HomologyPresentation pl = detail::presentation(cl, n);
        if (!(pk.group == pl.group)) return false;
        auto phi = solve(pl.cycles, fm[n] * pk.cycles);
        if (!phi) throw Error("is_homology_equivalence: image of a cycle is not a cycle");
        if (!coker_trivial(phi->hcat(pl.rels))) return false;
    }
    return true;
}

/// Homology cross-check used by the verification suites: the presentation
/// route must agree with the rank-count route.
inline HomologySummary homology_by_presentation(const CellComplex& k) {
    ChainComplex ch = chain_complex(k);
    HomologySummary out(ch.top + 1);
    for (int n = 0; n <= ch.top; ++n) out[n] = detail::presentation(ch, n).group;
    return out;
}

}  // namespace ezcat

#endif  // EZCAT_HOMOLOGY_HPP
