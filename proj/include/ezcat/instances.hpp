// Construction of category instances from their CLI/file tokens.

#ifndef EZCAT_INSTANCES_HPP
#define EZCAT_INSTANCES_HPP

#include "ezcat/box_cat.hpp"
#include "ezcat/product_cat.hpp"
#include "ezcat/simplex_cat.hpp"
#include "ezcat/slice_cat.hpp"

namespace ezcat {

inline Cat make_simplex(int bound) { return std::make_shared<SimplexCat>(bound); }
inline Cat make_box(int bound) { return std::make_shared<BoxCat>(bound, false); }
inline Cat make_boxc(int bound) { return std::make_shared<BoxCat>(bound, true); }

inline Cat make_product(Cat left, Cat right, int bound) {
    return std::make_shared<ProductCat>(std::move(left), std::move(right), bound);
}

inline Cat make_slice(Cat base, ObjId point, int bound) {
    return std::make_shared<SliceCat>(std::move(base), point, bound);
}

namespace detail {

// "simplex" or "simplex@4" → instance; default_bound applies without @.
inline Cat make_atomic(const std::string& tok, int default_bound, int line = 0) {
    std::string name = tok;
    int bound = default_bound;
    if (auto at = tok.find('@'); at != std::string::npos) {
        name = tok.substr(0, at);
        try {
            bound = std::stoi(tok.substr(at + 1));
        } catch (const std::exception&) {
            throw InputError("bad degree bound in category token '" + tok + "'", line);
        }
    }
    if (name == "simplex") return make_simplex(bound);
    if (name == "box") return make_box(bound);
    if (name == "boxc") return make_boxc(bound);
    throw InputError("unknown category kind '" + name + "'", line);
}

}  // namespace detail

/// Parse a category token: simplex | box | boxc | product:<f>,<f> |
/// slice:<base>,<object>. Factors accept an optional @D bound annotation and
/// default to the instance bound.
inline Cat make_category(const std::string& token, int bound, int line = 0) {
    if (token.rfind("product:", 0) == 0) {
        std::string rest = token.substr(8);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw InputError("product token needs two factors: '" + token + "'", line);
        Cat l = detail::make_atomic(rest.substr(0, comma), bound, line);
        Cat r = detail::make_atomic(rest.substr(comma + 1), bound, line);
        return make_product(std::move(l), std::move(r), bound);
    }
    if (token.rfind("slice:", 0) == 0) {
        std::string rest = token.substr(6);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw InputError("slice token needs a base and an object: '" + token + "'", line);
        Cat base = detail::make_atomic(rest.substr(0, comma), bound, line);
        std::string objtok = rest.substr(comma + 1);
        auto obj = base->parse_object(objtok);
        if (!obj) throw InputError("unknown base object '" + objtok + "' in slice token", line);
        return make_slice(std::move(base), *obj, bound);
    }
    return detail::make_atomic(token, bound, line);
}

}  // namespace ezcat

#endif  // EZCAT_INSTANCES_HPP
