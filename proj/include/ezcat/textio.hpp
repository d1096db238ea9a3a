// The line-oriented text format for complexes and maps.
//
//   # comment
//   category <instance-token> <degree-bound>
//   cell <id> : <shape-token>
//   act <id> <face> = <sigma-word> <id2>     (one line per generating face)
//   map <src-id> -> <sigma-word> <tgt-id>    (map files)
//
// Whitespace separated, order insensitive apart from the header coming first;
// cell order in the file is the cell order of the complex.

#ifndef EZCAT_TEXTIO_HPP
#define EZCAT_TEXTIO_HPP

#include <istream>
#include <ostream>
#include <sstream>

#include "ezcat/instances.hpp"
#include "ezcat/presheaf.hpp"

namespace ezcat {

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (!t.empty() && t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

}  // namespace detail

inline CellComplex read_complex(std::istream& in,
                                CellComplex::Check check = CellComplex::Check::faces) {
    Cat cat;
    std::vector<Cell> cells;
    std::map<std::string, int> cell_index;
    struct ActLine {
        int line;
        std::string id, face, sigma, id2;
    };
    std::vector<ActLine> acts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "category") {
            if (toks.size() != 3) throw InputError("category line needs a token and a bound", lineno);
            if (cat) throw InputError("duplicate category line", lineno);
            int bound;
            try {
                bound = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw InputError("bad degree bound '" + toks[2] + "'", lineno);
            }
            cat = make_category(toks[1], bound, lineno);
        } else if (toks[0] == "cell") {
            if (!cat) throw InputError("cell line before the category header", lineno);
            if (toks.size() != 4 || toks[2] != ":")
                throw InputError("expected: cell <id> : <shape>", lineno);
            auto shape = cat->parse_object(toks[3]);
            if (!shape) throw InputError("unknown shape '" + toks[3] + "'", lineno);
            if (cell_index.count(toks[1]))
                throw InputError("duplicate cell id '" + toks[1] + "'", lineno);
            cell_index[toks[1]] = static_cast<int>(cells.size());
            cells.push_back({toks[1], *shape});
        } else if (toks[0] == "act") {
            if (toks.size() != 6 || toks[3] != "=")
                throw InputError("expected: act <id> <face> = <sigma> <id2>", lineno);
            acts.push_back({lineno, toks[1], toks[2], toks[4], toks[5]});
        } else {
            throw InputError("unknown directive '" + toks[0] + "'", lineno);
        }
    }
    if (!cat) throw InputError("missing category header");
    std::vector<std::vector<Element>> actions(cells.size());
    std::vector<std::vector<char>> seen(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        actions[i].resize(cat->faces_into(cells[i].shape).size());
        seen[i].assign(actions[i].size(), 0);
    }
    for (const ActLine& a : acts) {
        auto it = cell_index.find(a.id);
        if (it == cell_index.end()) throw InputError("unknown cell '" + a.id + "'", a.line);
        int ci = it->second;
        auto face = cat->parse_face(a.face, cells[ci].shape);
        if (!face)
            throw InputError("unknown face '" + a.face + "' for shape " +
                                 cat->object_token(cells[ci].shape),
                             a.line);
        auto it2 = cell_index.find(a.id2);
        if (it2 == cell_index.end()) throw InputError("unknown cell '" + a.id2 + "'", a.line);
        auto sigma = cat->parse_minus_word(a.sigma, cat->dom(*face));
        if (!sigma) throw InputError("bad degeneracy word '" + a.sigma + "'", a.line);
        int slot = cat->face_slot(*face);
        if (seen[ci][slot]) throw InputError("duplicate action for this face", a.line);
        seen[ci][slot] = 1;
        actions[ci][slot] = {*sigma, it2->second};
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t s = 0; s < seen[i].size(); ++s)
            if (!seen[i][s])
                throw InputError("cell '" + cells[i].name + "' is missing the action of " +
                                 cat->generator_name(cat->faces_into(cells[i].shape)[s]));
    return CellComplex::make(cat, std::move(cells), std::move(actions), check);
}

inline void write_complex(std::ostream& out, const CellComplex& k) {
    const Cat& cat = k.category();
    out << "category " << cat->kind() << " " << cat->bound() << "\n";
    for (int i = 0; i < k.cell_count(); ++i)
        out << "cell " << k.cell(i).name << " : " << cat->object_token(k.cell(i).shape) << "\n";
    for (int i = 0; i < k.cell_count(); ++i) {
        const auto& faces = cat->faces_into(k.cell(i).shape);
        for (std::size_t s = 0; s < faces.size(); ++s) {
            Element e = k.face_action(i, static_cast<int>(s));
            out << "act " << k.cell(i).name << " " << cat->generator_name(faces[s]) << " = "
                << cat->minus_word(e.sigma) << " " << k.cell(e.cell).name << "\n";
        }
    }
}

inline std::string write_complex(const CellComplex& k) {
    std::ostringstream ss;
    write_complex(ss, k);
    return ss.str();
}

inline ComplexMap read_map(std::istream& in, const CellComplex& src, const CellComplex& tgt) {
    const Cat& cat = src.category();
    std::map<std::string, int> src_index, tgt_index;
    for (int i = 0; i < src.cell_count(); ++i) src_index[src.cell(i).name] = i;
    for (int i = 0; i < tgt.cell_count(); ++i) tgt_index[tgt.cell(i).name] = i;
    std::vector<Element> img(src.cell_count());
    std::vector<char> seen(src.cell_count(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] != "map" || toks.size() != 5 || toks[2] != "->")
            throw InputError("expected: map <src-id> -> <sigma> <tgt-id>", lineno);
        auto is = src_index.find(toks[1]);
        if (is == src_index.end()) throw InputError("unknown source cell '" + toks[1] + "'", lineno);
        auto it = tgt_index.find(toks[4]);
        if (it == tgt_index.end()) throw InputError("unknown target cell '" + toks[4] + "'", lineno);
        auto sigma = cat->parse_minus_word(toks[3], src.cell(is->second).shape);
        if (!sigma) throw InputError("bad degeneracy word '" + toks[3] + "'", lineno);
        if (seen[is->second]) throw InputError("duplicate map line for '" + toks[1] + "'", lineno);
        seen[is->second] = 1;
        img[is->second] = {*sigma, it->second};
    }
    for (int i = 0; i < src.cell_count(); ++i)
        if (!seen[i]) throw InputError("missing map line for cell '" + src.cell(i).name + "'");
    return ComplexMap(src, tgt, std::move(img));
}

inline void write_map(std::ostream& out, const ComplexMap& m) {
    const Cat& cat = m.source().category();
    for (int i = 0; i < m.source().cell_count(); ++i) {
        const Element& e = m.cell_images()[i];
        out << "map " << m.source().cell(i).name << " -> " << cat->minus_word(e.sigma) << " "
            << m.target().cell(e.cell).name << "\n";
    }
}

}  // namespace ezcat

#endif  // EZCAT_TEXTIO_HPP
