#include "platy/tables.hpp"

#include <sstream>

namespace platy {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string line(const std::vector<std::string>& cols) {
    std::string s = join(cols, " | ");
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
}

}  // namespace

const std::vector<int>& table_numbers() {
    static const std::vector<int> v = {1, 3, 4, 11, 12, 13};
    return v;
}

std::string seifert_row(CosmType t) {
    return line({dictionary(t).our_name, tag(t), seifert_fibrations(t).row});
}

std::string surfaces_row(CosmType t) {
    std::vector<std::string> basal, perp;
    for (auto& f : surface_families(t)) (f.basal ? basal : perp).push_back(f.text());
    // the printed layout puts a lone group of families in the second column
    if (perp.empty()) return line({tag(t), "", join(basal, ", ")});
    return line({tag(t), join(basal, ", ") + ";", join(perp, ", ")});
}

std::string names_row(CosmType t) {
    auto& r = dictionary(t);
    return line({r.our_name, r.symbol, r.other_names, r.wolf});
}

std::string groups_row(CosmType t) {
    auto& r = dictionary(t);
    std::vector<std::string> intl;
    for (auto& s : r.international) {
        auto sp = s.find(' ');
        intl.push_back(s.substr(0, sp) + ". " + s.substr(sp + 1));
    }
    return line({r.symbol, r.cdht, join(intl, "; "), r.generators.empty() ? "---" : join(r.generators, "; ")});
}

std::string render_table(int n) {
    std::ostringstream out;
    switch (n) {
    case 1: {
        out << line({"conorms", "topological type of Voronoi cell", "shape of Delaunay cell", "lattice shape"});
        for (auto& r : flatland_catalog().lattices) out << line({r.conorms, r.voronoi, r.delaunay, r.shape});
        out << "(it is understood that A,B,C are distinct and non-zero.)\n";
        break;
    }
    case 3:
        for (auto t : all_cosm_types()) out << seifert_row(t);
        out << "The platycosms and their Seifert fibrations.\n";
        break;
    case 4:
        out << line({"platycosm", "families of surfaces"});
        for (auto t : all_cosm_types()) out << surfaces_row(t);
        out << "Those before a semicolon are images of basal planes, those after of perpendal ones.\n";
        break;
    case 11:
        out << line({"our name", "symbol", "other names", "Wolf"});
        for (auto t : all_cosm_types()) out << names_row(t);
        out << "Names and notations for platycosms.\n";
        break;
    case 12:
        out << line({"symbol", "CDHT", "internatl. no. name", "non-translation generators"});
        for (auto t : all_cosm_types()) out << groups_row(t);
        out << "Notations for space groups.\n";
        break;
    case 13:
        out << line({"our name", "symbol", "Wolf"});
        for (auto& r : infinite_catalog()) out << line({r.name, r.symbol, r.wolf});
        out << "Infinite platycosms.\n";
        break;
    default:
        throw DomainError("UnknownTable", "tables are 1, 3, 4, 11, 12, 13; got " + std::to_string(n));
    }
    return out.str();
}

}  // namespace platy
