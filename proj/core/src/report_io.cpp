#include "pmass/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace pmass::io {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json field_json(const LocalField& field) {
    Json j;
    j["p"] = field.p();
    j["f"] = field.f();
    if (field.e()) {
        j["e"] = *field.e();
    } else {
        j["e"] = "inf";
    }
    j["q"] = field.q().get_str();
    if (auto w = field.omega_coords()) {
        j["omega"] = Json::array({w->a, w->b});
    } else {
        j["omega"] = nullptr;
    }
    return j;
}

Json char_json(const CharClass& chi) {
    Json j;
    if (chi.coords) {
        j["coords"] = Json::array({chi.coords->a, chi.coords->b});
    } else {
        j["coords"] = nullptr;
    }
    j["vbar"] = chi.vbar;
    j["distinguished"] = chi.label();
    return j;
}

Json counts_json(const CountTable& table) {
    Json j = Json::object();
    for (const auto& [level, row] : table) {
        Json r;
        r["vbar"] = row.vbar;
        r["tres"] = row.tres;
        r["lines"] = row.lines.get_str();
        r["extensions"] = row.extensions.get_str();
        r["conjugacy_classes"] = row.conjugacy_classes.get_str();
        j[std::to_string(level)] = r;
    }
    return j;
}

Json record_json(const perm::SubgroupRecord& rec) {
    Json j;
    j["order"] = rec.order;
    j["transitive"] = rec.transitive;
    j["solvable"] = rec.solvable;
    j["abelian"] = rec.abelian;
    j["sylow_p_count"] = rec.sylow_p_count;
    if (rec.index_p_subgroup_count) {
        j["index_p_subgroup_count"] = *rec.index_p_subgroup_count;
    } else {
        j["index_p_subgroup_count"] = nullptr;
    }
    Json gens = Json::array();
    for (const perm::Perm& g : rec.generators) gens.push_back(g.str());
    j["generators"] = gens;
    return j;
}

}  // namespace

std::string to_json(const MassReport& report) {
    Json j;
    j["field"] = field_json(report.field);
    Json per_vbar = Json::object();
    for (std::size_t w = 0; w < report.per_vbar.size(); ++w) per_vbar[std::to_string(w)] = report.per_vbar[w].str();
    j["per_vbar"] = per_vbar;
    j["tres_extra"] = report.tres_extra.str();
    Json chars = Json::array();
    for (const auto& entry : report.per_character) {
        Json c = char_json(entry.chi);
        c["contribution"] = entry.contribution.str();
        chars.push_back(c);
    }
    j["characters"] = chars;
    if (report.split) {
        j["peu"] = report.split->peu.str();
        j["tres"] = report.split->tres.str();
    }
    j["total"] = report.total.str();
    j["grand_total"] = report.grand_total.str();
    if (report.counts) {
        j["counts"] = counts_json(*report.counts);
    } else {
        j["counts"] = nullptr;
    }
    j["degenerate"] = report.degenerate;
    return dump(j);
}

std::string to_json(const TameReport& r) {
    Json j;
    j["pprime"] = r.pprime;
    j["p"] = r.p;
    j["q"] = r.q.get_str();
    j["deg_kprime"] = r.deg_kprime;
    j["omega_trivial"] = r.omega_trivial;
    j["lines"] = r.lines.get_str();
    j["ramified_count"] = r.ramified_count.get_str();
    j["conjugacy_classes"] = r.conjugacy_classes.get_str();
    j["mass"] = r.mass.str();
    j["unramified_mass"] = r.unramified_mass.str();
    return dump(j);
}

std::string to_json(const FilteredLayout& layout) {
    Json j;
    j["field"] = field_json(layout.field);
    j["max_level"] = layout.max_level;
    j["total_dim"] = layout.total_dim();
    Json blocks = Json::array();
    for (const EigenBlock& b : layout.blocks) {
        Json x;
        x["level"] = b.level;
        x["vbar"] = b.vbar;
        x["dim"] = b.dim;
        x["distinguished"] = b.distinguished();
        blocks.push_back(x);
    }
    j["blocks"] = blocks;
    return dump(j);
}

std::string to_json(const ChecksumResult& result, int p, const Integer& q) {
    Json j;
    j["p"] = p;
    j["q"] = q.get_str();
    j["lhs"] = result.lhs.str();
    j["rhs"] = result.rhs.str();
    j["equal"] = result.lhs == result.rhs;
    j["total"] = result.total.str();
    return dump(j);
}

std::string to_json(const perm::NormalizerResult& normalizer, const perm::GaloisCriterionResult& criterion,
                    const perm::IndexPResult& index_p) {
    Json j;
    j["p"] = criterion.p;
    Json norm;
    norm["normalizer_order"] = normalizer.normalizer_order;
    norm["kernel_order"] = normalizer.kernel_order;
    norm["character_image"] = normalizer.character_image;
    norm["image_generator"] = normalizer.image_generator;
    norm["complement_order"] = normalizer.complement_order;
    j["normalizer"] = norm;
    Json crit;
    crit["exhaustive"] = criterion.exhaustive;
    crit["scope"] = criterion.scope;
    Json groups = Json::array();
    for (const auto& rec : criterion.transitive) groups.push_back(record_json(rec));
    crit["transitive_subgroups"] = groups;
    j["solvability_criterion"] = crit;
    Json index_rows = Json::array();
    for (const auto& e : index_p.entries) {
        Json x;
        x["order"] = e.order;
        x["skipped_commutative"] = e.skipped_commutative;
        x["index_p_subgroups"] = e.index_p_subgroups;
        x["pairwise_trivial"] = e.pairwise_trivial;
        x["pairwise_generate"] = e.pairwise_generate;
        index_rows.push_back(x);
    }
    j["index_p_subgroups"] = index_rows;
    return dump(j);
}

std::string to_json(const std::vector<oracle::OracleComparison>& rows, const LocalField& field,
                    std::int64_t max_level) {
    Json j;
    j["field"] = field_json(field);
    j["max_level"] = max_level;
    Json arr = Json::array();
    bool all = true;
    for (const auto& row : rows) {
        Json c = char_json(row.chi);
        c["oracle"] = row.enumerated.str();
        c["formula"] = row.formula.str();
        c["full"] = row.full;
        c["agrees"] = row.agrees();
        all = all && row.agrees();
        arr.push_back(c);
    }
    j["characters"] = arr;
    j["all_agree"] = all;
    return dump(j);
}

std::string counts_to_json(const LocalField& field, const CountTable& table) {
    Json j;
    j["field"] = field_json(field);
    j["counts"] = counts_json(table);
    j["mass"] = mass_from_counts(field, table).str();
    return dump(j);
}

std::string filter_to_json(const LocalField& field, const std::string& filter_name,
                           const std::vector<CharClass>& chars, const Rational& contribution) {
    Json j;
    j["field"] = field_json(field);
    j["filter"] = filter_name;
    Json arr = Json::array();
    for (const CharClass& chi : chars) arr.push_back(char_json(chi));
    j["characters"] = arr;
    j["contribution"] = contribution.str();
    return dump(j);
}

std::string to_tsv(const CountTable& table) {
    std::ostringstream os;
    os << "vbar\tlevel\tlines\textensions\tconjugacy_classes\n";
    for (const auto& [level, row] : table) {
        os << row.vbar << '\t' << level << '\t' << row.lines.get_str() << '\t' << row.extensions.get_str() << '\t'
           << row.conjugacy_classes.get_str() << '\n';
    }
    return os.str();
}

std::string to_tsv(const MassReport& report) {
    std::ostringstream os;
    os << "a\tb\tvbar\tdistinguished\tcontribution\n";
    for (const auto& entry : report.per_character) {
        os << entry.chi.coords->a << '\t' << entry.chi.coords->b << '\t' << entry.chi.vbar << '\t'
           << entry.chi.label() << '\t' << entry.contribution << '\n';
    }
    return os.str();
}

std::string to_tsv(const FilteredLayout& layout) {
    std::ostringstream os;
    os << "level\tvbar\tdim\tdistinguished\n";
    for (const EigenBlock& b : layout.blocks) {
        os << b.level << '\t' << b.vbar << '\t' << b.dim << '\t' << b.distinguished() << '\n';
    }
    return os.str();
}

std::string to_text(const MassReport& report) {
    std::ostringstream os;
    os << "field " << report.field.describe() << " (q=" << report.field.q().get_str() << ")\n";
    for (std::size_t w = 0; w < report.per_vbar.size(); ++w) {
        os << "  one character of valuation " << w << ": " << report.per_vbar[w] << '\n';
    }
    if (report.split) {
        os << "  peu ramifiees: " << report.split->peu << "\n  tres ramifiees: " << report.split->tres << '\n';
    }
    os << "  ramified mass: " << report.total << "\n  with the unramified extension: " << report.grand_total
       << '\n';
    return os.str();
}

std::string to_text(const TameReport& r) {
    std::ostringstream os;
    os << "degree " << r.pprime << " over residue field of order " << r.q.get_str() << ": [K':F] = " << r.deg_kprime
       << (r.omega_trivial ? ", omega' trivial\n" : ", omega' non-trivial\n");
    os << "  ramified extensions: " << r.ramified_count.get_str() << " in " << r.conjugacy_classes.get_str()
       << " conjugacy class(es)\n  mass: " << r.mass << '\n';
    return os.str();
}

}  // namespace pmass::io
