#include "pmass/cli.hpp"

#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pmass/errors.hpp"
#include "pmass/report_io.hpp"

namespace pmass::cli {

namespace {

enum class Format { Json, Tsv, Text };

struct Options {
    int p = 0;
    int f = 1;
    std::string e;
    std::optional<int> pprime;
    std::optional<int> vbar;
    std::optional<int> omega_a;
    std::optional<int> omega_b;
    std::optional<std::string> filter;
    std::optional<std::int64_t> max_level;
    Format format = Format::Json;
};

void add_format(CLI::App* cmd, Options& o) {
    const std::map<std::string, Format> names{{"json", Format::Json}, {"tsv", Format::Tsv}, {"text", Format::Text}};
    cmd->add_option("--format", o.format, "json, tsv or text")->transform(CLI::CheckedTransformer(names));
}

void add_field(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "residue characteristic")->required();
    cmd->add_option("--f", o.f, "residue degree")->capture_default_str();
    cmd->add_option("--e", o.e, "absolute ramification index, or inf for characteristic p")->required();
    cmd->add_option("--omega-a", o.omega_a, "valuation coordinate of omega");
    cmd->add_option("--omega-b", o.omega_b, "unit coordinate of omega");
    add_format(cmd, o);
}

LocalField make_field(const Options& o) {
    if (o.e == "inf") {
        if (o.omega_a || o.omega_b) throw InvalidParameter("omega is trivial in characteristic p");
        return LocalField::equal_char(o.p, o.f);
    }
    int e = 0;
    try {
        std::size_t used = 0;
        e = std::stoi(o.e, &used);
        if (used != o.e.size()) throw std::invalid_argument(o.e);
    } catch (const std::logic_error&) {
        throw InvalidParameter("--e must be a positive integer or inf, got '" + o.e + "'");
    }
    if (e < 1) throw InvalidParameter("--e must be a positive integer or inf, got '" + o.e + "'");
    std::optional<CharCoords> omega;
    if (o.omega_a || o.omega_b) omega = CharCoords{o.omega_a.value_or(e), o.omega_b.value_or(0)};
    return LocalField::mixed(o.p, o.f, e, omega);
}

Integer residue_order(int p, int f) {
    if (!is_prime(p)) throw InvalidParameter("p must be prime, got " + std::to_string(p));
    if (f < 1 || f > 256) throw InvalidParameter("f must lie in [1, 256]");
    return int_pow(Integer(p), static_cast<std::uint64_t>(f));
}

ClosureFilter parse_filter(const std::string& spec) {
    if (spec == "cyclic") return filter::Cyclic{};
    if (spec == "unramified-closure") return filter::UnramifiedClosure{};
    const std::string prefix = "group-order=";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string digits = spec.substr(prefix.size());
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 9) {
            return filter::GroupOrder{std::stoi(digits)};
        }
    }
    throw InvalidParameter("unknown filter '" + spec + "'; use cyclic, unramified-closure or group-order=N");
}

std::string chars_tsv(const std::vector<CharClass>& chars, const LocalField& field) {
    std::ostringstream os;
    os << "a\tb\tvbar\tdistinguished\tcontribution\n";
    for (const CharClass& chi : chars) {
        os << (chi.coords ? std::to_string(chi.coords->a) : "-") << '\t'
           << (chi.coords ? std::to_string(chi.coords->b) : "-") << '\t' << chi.vbar << '\t' << chi.label() << '\t'
           << char_contribution(field, chi) << '\n';
    }
    return os.str();
}

std::string cmd_structure(const Options& o) {
    const FilteredLayout l = layout(make_field(o), o.max_level);
    return o.format == Format::Json ? io::to_json(l) : io::to_tsv(l);
}

std::string cmd_mass(const Options& o) {
    const LocalField field = make_field(o);
    if (o.filter || o.vbar) {
        if (o.filter && o.vbar) throw InvalidParameter("--filter and --vbar are exclusive");
        std::vector<CharClass> chars;
        std::string name;
        if (o.filter) {
            chars = qualifying_chars(field, parse_filter(*o.filter));
            name = *o.filter;
        } else {
            const int w = *o.vbar;
            if (w < 0 || w >= field.modulus()) throw InvalidParameter("vbar out of range [0, p-1)");
            for (const CharClass& chi : enumerate_chars(field)) {
                if (chi.vbar == w) chars.push_back(chi);
            }
            name = "vbar=" + std::to_string(w);
        }
        Rational sum;
        for (const CharClass& chi : chars) sum += char_contribution(field, chi);
        switch (o.format) {
            case Format::Json:
                return io::filter_to_json(field, name, chars, sum);
            case Format::Tsv:
                return chars_tsv(chars, field);
            case Format::Text:
                return name + ": " + std::to_string(chars.size()) + " character(s), contribution " + sum.str() + "\n";
        }
    }
    const MassReport report = total_mass(field, o.max_level);
    switch (o.format) {
        case Format::Json:
            return io::to_json(report);
        case Format::Tsv:
            return io::to_tsv(report);
        case Format::Text:
            return io::to_text(report);
    }
    return {};
}

std::string cmd_count(const Options& o) {
    const LocalField field = make_field(o);
    CountTable table = count_table(field, o.max_level);
    if (o.vbar) std::erase_if(table, [&](const auto& row) { return row.second.vbar != field.residue(*o.vbar); });
    return o.format == Format::Json ? io::counts_to_json(field, table) : io::to_tsv(table);
}

std::string cmd_tame(const Options& o) {
    const TameReport r = tame_mass(*o.pprime, o.p, residue_order(o.p, o.f));
    return o.format == Format::Json ? io::to_json(r) : io::to_text(r);
}

std::string cmd_galois_verify(const Options& o) {
    const perm::NormalizerResult normalizer = perm::verify_normalizer(o.p);
    const perm::GaloisCriterionResult criterion = perm::verify_galois_criterion(o.p);
    const perm::IndexPResult index_p = perm::verify_index_p_subgroups(o.p);
    if (o.format == Format::Json) return io::to_json(normalizer, criterion, index_p);
    std::ostringstream os;
    os << "normalizer of a " << o.p << "-cycle: order " << normalizer.normalizer_order << ", verified\n"
       << "transitive subgroups checked (" << criterion.scope << "): " << criterion.transitive.size() << '\n';
    for (const auto& e : index_p.entries) {
        os << "  group of order " << e.order << ": "
           << (e.skipped_commutative ? std::string("commutative, skipped")
                                     : std::to_string(e.index_p_subgroups) + " subgroups of index p")
           << '\n';
    }
    return os.str();
}

std::string cmd_oracle_check(const Options& o) {
    const LocalField field = make_field(o);
    std::int64_t bound = 0;
    if (o.max_level) {
        bound = *o.max_level;
    } else if (field.char_zero()) {
        bound = static_cast<std::int64_t>(field.p()) * field.finite_e();
    } else {
        throw InvalidParameter("oracle-check in characteristic p needs --max-level");
    }
    const auto rows = oracle::oracle_check(field, bound);
    for (const auto& row : rows) {
        if (!row.agrees()) {
            throw IdentityViolation("oracle " + row.enumerated.str() + " != formula " + row.formula.str() +
                                    " for vbar " + std::to_string(row.chi.vbar));
        }
    }
    if (o.format == Format::Json) return io::to_json(rows, field, bound);
    std::ostringstream os;
    os << "a\tb\tvbar\toracle\tformula\n";
    for (const auto& row : rows) {
        os << row.chi.coords->a << '\t' << row.chi.coords->b << '\t' << row.chi.vbar << '\t' << row.enumerated << '\t'
           << row.formula << '\n';
    }
    return os.str();
}

std::string cmd_checksum(const Options& o) {
    const Integer q = residue_order(o.p, o.f);
    const ChecksumResult r = checksum_identity(o.p, q);
    if (o.format == Format::Json) return io::to_json(r, o.p, q);
    return "lhs " + r.lhs.str() + "\nrhs " + r.rhs.str() + "\nmass " + r.total.str() + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact masses of degree-p extensions of local fields"};
    app.name("pmass");
    app.require_subcommand(1);

    CLI::App* structure = app.add_subcommand("structure", "filtered eigenspace layout");
    add_field(structure, o);
    structure->add_option("--max-level", o.max_level, "highest level shown (required when e = inf)");

    CLI::App* mass = app.add_subcommand("mass", "per-character and total masses");
    add_field(mass, o);
    mass->add_option("--vbar", o.vbar, "restrict to one valuation class");
    mass->add_option("--filter", o.filter, "cyclic, unramified-closure or group-order=N");
    mass->add_option("--max-level", o.max_level, "attach extension counts up to this level");

    CLI::App* count = app.add_subcommand("count", "lines, extensions and conjugacy classes per level");
    add_field(count, o);
    count->add_option("--vbar", o.vbar, "restrict to one valuation class");
    count->add_option("--max-level", o.max_level, "highest level counted (required when e = inf)");

    CLI::App* tame = app.add_subcommand("tame", "mass of extensions of prime degree p' != p");
    tame->add_option("--pprime", o.pprime, "the degree p'")->required();
    tame->add_option("--p", o.p, "residue characteristic")->required();
    tame->add_option("--f", o.f, "residue degree")->capture_default_str();
    add_format(tame, o);

    CLI::App* galois = app.add_subcommand("galois-verify", "group-theoretic checks in S_p");
    galois->add_option("--p", o.p, "prime degree, at most 7")->required();
    add_format(galois, o);

    CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "brute-force line enumeration against the formulas");
    add_field(oracle_cmd, o);
    oracle_cmd->add_option("--max-level", o.max_level, "level bound (default pe; required when e = inf)");

    CLI::App* checksum = app.add_subcommand("checksum", "summation identity behind the characteristic p total");
    checksum->add_option("--p", o.p, "odd prime")->required();
    checksum->add_option("--f", o.f, "residue degree")->capture_default_str();
    add_format(checksum, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        std::string report;
        if (*structure) report = cmd_structure(o);
        if (*mass) report = cmd_mass(o);
        if (*count) report = cmd_count(o);
        if (*tame) report = cmd_tame(o);
        if (*galois) report = cmd_galois_verify(o);
        if (*oracle_cmd) report = cmd_oracle_check(o);
        if (*checksum) report = cmd_checksum(o);
        out << report;
        return kExitOk;
    } catch (const IdentityViolation& e) {
        err << "internal identity check failed: " << e.what() << '\n';
        return kExitIdentity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ScaleExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace pmass::cli
