#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grpdeg/errors.hpp"
#include "grpdeg/formulas.hpp"
#include "grpdeg/goursat.hpp"
#include "grpdeg/specio.hpp"
#include "grpdeg/subgroup.hpp"
#include "grpdeg/verify.hpp"

namespace {

using namespace grpdeg;
using nlohmann::ordered_json;

struct Selector {
    std::string family;
    long n = -1;
    long m = -1;
    std::vector<long> orders;
    std::string gamma;
    std::string spec_file;
};

void add_selector_options(CLI::App* cmd, Selector& sel) {
    cmd->add_option("--family", sel.family,
                    "group family: cyclic, abelian, dihedral, dicyclic, gendicyclic, z2q, z2d");
    cmd->add_option("--n", sel.n,
                    "family parameter n; the quarter-order for dicyclic groups (group order 4n)");
    cmd->add_option("--m", sel.m,
                    "two-power exponent m; z2q means Z2 x Q_(2^(m+1)), z2d means Z2 x D_(2^m)");
    cmd->add_option("--orders", sel.orders, "cyclic factor orders for --family abelian")
        ->delimiter(',');
    cmd->add_option("--gamma-sq", sel.gamma,
                    "square of the extending generator for gendicyclic: ahalf, b or ahalfb");
    cmd->add_option("--spec", sel.spec_file, "JSON group spec file (alternative to --family)");
}

long require_param(long value, const char* family, const char* flag) {
    if (value < 0)
        throw DomainError(std::string("--family ") + family + " requires " + flag);
    return value;
}

GroupSpec selector_spec(const Selector& sel) {
    if (!sel.spec_file.empty()) {
        if (!sel.family.empty())
            throw DomainError("--spec and --family are mutually exclusive");
        std::ifstream in(sel.spec_file);
        if (!in) throw DomainError("cannot open spec file '" + sel.spec_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return spec_from_json(buf.str());
    }
    if (sel.family == "cyclic") return GroupSpec::cyclic(require_param(sel.n, "cyclic", "--n"));
    if (sel.family == "abelian") {
        if (sel.orders.empty()) throw DomainError("--family abelian requires --orders");
        return GroupSpec::abelian(sel.orders);
    }
    if (sel.family == "dihedral")
        return GroupSpec::dihedral(require_param(sel.n, "dihedral", "--n"));
    if (sel.family == "dicyclic")
        return GroupSpec::dicyclic(require_param(sel.n, "dicyclic", "--n"));
    if (sel.family == "gendicyclic") {
        long n = require_param(sel.n, "gendicyclic", "--n");
        if (sel.gamma.empty()) throw DomainError("--family gendicyclic requires --gamma-sq");
        return GroupSpec::generalized_dicyclic(n, parse_gamma_square(sel.gamma));
    }
    if (sel.family == "z2q") {
        long m = require_param(sel.m, "z2q", "--m");
        if (m < 2) throw DomainError("--family z2q requires m >= 2");
        return GroupSpec::direct_product(GroupSpec::cyclic(2),
                                         GroupSpec::generalized_quaternion(static_cast<int>(m) + 1));
    }
    if (sel.family == "z2d") {
        long m = require_param(sel.m, "z2d", "--m");
        if (m < 1 || m > 30) throw DomainError("--family z2d requires 1 <= m <= 30");
        return GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::dihedral(1L << (m - 1)));
    }
    if (sel.family.empty()) throw DomainError("one of --family or --spec is required");
    throw DomainError("unknown family '" + sel.family +
                      "' (expected cyclic, abelian, dihedral, dicyclic, gendicyclic, z2q, z2d)");
}

/// Closed form for the spec when one exists: dicyclic-family groups,
/// Z2 x Q_(2^(m+1)) products, and the trivially-1 abelian families.
std::optional<Degree> formula_for(const GroupSpec& spec, Quantity q, bool allow_extrapolated) {
    if (const auto* d = std::get_if<GroupSpec::Dicyclic>(&spec.v))
        return q == Quantity::Sd ? sd_dicyclic(d->n) : csd_dicyclic(d->n);
    if (const auto* qd = std::get_if<GroupSpec::GeneralizedQuaternion>(&spec.v)) {
        long n = 1L << (qd->m - 2);  // Q_(2^m) is the dicyclic group with this n
        return q == Quantity::Sd ? sd_dicyclic(n) : csd_dicyclic(n);
    }
    if (const auto* gd = std::get_if<GroupSpec::GeneralizedDicyclic>(&spec.v))
        return q == Quantity::Sd ? sd_gen_dicyclic(gd->n, gd->gamma_sq, allow_extrapolated)
                                 : csd_gen_dicyclic(gd->n, gd->gamma_sq, allow_extrapolated);
    if (const auto* dp = std::get_if<GroupSpec::DirectProduct>(&spec.v)) {
        const auto* left = std::get_if<GroupSpec::Cyclic>(&dp->left->v);
        const auto* right = std::get_if<GroupSpec::GeneralizedQuaternion>(&dp->right->v);
        if (left && left->n == 2 && right) {
            int m = right->m - 1;
            return q == Quantity::Sd ? sd_z2_quaternion(m) : csd_z2_quaternion(m);
        }
        return std::nullopt;
    }
    if (std::holds_alternative<GroupSpec::Cyclic>(spec.v) ||
        std::holds_alternative<GroupSpec::AbelianProduct>(spec.v))
        return Degree(1, 1);  // abelian: every subgroup pair permutes
    return std::nullopt;
}

std::string render_degree(const Degree& d) {
    if (d.is_one()) return "1";
    std::string out = d.raw_str();
    std::string reduced = d.str();
    if (out != reduced) out += " = " + reduced;
    out += " ≈ " + d.decimal(6);
    return out;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw DomainError("cannot write to '" + out_file + "'");
    out << text;
}

// ---- compute ----------------------------------------------------------

struct ComputeOptions {
    Selector sel;
    std::string quantity = "both";
    std::string method = "auto";
    std::string format = "human";
    std::string out_file;
    long bound = 512;
    bool allow_extrapolated = false;
};

std::vector<Quantity> parse_quantities(const std::string& q) {
    if (q == "sd") return {Quantity::Sd};
    if (q == "csd") return {Quantity::Csd};
    if (q == "both") return {Quantity::Sd, Quantity::Csd};
    throw DomainError("unknown quantity '" + q + "' (expected sd, csd or both)");
}

int run_compute(const ComputeOptions& opt) {
    GroupSpec spec = selector_spec(opt.sel);
    std::vector<Quantity> quantities = parse_quantities(opt.quantity);
    if (opt.method != "auto" && opt.method != "formula" && opt.method != "oracle" &&
        opt.method != "both")
        throw DomainError("unknown method '" + opt.method +
                          "' (expected auto, formula, oracle or both)");

    bool abelian_note = false;
    bool extrapolated = false;
    if (const auto* gd = std::get_if<GroupSpec::GeneralizedDicyclic>(&spec.v)) {
        abelian_note = gd->n == 2;
        extrapolated = gd->n > 2 && gd->n % 4 == 2;
    }
    // The extrapolated closed form is never trusted alone: when it is
    // evaluated and the group fits the bound, the oracle runs alongside it.
    bool cross_check =
        extrapolated && opt.allow_extrapolated && spec.order() <= opt.bound;

    // Resolve the method per quantity; build the lattice once if any
    // quantity needs the oracle.
    struct Result {
        Quantity quantity;
        std::optional<Degree> formula;
        std::optional<Degree> oracle;
    };
    std::vector<Result> results;
    bool need_oracle = false;
    for (Quantity q : quantities) {
        Result r{q, std::nullopt, std::nullopt};
        std::optional<Degree> formula;
        if (opt.method == "auto" && extrapolated && !opt.allow_extrapolated)
            formula = std::nullopt;  // fall back to the oracle silently
        else if (opt.method != "oracle")
            formula = formula_for(spec, q, opt.allow_extrapolated);
        if (opt.method == "formula" || opt.method == "both" ||
            (opt.method == "auto" && formula.has_value())) {
            if (!formula.has_value())
                throw DomainError(
                    "no closed form for this group; use --method oracle (or auto)");
            r.formula = formula;
        }
        if (opt.method == "oracle" || opt.method == "both" ||
            (opt.method == "auto" && (!formula.has_value() || cross_check)))
            need_oracle = true;
        results.push_back(std::move(r));
    }
    if (need_oracle) {
        FiniteGroup g = build_group(spec);
        SubgroupLattice lat = enumerate_subgroups(g, opt.bound);
        for (Result& r : results) {
            if (opt.method == "oracle" || opt.method == "both" ||
                (opt.method == "auto" && (!r.formula.has_value() || cross_check)))
                r.oracle = r.quantity == Quantity::Sd ? sd_bruteforce(g, lat)
                                                      : csd_bruteforce(g, lat);
        }
    }

    bool mismatch = false;
    for (const Result& r : results)
        if (r.formula && r.oracle && !(*r.formula == *r.oracle)) mismatch = true;

    std::string text;
    if (opt.format == "human") {
        for (const Result& r : results) {
            const char* tag = quantity_token(r.quantity);
            if (r.formula && r.oracle) {
                text += std::string(tag) + ": formula = " + render_degree(*r.formula) +
                        ", oracle = " + render_degree(*r.oracle) +
                        (*r.formula == *r.oracle ? ", match" : ", MISMATCH") + "\n";
            } else {
                const Degree& d = r.formula ? *r.formula : *r.oracle;
                text += std::string(tag) + " = " + render_degree(d);
                if (abelian_note && d.is_one()) text += " (abelian group of order 8)";
                text += "\n";
            }
        }
    } else if (opt.format == "json") {
        ordered_json doc;
        doc["group"] = spec.name();
        doc["order"] = spec.order();
        doc["spec"] = ordered_json::parse(spec_to_json(spec));
        ordered_json rows = ordered_json::array();
        for (const Result& r : results) {
            ordered_json row;
            row["quantity"] = quantity_token(r.quantity);
            if (r.formula && r.oracle) {
                row["formula"] = r.formula->str();
                row["oracle"] = r.oracle->str();
                row["match"] = *r.formula == *r.oracle;
            } else {
                const Degree& d = r.formula ? *r.formula : *r.oracle;
                row["method"] = r.formula ? "formula" : "oracle";
                row["value"] = d.str();
                row["raw"] = d.raw_str();
                row["decimal"] = d.decimal(6);
            }
            rows.push_back(std::move(row));
        }
        doc["results"] = std::move(rows);
        text = doc.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = "quantity,method,value,raw,decimal,match\n";
        for (const Result& r : results) {
            const char* tag = quantity_token(r.quantity);
            std::string match;
            if (r.formula && r.oracle) match = *r.formula == *r.oracle ? "true" : "false";
            if (r.formula)
                text += std::string(tag) + ",formula," + r.formula->str() + "," +
                        r.formula->raw_str() + "," + r.formula->decimal(6) + "," + match + "\n";
            if (r.oracle)
                text += std::string(tag) + ",oracle," + r.oracle->str() + "," +
                        r.oracle->raw_str() + "," + r.oracle->decimal(6) + "," + match + "\n";
        }
    } else {
        throw DomainError("unknown format '" + opt.format + "' (expected human, json or csv)");
    }
    emit(text, opt.out_file);
    return mismatch ? 1 : 0;
}

// ---- lattice ----------------------------------------------------------

struct LatticeOptions {
    Selector sel;
    std::string format = "human";
    std::string out_file;
    long bound = 512;
    bool matrix = false;
    bool cyclic_only = false;
};

std::string label_list(const FiniteGroup& g, const std::vector<int>& elems, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += sep;
        out += g.labels[static_cast<std::size_t>(elems[i])];
    }
    return out;
}

int run_lattice(const LatticeOptions& opt) {
    GroupSpec spec = selector_spec(opt.sel);
    FiniteGroup g = build_group(spec);
    SubgroupLattice lat = enumerate_subgroups(g, opt.bound);

    std::vector<std::size_t> shown;
    if (opt.cyclic_only) {
        shown = lat.cyclic_indices();
    } else {
        shown.resize(lat.size());
        for (std::size_t i = 0; i < shown.size(); ++i) shown[i] = i;
    }
    std::vector<std::vector<bool>> matrix;
    if (opt.matrix) matrix = permuter_matrix(g, lat, opt.cyclic_only);

    std::string text;
    if (opt.format == "human") {
        text += "group: " + spec.name() + " (order " + std::to_string(g.size) + ")\n";
        text += "subgroups: " + std::to_string(lat.size()) +
                " (cyclic: " + std::to_string(lat.cyclic_count()) + ")\n";
        for (std::size_t row = 0; row < shown.size(); ++row) {
            const Subgroup& h = lat.subgroups[shown[row]];
            std::vector<int> gens = generating_set(g, h);
            text += "  #" + std::to_string(row) + " order " + std::to_string(h.order) +
                    (lat.cyclic[shown[row]] ? " cyclic " : "        ") +
                    " gens: " + (gens.empty() ? "-" : label_list(g, gens, ", ")) +
                    "  members: " + label_list(g, h.members.members(), " ") + "\n";
        }
        if (opt.matrix) {
            std::size_t permuting = 0;
            text += "permuter matrix (" + std::to_string(matrix.size()) + "x" +
                    std::to_string(matrix.size()) + "):\n";
            for (const auto& row : matrix) {
                text += "  ";
                for (bool cell : row) {
                    text += cell ? '1' : '0';
                    permuting += cell ? 1 : 0;
                }
                text += '\n';
            }
            text += "permuting pairs: " + std::to_string(permuting) + " / " +
                    std::to_string(matrix.size() * matrix.size()) + "\n";
        }
    } else if (opt.format == "json") {
        ordered_json doc;
        doc["group"] = spec.name();
        doc["order"] = g.size;
        doc["spec"] = ordered_json::parse(spec_to_json(spec));
        doc["lattice_size"] = lat.size();
        doc["cyclic_poset_size"] = lat.cyclic_count();
        ordered_json rows = ordered_json::array();
        for (std::size_t row = 0; row < shown.size(); ++row) {
            const Subgroup& h = lat.subgroups[shown[row]];
            ordered_json r;
            r["index"] = row;
            r["order"] = h.order;
            r["cyclic"] = static_cast<bool>(lat.cyclic[shown[row]]);
            ordered_json gens = ordered_json::array();
            for (int x : generating_set(g, h)) gens.push_back(g.labels[static_cast<std::size_t>(x)]);
            r["generators"] = std::move(gens);
            ordered_json members = ordered_json::array();
            for (int x : h.members.members())
                members.push_back(g.labels[static_cast<std::size_t>(x)]);
            r["members"] = std::move(members);
            rows.push_back(std::move(r));
        }
        doc["subgroups"] = std::move(rows);
        if (opt.matrix) {
            ordered_json m = ordered_json::array();
            for (const auto& row : matrix) {
                ordered_json jrow = ordered_json::array();
                for (bool cell : row) jrow.push_back(cell);
                m.push_back(std::move(jrow));
            }
            doc["permuter_matrix"] = std::move(m);
        }
        text = doc.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = "index,order,cyclic,generators,members\n";
        for (std::size_t row = 0; row < shown.size(); ++row) {
            const Subgroup& h = lat.subgroups[shown[row]];
            text += std::to_string(row) + "," + std::to_string(h.order) + "," +
                    (lat.cyclic[shown[row]] ? "true" : "false") + "," +
                    label_list(g, generating_set(g, h), ";") + "," +
                    label_list(g, h.members.members(), ";") + "\n";
        }
    } else {
        throw DomainError("unknown format '" + opt.format + "' (expected human, json or csv)");
    }
    emit(text, opt.out_file);
    return 0;
}

// ---- verify -----------------------------------------------------------

struct VerifyOptions {
    std::string family;
    std::string n_range;
    std::string m_range;
    std::string format = "human";
    std::string out_file;
    long bound = 128;
    bool inject_mismatch = false;
};

std::pair<long, long> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        if (lo > hi) throw DomainError("range '" + text + "' is empty (lo > hi)");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse range '" + text + "' (expected a or a..b)");
    } catch (const std::out_of_range&) {
        throw DomainError("range '" + text + "' is out of range");
    }
}

int run_verify(const VerifyOptions& opt) {
    SweepOptions sweep;
    sweep.order_bound = opt.bound;

    VerificationReport rep;
    if (opt.family.empty()) {
        if (!opt.n_range.empty() || !opt.m_range.empty())
            throw DomainError("--n/--m ranges require --family");
        rep = default_sweep(sweep);
    } else {
        Family family;
        std::string range;
        bool uses_n = false;
        if (opt.family == "dicyclic") {
            family = Family::Dicyclic;
            range = opt.n_range.empty() ? "1..12" : opt.n_range;
            uses_n = true;
        } else if (opt.family == "gendicyclic") {
            family = Family::GenDicyclic;
            range = opt.n_range.empty() ? "2..10" : opt.n_range;
            uses_n = true;
        } else if (opt.family == "z2q") {
            family = Family::Z2Quaternion;
            range = opt.m_range.empty() ? "2..4" : opt.m_range;
        } else if (opt.family == "z2d" || opt.family == "z2dihedral") {
            family = Family::Z2Dihedral;
            range = opt.m_range.empty() ? "1..4" : opt.m_range;
        } else {
            throw DomainError("unknown verify family '" + opt.family +
                              "' (expected dicyclic, gendicyclic, z2q, z2d)");
        }
        if (uses_n && !opt.m_range.empty())
            throw DomainError("--family " + opt.family + " takes --n, not --m");
        if (!uses_n && !opt.n_range.empty())
            throw DomainError("--family " + opt.family + " takes --m, not --n");
        auto [lo, hi] = parse_range(range);
        rep = verify_family(family, lo, hi, sweep);
    }

    if (opt.inject_mismatch) {
        VerifyEntry e;
        e.family = Family::Dicyclic;
        e.group = "fixture";
        e.params = {0};
        e.quantity = Quantity::Sd;
        e.formula = "1/2";
        e.oracle = "1/3";
        e.match = false;
        rep.entries.push_back(std::move(e));
    }

    std::string text;
    if (opt.format == "human") {
        for (const VerifyEntry& e : rep.entries) {
            std::string params;
            for (std::size_t i = 0; i < e.params.size(); ++i)
                params += (i ? "," : "") + std::to_string(e.params[i]);
            std::string head = std::string(e.skipped ? "[skip]" : (e.match ? "[ ok ]" : "[FAIL]")) +
                               " " + family_token(e.family) + " " + e.group + " (" + params +
                               (e.gamma.empty() ? "" : ("," + e.gamma)) + ") " +
                               quantity_token(e.quantity);
            if (e.skipped)
                text += head + ": " + e.skip_reason + "\n";
            else
                text += head + ": formula = " + e.formula + ", oracle = " + e.oracle + "\n";
        }
        text += "summary: total=" + std::to_string(rep.entries.size()) +
                " matched=" + std::to_string(rep.matched()) +
                " mismatched=" + std::to_string(rep.mismatched()) +
                " skipped=" + std::to_string(rep.skipped()) + "\n";
    } else if (opt.format == "json") {
        text = report_json(rep);
    } else if (opt.format == "csv") {
        text = report_csv(rep);
    } else {
        throw DomainError("unknown format '" + opt.format + "' (expected human, json or csv)");
    }
    emit(text, opt.out_file);
    return rep.all_match() ? 0 : 1;
}

// ---- asymptote --------------------------------------------------------

struct AsymptoteOptions {
    std::string quantity = "both";
    std::string m_range = "2..20";
    std::string format = "human";
    std::string out_file;
    bool check_decreasing = false;
};

int run_asymptote(const AsymptoteOptions& opt) {
    auto [lo, hi] = parse_range(opt.m_range);
    std::vector<Quantity> quantities = parse_quantities(opt.quantity);

    bool decreasing = true;
    std::string text;
    ordered_json doc = ordered_json::array();
    if (opt.format == "csv") text = "quantity,m,value,decimal\n";
    for (Quantity q : quantities) {
        std::vector<AsymptoticRow> rows = asymptotic_table(q, static_cast<int>(lo),
                                                           static_cast<int>(hi));
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].m >= 3 && !(rows[i].value < rows[i - 1].value)) decreasing = false;

        if (opt.format == "human") {
            text += std::string(quantity_token(q)) + " of Z2 x Q_(2^(m+1)):\n";
            for (const AsymptoticRow& r : rows)
                text += "  m=" + std::to_string(r.m) + "  " + r.value.str() + "  ≈ " +
                        r.value.decimal(6) + "\n";
        } else if (opt.format == "json") {
            ordered_json block;
            block["quantity"] = quantity_token(q);
            ordered_json jrows = ordered_json::array();
            for (const AsymptoticRow& r : rows) {
                ordered_json row;
                row["m"] = r.m;
                row["value"] = r.value.str();
                row["decimal"] = r.value.decimal(6);
                jrows.push_back(std::move(row));
            }
            block["rows"] = std::move(jrows);
            doc.push_back(std::move(block));
        } else if (opt.format == "csv") {
            for (const AsymptoticRow& r : rows)
                text += std::string(quantity_token(q)) + "," + std::to_string(r.m) + "," +
                        r.value.str() + "," + r.value.decimal(6) + "\n";
        } else {
            throw DomainError("unknown format '" + opt.format +
                              "' (expected human, json or csv)");
        }
    }
    if (opt.format == "json") text = doc.dump(2) + "\n";
    if (opt.check_decreasing && opt.format == "human")
        text += std::string("strictly decreasing from m=3: ") + (decreasing ? "yes" : "NO") + "\n";
    emit(text, opt.out_file);
    return opt.check_decreasing && !decreasing ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subgroup commutativity degrees of dicyclic-family groups"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand(
        "compute", "sd/csd of one group, by closed formula and/or lattice oracle");
    add_selector_options(compute, copt.sel);
    compute->add_option("--quantity", copt.quantity, "sd, csd or both (default both)");
    compute->add_option("--method", copt.method,
                        "formula, oracle, both or auto (default: formula when one exists)");
    compute->add_option("--format", copt.format, "human, json or csv (default human)");
    compute->add_option("--bound", copt.bound, "maximum group order for the oracle (default 512)")
        ->envname("GRPDEG_BOUND");
    compute->add_flag("--allow-extrapolated", copt.allow_extrapolated,
                      "permit the closed form outside its established domain (n = 2 mod 4, n > 2)");
    compute->add_option("--out", copt.out_file, "write output to this file instead of stdout");

    LatticeOptions lopt;
    CLI::App* lattice =
        app.add_subcommand("lattice", "enumerate the subgroup lattice of one group");
    add_selector_options(lattice, lopt.sel);
    lattice->add_option("--format", lopt.format, "human, json or csv (default human)");
    lattice->add_option("--bound", lopt.bound, "maximum group order (default 512)")
        ->envname("GRPDEG_BOUND");
    lattice->add_flag("--matrix", lopt.matrix, "also print the permuter matrix");
    lattice->add_flag("--cyclic-only", lopt.cyclic_only,
                      "restrict the listing and matrix to cyclic subgroups");
    lattice->add_option("--out", lopt.out_file, "write output to this file instead of stdout");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep closed forms against the brute-force oracle (default: all families)");
    verify->add_option("--family", vopt.family, "dicyclic, gendicyclic, z2q or z2d");
    verify->add_option("--n", vopt.n_range, "n range as a or a..b (dicyclic families)");
    verify->add_option("--m", vopt.m_range, "m range as a or a..b (two-power families)");
    verify->add_option("--format", vopt.format, "human, json or csv (default human)");
    verify->add_option("--bound", vopt.bound,
                       "skip groups larger than this order (default 128)")
        ->envname("GRPDEG_BOUND");
    verify->add_option("--out", vopt.out_file, "write the report to this file instead of stdout");
    verify->add_flag("--inject-mismatch", vopt.inject_mismatch)->group("");  // test fixture

    AsymptoteOptions aopt;
    CLI::App* asymptote = app.add_subcommand(
        "asymptote", "exact sd/csd of Z2 x Q_(2^(m+1)) over an m range (vanishes as m grows)");
    asymptote->add_option("--quantity", aopt.quantity, "sd, csd or both (default both)");
    asymptote->add_option("--m", aopt.m_range, "m range within 2..64 (default 2..20)");
    asymptote->add_option("--format", aopt.format, "human, json or csv (default human)");
    asymptote->add_flag("--check-decreasing", aopt.check_decreasing,
                        "exit 1 unless values strictly decrease from m=3 on");
    asymptote->add_option("--out", aopt.out_file,
                          "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(copt);
        if (*lattice) return run_lattice(lopt);
        if (*verify) return run_verify(vopt);
        if (*asymptote) return run_asymptote(aopt);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
