#include "grpdeg/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"

#include "grpdeg/errors.hpp"
#include "grpdeg/formulas.hpp"

namespace grpdeg {

const char* family_token(Family f) {
    switch (f) {
        case Family::Dicyclic: return "dicyclic";
        case Family::GenDicyclic: return "gendicyclic";
        case Family::Z2Quaternion: return "z2q";
        case Family::Z2Dihedral: return "z2d";
    }
    throw std::logic_error("unknown family");
}

const char* quantity_token(Quantity q) {
    switch (q) {
        case Quantity::Sd: return "sd";
        case Quantity::Csd: return "csd";
        case Quantity::LatticeSize: return "lattice_size";
        case Quantity::CyclicPosetSize: return "cyclic_poset_size";
    }
    throw std::logic_error("unknown quantity");
}

std::size_t VerificationReport::matched() const {
    std::size_t n = 0;
    for (const VerifyEntry& e : entries) n += (!e.skipped && e.match) ? 1 : 0;
    return n;
}

std::size_t VerificationReport::mismatched() const {
    std::size_t n = 0;
    for (const VerifyEntry& e : entries) n += (!e.skipped && !e.match) ? 1 : 0;
    return n;
}

std::size_t VerificationReport::skipped() const {
    std::size_t n = 0;
    for (const VerifyEntry& e : entries) n += e.skipped ? 1 : 0;
    return n;
}

namespace {

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

VerifyEntry base_entry(Family f, const GroupSpec& spec, std::vector<long> params,
                       std::string gamma, Quantity q) {
    VerifyEntry e;
    e.family = f;
    e.group = spec.name();
    e.params = std::move(params);
    e.gamma = std::move(gamma);
    e.quantity = q;
    return e;
}

// Compares one closed-form value against the already-built lattice.
void run_entry(VerifyEntry& e, const FiniteGroup& g, const SubgroupLattice& lat,
               const Degree* formula_degree, const BigInt* formula_count) {
    Clock::time_point t0 = Clock::now();
    if (formula_degree) {
        Degree oracle = e.quantity == Quantity::Sd ? sd_bruteforce(g, lat)
                                                   : csd_bruteforce(g, lat);
        e.formula = formula_degree->str();
        e.oracle = oracle.str();
        e.match = *formula_degree == oracle;
    } else {
        BigInt oracle = e.quantity == Quantity::LatticeSize ? BigInt(lat.size())
                                                            : BigInt(lat.cyclic_count());
        e.formula = formula_count->str();
        e.oracle = oracle.str();
        e.match = *formula_count == oracle;
    }
    e.micros = micros_since(t0);
}

struct PlannedEntry {
    GroupSpec spec;
    std::vector<long> params;
    std::string gamma;
    Quantity quantity;
    Degree formula_degree{1, 1};
    BigInt formula_count = 0;
    bool is_degree = true;
};

// Emits skip rows when the group order exceeds the bound; returns true if
// the caller should evaluate formulas and enumerate. Checked before any
// formula work since some closed forms enumerate small lattices themselves.
bool within_bound(VerificationReport& rep, Family f, const GroupSpec& spec,
                  const std::vector<long>& params, const std::string& gamma,
                  const std::vector<Quantity>& quantities, const SweepOptions& opt) {
    long order = spec.order();
    if (order <= opt.order_bound) return true;
    for (Quantity q : quantities) {
        VerifyEntry e = base_entry(f, spec, params, gamma, q);
        e.skipped = true;
        e.skip_reason = "group order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(opt.order_bound);
        rep.entries.push_back(std::move(e));
    }
    return false;
}

void append_group_entries(VerificationReport& rep, Family f, const GroupSpec& spec,
                          std::vector<PlannedEntry> planned, const SweepOptions& opt) {
    FiniteGroup g = build_group(spec);
    SubgroupLattice lat;
    try {
        lat = enumerate_subgroups(g, opt.order_bound);
    } catch (const BoundExceeded& ex) {
        for (PlannedEntry& p : planned) {
            VerifyEntry e = base_entry(f, p.spec, p.params, p.gamma, p.quantity);
            e.skipped = true;
            e.skip_reason = ex.what();
            rep.entries.push_back(std::move(e));
        }
        return;
    }
    for (PlannedEntry& p : planned) {
        VerifyEntry e = base_entry(f, p.spec, p.params, p.gamma, p.quantity);
        run_entry(e, g, lat, p.is_degree ? &p.formula_degree : nullptr,
                  p.is_degree ? nullptr : &p.formula_count);
        rep.entries.push_back(std::move(e));
    }
}

void sweep_dicyclic(VerificationReport& rep, long lo, long hi, const SweepOptions& opt) {
    for (long n = std::max(lo, 1L); n <= hi; ++n) {
        GroupSpec spec = GroupSpec::dicyclic(n);
        if (!within_bound(rep, Family::Dicyclic, spec, {n}, "",
                          {Quantity::Sd, Quantity::Csd, Quantity::LatticeSize,
                           Quantity::CyclicPosetSize},
                          opt))
            continue;
        std::vector<PlannedEntry> planned;
        planned.push_back({spec, {n}, "", Quantity::Sd, sd_dicyclic(n), 0, true});
        planned.push_back({spec, {n}, "", Quantity::Csd, csd_dicyclic(n), 0, true});
        planned.push_back(
            {spec, {n}, "", Quantity::LatticeSize, Degree(1, 1), lattice_size_dicyclic(n), false});
        planned.push_back({spec, {n}, "", Quantity::CyclicPosetSize, Degree(1, 1),
                           cyclic_poset_size_dicyclic(n), false});
        append_group_entries(rep, Family::Dicyclic, spec, std::move(planned), opt);
    }
}

void sweep_gen_dicyclic(VerificationReport& rep, long lo, long hi, const SweepOptions& opt) {
    for (long n = std::max(lo, 2L) + (std::max(lo, 2L) % 2); n <= hi; n += 2) {
        for (GammaSquare choice : {GammaSquare::AHalf, GammaSquare::B, GammaSquare::AHalfB}) {
            GroupSpec spec = GroupSpec::generalized_dicyclic(n, choice);
            if (!within_bound(rep, Family::GenDicyclic, spec, {n}, gamma_square_token(choice),
                              {Quantity::Sd, Quantity::Csd}, opt))
                continue;
            std::vector<PlannedEntry> planned;
            planned.push_back({spec, {n}, gamma_square_token(choice), Quantity::Sd,
                               sd_gen_dicyclic(n, choice, true), 0, true});
            planned.push_back({spec, {n}, gamma_square_token(choice), Quantity::Csd,
                               csd_gen_dicyclic(n, choice, true), 0, true});
            append_group_entries(rep, Family::GenDicyclic, spec, std::move(planned), opt);
        }
    }
}

void sweep_z2_quaternion(VerificationReport& rep, long lo, long hi, const SweepOptions& opt) {
    for (long m = std::max(lo, 2L); m <= hi; ++m) {
        GroupSpec spec = GroupSpec::direct_product(
            GroupSpec::cyclic(2), GroupSpec::generalized_quaternion(static_cast<int>(m) + 1));
        if (!within_bound(rep, Family::Z2Quaternion, spec, {m}, "",
                          {Quantity::Sd, Quantity::Csd, Quantity::LatticeSize}, opt))
            continue;
        std::vector<PlannedEntry> planned;
        planned.push_back(
            {spec, {m}, "", Quantity::Sd, sd_z2_quaternion(static_cast<int>(m)), 0, true});
        planned.push_back(
            {spec, {m}, "", Quantity::Csd, csd_z2_quaternion(static_cast<int>(m)), 0, true});
        planned.push_back({spec, {m}, "", Quantity::LatticeSize, Degree(1, 1),
                           subgroup_count_z2_quaternion(static_cast<int>(m)), false});
        append_group_entries(rep, Family::Z2Quaternion, spec, std::move(planned), opt);
    }
}

void sweep_z2_dihedral(VerificationReport& rep, long lo, long hi, const SweepOptions& opt) {
    for (long m = std::max(lo, 1L); m <= hi; ++m) {
        GroupSpec spec = GroupSpec::direct_product(GroupSpec::cyclic(2),
                                                   GroupSpec::dihedral(1L << (m - 1)));
        if (!within_bound(rep, Family::Z2Dihedral, spec, {m}, "", {Quantity::LatticeSize}, opt))
            continue;
        std::vector<PlannedEntry> planned;
        planned.push_back({spec, {m}, "", Quantity::LatticeSize, Degree(1, 1),
                           subgroup_count_z2_dihedral(static_cast<int>(m)), false});
        append_group_entries(rep, Family::Z2Dihedral, spec, std::move(planned), opt);
    }
}

}  // namespace

VerificationReport verify_family(Family family, long lo, long hi, const SweepOptions& opt) {
    VerificationReport rep;
    switch (family) {
        case Family::Dicyclic: sweep_dicyclic(rep, lo, hi, opt); break;
        case Family::GenDicyclic: sweep_gen_dicyclic(rep, lo, hi, opt); break;
        case Family::Z2Quaternion: sweep_z2_quaternion(rep, lo, hi, opt); break;
        case Family::Z2Dihedral: sweep_z2_dihedral(rep, lo, hi, opt); break;
    }
    return rep;
}

VerificationReport default_sweep(const SweepOptions& opt) {
    VerificationReport rep;
    sweep_dicyclic(rep, 1, 12, opt);
    sweep_gen_dicyclic(rep, 2, 10, opt);
    sweep_z2_quaternion(rep, 2, 4, opt);
    sweep_z2_dihedral(rep, 1, 4, opt);
    return rep;
}

std::vector<AsymptoticRow> asymptotic_table(Quantity q, int lo, int hi) {
    if (q != Quantity::Sd && q != Quantity::Csd)
        throw DomainError("asymptotic table covers sd and csd only");
    if (lo < 2 || hi > 64 || lo > hi) throw DomainError("asymptotic range must lie within [2,64]");
    std::vector<AsymptoticRow> rows;
    for (int m = lo; m <= hi; ++m)
        rows.push_back({m, q == Quantity::Sd ? sd_z2_quaternion(m) : csd_z2_quaternion(m)});
    return rows;
}

std::vector<std::vector<bool>> permuter_matrix(const FiniteGroup& g, const SubgroupLattice& lat,
                                               bool cyclic_only) {
    std::vector<std::size_t> idx;
    if (cyclic_only) {
        idx = lat.cyclic_indices();
    } else {
        idx.resize(lat.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    }
    std::size_t n = idx.size();
    std::vector<std::vector<bool>> mat(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        mat[i][i] = true;
        for (std::size_t j = 0; j < i; ++j) {
            bool p = permutes(g, lat.subgroups[idx[i]], lat.subgroups[idx[j]]);
            mat[i][j] = p;
            mat[j][i] = p;
        }
    }
    return mat;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const VerifyEntry& e : r.entries) {
        nlohmann::ordered_json row;
        row["family"] = family_token(e.family);
        row["group"] = e.group;
        row["params"] = e.params;
        if (!e.gamma.empty()) row["gamma"] = e.gamma;
        row["quantity"] = quantity_token(e.quantity);
        if (e.skipped) {
            row["skipped"] = true;
            row["reason"] = e.skip_reason;
        } else {
            row["formula"] = e.formula;
            row["oracle"] = e.oracle;
            row["match"] = e.match;
        }
        entries.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["report"] = "verification";
    doc["entries"] = std::move(entries);
    doc["summary"] = {{"total", r.entries.size()},
                      {"matched", r.matched()},
                      {"mismatched", r.mismatched()},
                      {"skipped", r.skipped()}};
    return doc.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& r) {
    std::string out = "family,params,quantity,formula,oracle,match,micros\n";
    for (const VerifyEntry& e : r.entries) {
        out += family_token(e.family);
        out += ',';
        std::string params;
        const char* key = (e.family == Family::Z2Quaternion || e.family == Family::Z2Dihedral)
                              ? "m="
                              : "n=";
        for (std::size_t i = 0; i < e.params.size(); ++i) {
            if (i) params += ';';
            params += key + std::to_string(e.params[i]);
        }
        if (!e.gamma.empty()) params += ";gamma=" + e.gamma;
        out += params;
        out += ',';
        out += quantity_token(e.quantity);
        out += ',';
        out += e.formula;
        out += ',';
        out += e.oracle;
        out += ',';
        out += e.skipped ? "skipped" : (e.match ? "true" : "false");
        out += ',';
        out += std::to_string(e.micros);
        out += '\n';
    }
    return out;
}

}  // namespace grpdeg
