#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grpdeg/group.hpp"
#include "grpdeg/rational.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

enum class Family { Dicyclic, GenDicyclic, Z2Quaternion, Z2Dihedral };
enum class Quantity { Sd, Csd, LatticeSize, CyclicPosetSize };

const char* family_token(Family f);      // "dicyclic", "gendicyclic", "z2q", "z2d"
const char* quantity_token(Quantity q);  // "sd", "csd", "lattice_size", "cyclic_poset_size"

struct SweepOptions {
    long order_bound = 128;  // entries above this group order are skipped, with reason
};

/// One formula-vs-oracle comparison. Values are reduced exact strings
/// ("29/32", "1", or a plain integer for the counting quantities); match is
/// exact equality. Skipped entries carry a reason and no values.
struct VerifyEntry {
    Family family;
    std::string group;
    std::vector<long> params;
    std::string gamma;  // gamma-square token for GenDicyclic rows, else empty
    Quantity quantity;
    std::string formula;
    std::string oracle;
    bool match = false;
    bool skipped = false;
    std::string skip_reason;
    long long micros = 0;  // informational; excluded from JSON to keep it byte-stable
};

struct VerificationReport {
    std::vector<VerifyEntry> entries;

    std::size_t matched() const;
    std::size_t mismatched() const;
    std::size_t skipped() const;
    bool all_match() const { return mismatched() == 0; }
};

/// Sweeps one family over an inclusive parameter range (n for the dicyclic
/// families, m for the two-power direct products), comparing every closed
/// form the family has against the brute-force lattice. Entries appear in
/// parameter order, so reports are deterministic. GenDicyclic rows cover all
/// three gamma-square choices and evaluate the extrapolated m=1 domain: the
/// whole point of the sweep is the oracle cross-check that the opt-in flag
/// asks for.
VerificationReport verify_family(Family family, long lo, long hi, const SweepOptions& opt = {});

/// Dicyclic n 1..12, GenDicyclic n 2..10, Z2Quaternion m 2..4,
/// Z2Dihedral m 1..4, concatenated in that order.
VerificationReport default_sweep(const SweepOptions& opt = {});

struct AsymptoticRow {
    int m;
    Degree value;
};

/// Exact sd/csd of Z2 x Q_{2^{m+1}} over an inclusive m range within [2,64].
/// Strictly decreasing from m = 3 on; both quantities tend to 0.
std::vector<AsymptoticRow> asymptotic_table(Quantity q, int lo, int hi);

/// matrix[i][j] = permutes(H_i, H_j) over the lattice order (or the cyclic
/// subposet when cyclic_only). Symmetric; row sums are permuter counts.
std::vector<std::vector<bool>> permuter_matrix(const FiniteGroup& g, const SubgroupLattice& lat,
                                               bool cyclic_only = false);

/// JSON report: schema-stable, deterministic bytes (no timings).
std::string report_json(const VerificationReport& r);

/// CSV report with the informational micros column.
std::string report_csv(const VerificationReport& r);

}  // namespace grpdeg
