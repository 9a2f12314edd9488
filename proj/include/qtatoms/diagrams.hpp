#pragma once
// Partition and lattice-diagram combinatorics: cells, shadows, arms/legs,
// corner weights, the slide construction for epsilon-subsets, the
// corner-indexed cell assignment, and gistol canonical forms.
//
// French convention throughout: row 0 is the bottom row, cell (i,j) sits in
// row i and column j.

#include "qtatoms/qtfield.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qtatoms {

struct domain_error : qt_error {
    using qt_error::qt_error;
};
struct resource_error : qt_error {
    using qt_error::qt_error;
};

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
    std::string str() const;
    static Cell parse(const std::string& text);
};

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;            // |mu|
    int length() const { return int(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[size_t(i)] : 0; }  // 0-based row length
    bool empty() const { return parts_.empty(); }

    bool contains(Cell c) const;
    Partition conjugate() const;
    Partition remove_corner(Cell c) const;  // c must be a removable corner
    std::vector<Cell> cells() const;        // increasing lex order
    std::vector<Cell> corners() const;      // northwest to southeast

    /// true iff *this >= o in dominance order (requires equal size).
    bool dominates(const Partition& o) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;                      // "[3,2,1]"
    static Partition parse(const std::string&);   // inverse of str()

private:
    std::vector<int> parts_;
};

/// Arm, leg, coarm, coleg of a cell within a partition.
struct ArmLeg {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
    int hook() const { return arm + leg + 1; }
};

ArmLeg arm_leg(const Partition& mu, Cell c);

/// A finite set of distinct lattice cells in increasing lex order.
class LatticeDiagram {
public:
    LatticeDiagram() = default;
    explicit LatticeDiagram(std::vector<Cell> cells);  // sorts, rejects duplicates
    static LatticeDiagram of_partition(const Partition& mu);
    static LatticeDiagram hole(const Partition& mu, Cell c);  // mu minus one cell

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return int(cells_.size()); }
    bool contains(Cell c) const;

    auto operator<=>(const LatticeDiagram&) const = default;
    std::string str() const;

private:
    std::vector<Cell> cells_;
};

/// q,t-weight T_L = prod over cells of t^row q^col.
QTScalar t_weight(const LatticeDiagram& d);
QTScalar t_weight(const Partition& mu);

/// n(mu) = sum (i-1) mu_i; equals the total t-degree of T_mu.
long n_stat(const Partition& mu);

/// Number of standard tableaux (hook length formula).
long f_lambda(const Partition& lam);

/// Corner data of the shadow of `origin` in mu.  All weights are relative to
/// the shadow shape tau (translate by t^i q^j for weights inside mu).
/// x[1..m] are the outer corner weights northwest to southeast, u[0..m] the
/// inner corner weights, x0 = 1/(tq).  widths[r] / drops[r] (1-based via
/// width(r), drop(r)) are the exposed widths and vertical drops, with
/// sum of widths = arm+1 and sum of drops = leg+1.
struct ShadowFrame {
    Cell origin;
    Partition tau;
    int m = 0;
    QTScalar x0;
    std::vector<QTScalar> x;  // size m, x[0] is x_1
    std::vector<QTScalar> u;  // size m+1, u[0] is u_0
    std::vector<int> widths;  // size m
    std::vector<int> drops;   // size m

    const QTScalar& xw(int s) const { return x.at(size_t(s - 1)); }   // x_s, 1-based
    const QTScalar& uw(int s) const { return u.at(size_t(s)); }        // u_s, 0-based
    int width(int s) const { return widths.at(size_t(s - 1)); }
    int drop(int s) const { return drops.at(size_t(s - 1)); }
};

ShadowFrame shadow(const Partition& mu, Cell c);
ShadowFrame corner_data(const Partition& mu);  // = shadow(mu, (0,0))

/// Partitions obtained by removing one corner, ordered so that the corner of
/// element k is northwest of the corner of element k+1.
std::vector<Partition> predecessors(const Partition& mu);
/// The sublist of predecessors whose corner lies in the shadow of c.
std::vector<Partition> predecessors_in_shadow(const Partition& mu, Cell c);

/// Fixed-length 0/1 word indexing a subset of shadow corners.
struct EpsilonWord {
    std::vector<uint8_t> bits;

    EpsilonWord() = default;
    explicit EpsilonWord(std::vector<uint8_t> b) : bits(std::move(b)) {}
    static EpsilonWord parse(const std::string& text);     // "101"
    static std::vector<EpsilonWord> all_nonzero(int m);    // lexicographic order

    int size() const { return int(bits.size()); }
    int bit(int s) const { return bits.at(size_t(s - 1)); }  // 1-based
    int weight() const;
    bool any() const { return weight() > 0; }
    std::string str() const;
    auto operator<=>(const EpsilonWord&) const = default;
};

/// Vertical-rectangle slide construction: keep the rectangles of the shadow
/// of c selected by eps and compact them left with southwest corner at c.
/// With dual=true the horizontal-band variant is used (compact downward).
LatticeDiagram d_ij_diagram(const Partition& mu, Cell c, const EpsilonWord& eps,
                            bool dual = false);

/// 0/1 occupancy matrix of a lattice diagram restricted to its bounding box.
struct BinaryMatrix {
    int ncols = 0;
    std::vector<uint16_t> rows;  // bit j = column j occupied

    static BinaryMatrix of(const LatticeDiagram& d);
    auto operator<=>(const BinaryMatrix&) const = default;
    std::string str() const;
};

/// Lexicographically minimal matrix over independent row and column
/// permutations (empty rows/columns are dropped first).  Throws
/// resource_error above the brute-force cap (default 8x8).
BinaryMatrix gistol_canonical(const BinaryMatrix& mat, int cap = 8);
BinaryMatrix gistol_canonical(const LatticeDiagram& d, int cap = 8);
bool gistol_equivalent(const LatticeDiagram& a, const LatticeDiagram& b, int cap = 8);

enum class BhMode { recursive, direct };

/// Cell assignment: for each cell of mu the set of 0/1 words over
/// the corners of mu placed at that cell.  The two modes are conjecturally
/// (and here verifiably) equal.
std::map<Cell, std::set<EpsilonWord>> bh_assignment(const Partition& mu, BhMode mode);

}  // namespace qtatoms
