#include "qtatoms/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtatoms {

// ------------------------------------------------------------------ Cell ---

std::string Cell::str() const {
    std::ostringstream os;
    os << "(" << row << "," << col << ")";
    return os.str();
}

Cell Cell::parse(const std::string& text) {
    int r = 0, c = 0;
    char a = 0, b = 0, d = 0;
    std::istringstream is(text);
    is >> a >> r >> b >> c >> d;
    if (!is || a != '(' || b != ',' || d != ')') throw domain_error("Cell::parse: bad cell '" + text + "'");
    return Cell{r, c};
}

// -------------------------------------------------------------- Partition ---

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[size_t(c.row)];
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int j = 0; !parts_.empty() && j < parts_[0]; ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p > j) ++cnt;
        out.push_back(cnt);
    }
    return Partition(out);
}

Partition Partition::remove_corner(Cell c) const {
    if (!contains(c)) throw domain_error("remove_corner: cell outside partition");
    if (c.col != parts_[size_t(c.row)] - 1 || (c.row + 1 < length() && parts_[size_t(c.row + 1)] > c.col))
        throw domain_error("remove_corner: not a removable corner");
    std::vector<int> out = parts_;
    out[size_t(c.row)] -= 1;
    if (out[size_t(c.row)] == 0) out.erase(out.begin() + c.row);
    return Partition(out);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[size_t(i)]; ++j) out.push_back({i, j});
    return out;
}

std::vector<Cell> Partition::corners() const {
    std::vector<Cell> out;
    for (int i = length() - 1; i >= 0; --i) {
        bool corner = (i + 1 >= length()) || parts_[size_t(i + 1)] < parts_[size_t(i)];
        if (corner) out.push_back({i, parts_[size_t(i)] - 1});
    }
    return out;  // rows descending = northwest to southeast
}

bool Partition::dominates(const Partition& o) const {
    if (size() != o.size()) return false;
    int a = 0, b = 0;
    int k = std::max(length(), o.length());
    for (int i = 0; i < k; ++i) {
        a += part(i);
        b += o.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace((unsigned char)c); }), s.end());
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw domain_error("Partition::parse: expected [..] in '" + text + "'");
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

ArmLeg arm_leg(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("arm_leg: cell outside partition");
    ArmLeg r;
    r.arm = mu.part(c.row) - c.col - 1;
    r.coarm = c.col;
    r.coleg = c.row;
    int leg = 0;
    for (int i = c.row + 1; i < mu.length(); ++i)
        if (mu.part(i) > c.col) ++leg;
    r.leg = leg;
    return r;
}

// --------------------------------------------------------- LatticeDiagram ---

LatticeDiagram::LatticeDiagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (size_t i = 0; i + 1 < cells_.size(); ++i)
        if (cells_[i] == cells_[i + 1]) throw domain_error("LatticeDiagram: duplicate cell");
    for (auto& c : cells_)
        if (c.row < 0 || c.col < 0) throw domain_error("LatticeDiagram: negative coordinates");
}

LatticeDiagram LatticeDiagram::of_partition(const Partition& mu) {
    return LatticeDiagram(mu.cells());
}

LatticeDiagram LatticeDiagram::hole(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("LatticeDiagram::hole: cell outside partition");
    std::vector<Cell> cells;
    for (auto& s : mu.cells())
        if (!(s == c)) cells.push_back(s);
    return LatticeDiagram(cells);
}

bool LatticeDiagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::string LatticeDiagram::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cells_.size(); ++i) {
        if (i) os << ",";
        os << cells_[i].str();
    }
    os << "}";
    return os.str();
}

QTScalar t_weight(const LatticeDiagram& d) {
    long tq = 0, qq = 0;
    for (auto& c : d.cells()) {
        tq += c.row;
        qq += c.col;
    }
    return QTScalar::monomial(int(qq), int(tq));
}

QTScalar t_weight(const Partition& mu) { return t_weight(LatticeDiagram::of_partition(mu)); }

long n_stat(const Partition& mu) {
    long s = 0;
    for (int i = 0; i < mu.length(); ++i) s += long(i) * mu.part(i);
    return s;
}

long f_lambda(const Partition& lam) {
    if (lam.empty()) return 1;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), unsigned(lam.size()));
    mpz_class den = 1;
    for (auto& c : lam.cells()) den *= arm_leg(lam, c).hook();
    mpz_class f = num / den;
    return f.get_si();
}

// ------------------------------------------------------------ ShadowFrame ---

ShadowFrame shadow(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("shadow: cell outside partition");
    std::vector<int> tparts;
    for (int i = c.row; i < mu.length() && mu.part(i) > c.col; ++i)
        tparts.push_back(mu.part(i) - c.col);
    ShadowFrame f;
    f.origin = c;
    f.tau = Partition(tparts);
    auto cs = f.tau.corners();
    f.m = int(cs.size());
    f.x0 = QTScalar::monomial(-1, -1);
    std::vector<int> colegs, coarms;
    for (auto& cc : cs) {
        colegs.push_back(cc.row);
        coarms.push_back(cc.col);
        f.x.push_back(QTScalar::monomial(cc.col, cc.row));
    }
    // inner corner weights: u_0 = t^{l'_1}/q, u_s = t^{l'_{s+1}} q^{a'_s},
    // u_m = q^{a'_m}/t
    f.u.push_back(QTScalar::monomial(-1, colegs.front()));
    for (int s = 1; s < f.m; ++s)
        f.u.push_back(QTScalar::monomial(coarms[size_t(s - 1)], colegs[size_t(s)]));
    f.u.push_back(QTScalar::monomial(coarms.back(), -1));
    for (int s = 1; s <= f.m; ++s) {
        int prev_coarm = (s == 1) ? -1 : coarms[size_t(s - 2)];
        int next_coleg = (s == f.m) ? -1 : colegs[size_t(s)];
        f.widths.push_back(coarms[size_t(s - 1)] - prev_coarm);
        f.drops.push_back(colegs[size_t(s - 1)] - next_coleg);
    }
    // product identity x_0 x_1 ... x_m = u_0 u_1 ... u_m
    QTScalar px = f.x0, pu(1);
    for (auto& v : f.x) px *= v;
    for (auto& v : f.u) pu *= v;
    if (px != pu) throw domain_error("shadow: corner weight product identity failed");
    return f;
}

ShadowFrame corner_data(const Partition& mu) {
    if (mu.empty()) throw domain_error("corner_data: empty partition");
    return shadow(mu, Cell{0, 0});
}

std::vector<Partition> predecessors(const Partition& mu) {
    if (mu.empty()) throw domain_error("predecessors: empty partition");
    std::vector<Partition> out;
    for (auto& c : mu.corners()) out.push_back(mu.remove_corner(c));
    return out;
}

std::vector<Partition> predecessors_in_shadow(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw domain_error("predecessors_in_shadow: cell outside partition");
    std::vector<Partition> out;
    for (auto& corner : mu.corners())
        if (corner.row >= c.row && corner.col >= c.col) out.push_back(mu.remove_corner(corner));
    return out;
}

// ------------------------------------------------------------ EpsilonWord ---

EpsilonWord EpsilonWord::parse(const std::string& text) {
    std::vector<uint8_t> b;
    for (char c : text) {
        if (c == '0') b.push_back(0);
        else if (c == '1') b.push_back(1);
        else throw domain_error("EpsilonWord::parse: expected 0/1 word");
    }
    return EpsilonWord(std::move(b));
}

std::vector<EpsilonWord> EpsilonWord::all_nonzero(int m) {
    std::vector<EpsilonWord> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<uint8_t> b(static_cast<size_t>(m));
        for (int s = 0; s < m; ++s) b[size_t(s)] = (mask >> (m - 1 - s)) & 1u;
        out.emplace_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int EpsilonWord::weight() const {
    int w = 0;
    for (auto b : bits) w += b;
    return w;
}

std::string EpsilonWord::str() const {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

// ---------------------------------------------------------- d_ij_diagram ---

LatticeDiagram d_ij_diagram(const Partition& mu, Cell c, const EpsilonWord& eps, bool dual) {
    ShadowFrame f = shadow(mu, c);
    if (eps.size() != f.m)
        throw domain_error("d_ij_diagram: epsilon word length does not match corner count");
    auto cs = f.tau.corners();
    std::vector<Cell> cells;
    if (!dual) {
        // vertical rectangles of widths w_r, rectangle r spans rows up to the
        // r-th corner; kept rectangles slide left to start at column c.col
        int xoff = c.col;
        for (int r = 1; r <= f.m; ++r) {
            if (!eps.bit(r)) continue;
            int height = cs[size_t(r - 1)].row + 1;
            for (int w = 0; w < f.width(r); ++w)
                for (int i = 0; i < height; ++i) cells.push_back({c.row + i, xoff + w});
            xoff += f.width(r);
        }
    } else {
        // horizontal bands of heights v_r, band r spans columns up to the
        // r-th corner; kept bands drop down to start at row c.row
        int yoff = c.row;
        for (int r = f.m; r >= 1; --r) {
            if (!eps.bit(r)) continue;
            int width = cs[size_t(r - 1)].col + 1;
            for (int h = 0; h < f.drop(r); ++h)
                for (int j = 0; j < width; ++j) cells.push_back({yoff + h, c.col + j});
            yoff += f.drop(r);
        }
    }
    return LatticeDiagram(std::move(cells));
}

// ----------------------------------------------------------- BinaryMatrix ---

BinaryMatrix BinaryMatrix::of(const LatticeDiagram& d) {
    BinaryMatrix m;
    if (d.size() == 0) return m;
    int rmin = d.cells().front().row, rmax = rmin;
    int cmin = d.cells().front().col, cmax = cmin;
    for (auto& c : d.cells()) {
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
        cmin = std::min(cmin, c.col);
        cmax = std::max(cmax, c.col);
    }
    m.ncols = cmax - cmin + 1;
    m.rows.assign(size_t(rmax - rmin + 1), 0);
    for (auto& c : d.cells()) m.rows[size_t(c.row - rmin)] |= uint16_t(1u << (c.col - cmin));
    return m;
}

std::string BinaryMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "|";
        for (int j = 0; j < ncols; ++j) os << ((rows[i] >> j) & 1u);
    }
    return os.str();
}

BinaryMatrix gistol_canonical(const BinaryMatrix& mat, int cap) {
    // drop empty rows and columns: both are permutable to the boundary
    std::vector<uint16_t> rows;
    for (auto r : mat.rows)
        if (r) rows.push_back(r);
    uint16_t used = 0;
    for (auto r : rows) used |= r;
    std::vector<int> cols;
    for (int j = 0; j < mat.ncols; ++j)
        if ((used >> j) & 1u) cols.push_back(j);
    int nc = int(cols.size());
    if (nc > cap || int(rows.size()) > cap)
        throw resource_error("gistol_canonical: matrix exceeds brute-force cap");
    std::vector<uint16_t> compact(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < nc; ++j)
            if ((rows[i] >> cols[size_t(j)]) & 1u) compact[i] |= uint16_t(1u << j);

    std::vector<int> perm(static_cast<size_t>(nc));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint16_t> best;
    do {
        std::vector<uint16_t> cur(compact.size(), 0);
        for (size_t i = 0; i < compact.size(); ++i)
            for (int j = 0; j < nc; ++j)
                if ((compact[i] >> perm[size_t(j)]) & 1u) cur[i] |= uint16_t(1u << j);
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));

    BinaryMatrix out;
    out.ncols = nc;
    out.rows = best;
    return out;
}

BinaryMatrix gistol_canonical(const LatticeDiagram& d, int cap) {
    return gistol_canonical(BinaryMatrix::of(d), cap);
}

bool gistol_equivalent(const LatticeDiagram& a, const LatticeDiagram& b, int cap) {
    return gistol_canonical(a, cap) == gistol_canonical(b, cap);
}

// ---------------------------------------------------------- bh_assignment ---

namespace {

// widths over the full corner list of mu: w_1 = a'_1 + 1, w_s = a'_s - a'_{s-1}
std::vector<int> bh_widths(const Partition& mu) {
    auto cs = mu.corners();
    std::vector<int> w;
    int prev = -1;
    for (auto& c : cs) {
        w.push_back(c.col - prev);
        prev = c.col;
    }
    return w;
}

}  // namespace

std::map<Cell, std::set<EpsilonWord>> bh_assignment(const Partition& mu, BhMode mode) {
    if (mu.empty()) throw domain_error("bh_assignment: empty partition");
    auto cs = mu.corners();
    int d = int(cs.size());
    auto widths = bh_widths(mu);
    auto all = EpsilonWord::all_nonzero(d);
    std::map<Cell, std::set<EpsilonWord>> out;

    if (mode == BhMode::direct) {
        for (auto& cell : mu.cells()) {
            // r = number of corners weakly above this row
            int r = 0;
            for (auto& c : cs)
                if (c.row >= cell.row) ++r;
            std::set<EpsilonWord> sel;
            for (auto& e : all) {
                int w = 0;
                for (int s = 1; s <= r; ++s) w += e.bit(s) * widths[size_t(s - 1)];
                if (cell.col < w) sel.insert(e);
            }
            out[cell] = std::move(sel);
        }
        return out;
    }

    // recursive mode: rows from the top down; external columns follow the
    // convention "all nonzero words left of the diagram, empty to the right"
    std::set<EpsilonWord> full(all.begin(), all.end());
    auto row_sets = std::vector<std::map<int, std::set<EpsilonWord>>>(size_t(mu.length()));
    auto get = [&](int row, int col) -> std::set<EpsilonWord> {
        if (col < 0) return full;
        if (row >= mu.length() || col >= mu.part(row)) return {};
        return row_sets[size_t(row)].at(col);
    };
    int top = mu.length() - 1;
    for (int j = 0; j < mu.part(top); ++j) {
        std::set<EpsilonWord> sel;
        for (auto& e : all)
            if (e.bit(1)) sel.insert(e);
        row_sets[size_t(top)][j] = sel;
    }
    for (int i = top - 1; i >= 0; --i) {
        bool has_corner = mu.part(i) > mu.part(i + 1);
        int w = mu.part(i) - mu.part(i + 1);
        int r = 0;
        if (has_corner) {
            for (auto& c : cs)
                if (c.row >= i) ++r;  // the corner ending row i is the r-th
        }
        for (int j = 0; j < mu.part(i); ++j) {
            std::set<EpsilonWord> sel = get(i + 1, j);
            if (has_corner) {
                auto left = get(i + 1, j - w);
                for (auto& e : left)
                    if (e.bit(r)) sel.insert(e);
            }
            row_sets[size_t(i)][j] = std::move(sel);
        }
    }
    for (auto& cell : mu.cells()) out[cell] = row_sets[size_t(cell.row)].at(cell.col);
    return out;
}

}  // namespace qtatoms
