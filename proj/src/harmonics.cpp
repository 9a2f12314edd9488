#include "qtatoms/harmonics.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qtatoms {

// ----------------------------------------------------------- EchelonBasis ---

bool EchelonBasis::insert(MPoly v) {
    // fully reduce against existing rows so rows stay mutually reduced
    bool changed = true;
    while (changed && !v.is_zero()) {
        changed = false;
        for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
            auto f = lead_.find(it->first);
            if (f != lead_.end()) {
                v -= rows_[size_t(f->second)] * it->second;
                changed = true;
                break;
            }
        }
    }
    if (v.is_zero()) return false;
    // make monic
    mpq_class lc = v.leading_coeff();
    v = v * (mpq_class(1) / lc);
    Mono lead = v.leading_monomial();
    // clear the new leading monomial from existing rows
    for (auto& row : rows_) {
        mpq_class c = row.coeff(lead);
        if (c != 0) row -= v * c;
    }
    rows_.push_back(std::move(v));
    int idx = int(rows_.size()) - 1;
    lead_[lead] = idx;
    return true;
}

std::optional<std::vector<mpq_class>> EchelonBasis::coords(const MPoly& v) const {
    // rows are mutually reduced: coordinates read off at leading monomials
    std::vector<mpq_class> c(rows_.size(), 0);
    MPoly rem = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        mpq_class ci = rem.coeff(rows_[i].leading_monomial());
        if (ci != 0) {
            c[i] = ci;
            rem -= rows_[i] * ci;
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return c;
}

// ---------------------------------------------------------- BigradedBasis ---

bool BigradedBasis::insert(const MPoly& v) {
    if (v.is_zero()) return false;
    if (!v.is_bihomogeneous()) throw domain_error("BigradedBasis::insert: not bihomogeneous");
    if (pairs_ == 0) pairs_ = v.pairs();
    if (pairs_ != v.pairs()) throw domain_error("BigradedBasis::insert: size mismatch");
    auto bd = v.bidegree();
    return comp_[bd].insert(v);
}

int BigradedBasis::dim() const {
    int d = 0;
    for (auto& [bd, e] : comp_) d += e.dim();
    return d;
}

int BigradedBasis::dim_at(int r, int s) const {
    auto it = comp_.find({r, s});
    return it == comp_.end() ? 0 : it->second.dim();
}

const EchelonBasis* BigradedBasis::component(int r, int s) const {
    auto it = comp_.find({r, s});
    return it == comp_.end() ? nullptr : &it->second;
}

bool BigradedBasis::contains(const MPoly& v) const {
    if (v.is_zero()) return true;
    if (!v.is_bihomogeneous()) throw domain_error("BigradedBasis::contains: not bihomogeneous");
    auto it = comp_.find(v.bidegree());
    if (it == comp_.end()) return false;
    return it->second.contains(v);
}

bool BigradedBasis::contains_all(const BigradedBasis& sub) const {
    for (auto& [bd, e] : sub.components())
        for (auto& row : e.rows())
            if (!contains(row)) return false;
    return true;
}

std::string BigradedBasis::serialize() const {
    std::ostringstream os;
    os << "bigraded pairs " << pairs_ << " components " << comp_.size() << "\n";
    for (auto& [bd, e] : comp_) {
        os << "bidegree " << bd.first << " " << bd.second << " dim " << e.dim() << "\n";
        for (auto& row : e.rows()) os << row.str() << "\n";
    }
    return os.str();
}

BigradedBasis BigradedBasis::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string kw;
    int pairs = 0;
    size_t ncomp = 0;
    std::string kw2;
    is >> kw >> kw2 >> pairs;
    if (kw != "bigraded" || kw2 != "pairs") throw domain_error("BigradedBasis: bad header");
    is >> kw >> ncomp;
    if (kw != "components") throw domain_error("BigradedBasis: bad header");
    std::string line;
    std::getline(is, line);
    BigradedBasis b(pairs);
    for (size_t i = 0; i < ncomp; ++i) {
        if (!std::getline(is, line)) throw domain_error("BigradedBasis: truncated");
        std::istringstream hl(line);
        int r = 0, s = 0, dim = 0;
        hl >> kw >> r >> s >> kw2 >> dim;
        if (kw != "bidegree" || kw2 != "dim") throw domain_error("BigradedBasis: bad component header");
        for (int k = 0; k < dim; ++k) {
            if (!std::getline(is, line)) throw domain_error("BigradedBasis: truncated");
            b.insert(MPoly::parse(pairs, line));
        }
    }
    return b;
}

// -------------------------------------------------------- derivative span ---

BigradedBasis derivative_span(const MPoly& p) {
    if (p.is_zero()) throw domain_error("derivative_span: zero polynomial");
    if (!p.is_bihomogeneous()) throw domain_error("derivative_span: not bihomogeneous");
    BigradedBasis b(p.pairs());
    std::vector<MPoly> queue{p};
    b.insert(p);
    while (!queue.empty()) {
        MPoly cur = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < p.pairs(); ++i) {
            for (int axis = 0; axis < 2; ++axis) {
                MPoly d = axis == 0 ? cur.diff_x(i) : cur.diff_y(i);
                if (d.is_zero()) continue;
                if (b.insert(d)) queue.push_back(std::move(d));
            }
        }
    }
    return b;
}

QTPoly hilbert(const BigradedBasis& b) {
    QTPoly h;
    for (auto& [bd, e] : b.components()) h.add_term(bd.second, bd.first, e.dim());
    return h;
}

// --------------------------------------------------------------- frobenius ---

std::vector<int> cycle_type_representative(const Partition& rho) {
    std::vector<int> sigma(static_cast<size_t>(rho.size()));
    int start = 0;
    for (int part : rho.parts()) {
        for (int k = 0; k < part; ++k) sigma[size_t(start + k)] = start + (k + 1) % part;
        start += part;
    }
    return sigma;
}

SymFun FrobSeries::characteristic() const {
    SymFun out(n, SFBasis::s);
    for (auto& [bd, mults] : comp) {
        QTScalar w = QTScalar::monomial(bd.second, bd.first);
        for (auto& [lam, m] : mults) out.add(lam, w * QTScalar(m));
    }
    return out;
}

QTPoly FrobSeries::hilbert_from_multiplicities() const {
    QTPoly h;
    for (auto& [bd, mults] : comp) {
        long d = 0;
        for (auto& [lam, m] : mults) d += m * f_lambda(lam);
        if (d) h.add_term(bd.second, bd.first, d);
    }
    return h;
}

FrobSeries frobenius(const BigradedBasis& b) {
    int n = b.pairs();
    FrobSeries F;
    F.n = n;
    const auto& types = partitions_of(n);
    // invariance check with adjacent transpositions
    for (auto& [bd, e] : b.components()) {
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> sigma(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) sigma[size_t(k)] = k;
            std::swap(sigma[size_t(i)], sigma[size_t(i + 1)]);
            for (auto& row : e.rows())
                if (!e.contains(row.diagonal_act(sigma)))
                    throw domain_error("frobenius: subspace is not invariant under the diagonal action");
        }
    }
    for (auto& [bd, e] : b.components()) {
        if (e.dim() == 0) continue;
        // character of the component: trace per cycle type
        std::vector<mpq_class> chi_vals;
        for (auto& rho : types) {
            auto sigma = cycle_type_representative(rho);
            mpq_class tr = 0;
            for (auto& row : e.rows()) tr += row.diagonal_act(sigma).coeff(row.leading_monomial());
            chi_vals.push_back(tr);
        }
        // multiplicity of chi^lambda = <chi, chi^lambda>
        std::map<Partition, long> mults;
        for (auto& lam : types) {
            mpq_class acc = 0;
            for (size_t r = 0; r < types.size(); ++r)
                acc += chi_vals[r] * sym_character(lam, types[r]) / mpq_class(z_of(types[r]));
            if (acc == 0) continue;
            if (acc.get_den() != 1 || acc < 0)
                throw domain_error("frobenius: non-integral or negative multiplicity (internal error)");
            mults[lam] = long(acc.get_num().get_si());
        }
        if (!mults.empty()) F.comp[bd] = std::move(mults);
    }
    return F;
}

// ------------------------------------------------------- subspace algebra ---

BigradedBasis subspace_sum(const BigradedBasis& a, const BigradedBasis& b) {
    BigradedBasis r = a;
    for (auto& [bd, e] : b.components())
        for (auto& row : e.rows()) r.insert(row);
    return r;
}

namespace {

// nullspace of an m x k rational matrix (columns = unknowns), as basis vectors
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> a, size_t k) {
    size_t m = a.size();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(k, false);
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[rank], a[piv]);
        mpq_class d = a[rank][col];
        for (size_t j = 0; j < k; ++j) a[rank][j] /= d;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (size_t j = 0; j < k; ++j) a[r][j] -= f * a[rank][j];
        }
        pivot_col_of_row.push_back(int(col));
        is_pivot[col] = true;
        ++rank;
    }
    std::vector<std::vector<mpq_class>> basis;
    for (size_t freecol = 0; freecol < k; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<mpq_class> v(k, 0);
        v[freecol] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[size_t(pivot_col_of_row[r])] = -a[r][freecol];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

BigradedBasis subspace_intersect(const BigradedBasis& a, const BigradedBasis& b) {
    if (a.pairs() != b.pairs()) throw domain_error("subspace_intersect: size mismatch");
    BigradedBasis r(a.pairs());
    for (auto& [bd, ea] : a.components()) {
        const EchelonBasis* eb = b.component(bd.first, bd.second);
        if (!eb || eb->dim() == 0 || ea.dim() == 0) continue;
        // solve sum_i x_i a_i = sum_j y_j b_j: nullspace of [A | -B] in
        // monomial coordinates
        std::map<Mono, size_t, MonoLess> monos;
        auto note = [&](const MPoly& p) {
            for (auto& [mn, c] : p.terms())
                if (!monos.count(mn)) monos.emplace(mn, monos.size());
        };
        for (auto& row : ea.rows()) note(row);
        for (auto& row : eb->rows()) note(row);
        size_t da = size_t(ea.dim()), db = size_t(eb->dim());
        std::vector<std::vector<mpq_class>> mat(monos.size(), std::vector<mpq_class>(da + db, 0));
        for (size_t i = 0; i < da; ++i)
            for (auto& [mn, c] : ea.rows()[i].terms()) mat[monos[mn]][i] = c;
        for (size_t j = 0; j < db; ++j)
            for (auto& [mn, c] : eb->rows()[j].terms()) mat[monos[mn]][da + j] = -c;
        for (auto& v : nullspace(std::move(mat), da + db)) {
            MPoly combo(a.pairs());
            for (size_t i = 0; i < da; ++i)
                if (v[i] != 0) combo += ea.rows()[i] * v[i];
            if (!combo.is_zero()) r.insert(combo);
        }
    }
    return r;
}

BigradedBasis perp_within(const BigradedBasis& ambient, const BigradedBasis& sub) {
    if (sub.pairs() != 0 && ambient.pairs() != sub.pairs() && sub.dim() > 0)
        throw domain_error("perp_within: size mismatch");
    BigradedBasis r(ambient.pairs());
    for (auto& [bd, ea] : ambient.components()) {
        const EchelonBasis* es = sub.component(bd.first, bd.second);
        if (!es || es->dim() == 0) {
            for (auto& row : ea.rows()) r.insert(row);
            continue;
        }
        size_t da = size_t(ea.dim());
        std::vector<std::vector<mpq_class>> mat(size_t(es->dim()), std::vector<mpq_class>(da, 0));
        for (size_t j = 0; j < size_t(es->dim()); ++j)
            for (size_t i = 0; i < da; ++i) mat[j][i] = apolar(es->rows()[j], ea.rows()[i]);
        for (auto& v : nullspace(std::move(mat), da)) {
            MPoly combo(ambient.pairs());
            for (size_t i = 0; i < da; ++i)
                if (v[i] != 0) combo += ea.rows()[i] * v[i];
            if (!combo.is_zero()) r.insert(combo);
        }
    }
    return r;
}

BigradedBasis flip_image(const MPoly& delta, const BigradedBasis& sub) {
    BigradedBasis r(delta.pairs());
    for (auto& [bd, e] : sub.components())
        for (auto& row : e.rows()) {
            MPoly img = apply_operator(row, delta);
            if (!img.is_zero()) r.insert(img);
        }
    return r;
}

std::optional<MPoly> flip_preimage(const MPoly& delta, const BigradedBasis& span,
                                   const MPoly& v) {
    if (v.is_zero()) return MPoly(delta.pairs());
    auto [r0, s0] = delta.bidegree();
    auto [r, s] = v.bidegree();
    const EchelonBasis* e = span.component(r0 - r, s0 - s);
    if (!e || e->dim() == 0) return std::nullopt;
    // express v in the images of the complementary component
    EchelonBasis images;
    std::vector<MPoly> img_rows;
    for (auto& row : e->rows()) img_rows.push_back(apply_operator(row, delta));
    // solve directly with a rational system in monomial coordinates
    std::map<Mono, size_t, MonoLess> monos;
    auto note = [&](const MPoly& p) {
        for (auto& [mn, c] : p.terms())
            if (!monos.count(mn)) monos.emplace(mn, monos.size());
    };
    for (auto& p : img_rows) note(p);
    note(v);
    size_t k = img_rows.size();
    std::vector<std::vector<mpq_class>> mat(monos.size(), std::vector<mpq_class>(k + 1, 0));
    for (size_t i = 0; i < k; ++i)
        for (auto& [mn, c] : img_rows[i].terms()) mat[monos[mn]][i] = c;
    for (auto& [mn, c] : v.terms()) mat[monos[mn]][k] = c;
    // gaussian solve mat[:, :k] x = mat[:, k]
    size_t m = mat.size(), rank = 0;
    std::vector<int> pivots;
    for (size_t col = 0; col < k && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && mat[piv][col] == 0) ++piv;
        if (piv == m) {
            pivots.push_back(-1);
            continue;
        }
        std::swap(mat[rank], mat[piv]);
        mpq_class d = mat[rank][col];
        for (size_t j = 0; j <= k; ++j) mat[rank][j] /= d;
        for (size_t rr = 0; rr < m; ++rr) {
            if (rr == rank || mat[rr][col] == 0) continue;
            mpq_class f = mat[rr][col];
            for (size_t j = 0; j <= k; ++j) mat[rr][j] -= f * mat[rank][j];
        }
        pivots.push_back(int(rank));
        ++rank;
    }
    for (size_t rr = rank; rr < m; ++rr)
        if (mat[rr][k] != 0) return std::nullopt;
    MPoly out(delta.pairs());
    for (size_t col = 0; col < k; ++col) {
        if (pivots[col] < 0) continue;
        mpq_class c = mat[size_t(pivots[col])][k];
        if (c != 0) out += e->rows()[col] * c;
    }
    return out;
}

BigradedBasis polarization_kernel(const BigradedBasis& b, bool y_axis) {
    BigradedBasis r(b.pairs());
    for (auto& [bd, e] : b.components()) {
        if (e.dim() == 0) continue;
        size_t k = size_t(e.dim());
        std::vector<MPoly> images;
        for (auto& row : e.rows()) images.push_back(polarize(row, y_axis ? 0 : 1, y_axis ? 1 : 0));
        std::map<Mono, size_t, MonoLess> monos;
        for (auto& p : images)
            for (auto& [mn, c] : p.terms())
                if (!monos.count(mn)) monos.emplace(mn, monos.size());
        std::vector<std::vector<mpq_class>> mat(std::max<size_t>(monos.size(), 1),
                                                std::vector<mpq_class>(k, 0));
        for (size_t i = 0; i < k; ++i)
            for (auto& [mn, c] : images[i].terms()) mat[monos[mn]][i] = c;
        for (auto& v : nullspace(std::move(mat), k)) {
            MPoly combo(b.pairs());
            for (size_t i = 0; i < k; ++i)
                if (v[i] != 0) combo += e.rows()[i] * v[i];
            if (!combo.is_zero()) r.insert(combo);
        }
    }
    return r;
}

// ------------------------------------------------------------ module cache ---

namespace {

std::mutex module_mutex;
std::map<std::pair<Partition, std::optional<Cell>>, BigradedBasis>& module_cache() {
    static std::map<std::pair<Partition, std::optional<Cell>>, BigradedBasis> c;
    return c;
}

}  // namespace

const BigradedBasis& hole_module(const Partition& mu, Cell c) {
    std::lock_guard<std::mutex> lock(module_mutex);
    auto key = std::make_pair(mu, std::optional<Cell>(c));
    auto it = module_cache().find(key);
    if (it != module_cache().end()) return it->second;
    MPoly delta = lattice_determinant(LatticeDiagram::hole(mu, c));
    return module_cache().emplace(key, derivative_span(delta)).first->second;
}

const BigradedBasis& partition_module(const Partition& mu) {
    std::lock_guard<std::mutex> lock(module_mutex);
    auto key = std::make_pair(mu, std::optional<Cell>());
    auto it = module_cache().find(key);
    if (it != module_cache().end()) return it->second;
    MPoly delta = lattice_determinant(LatticeDiagram::of_partition(mu));
    return module_cache().emplace(key, derivative_span(delta)).first->second;
}

void clear_module_cache() {
    std::lock_guard<std::mutex> lock(module_mutex);
    module_cache().clear();
}

// ---------------------------------------------------------------- m_s_t ---

BigradedBasis m_s_t(const Partition& mu, const std::vector<Partition>& S,
                    const std::vector<int>& T_indices) {
    if (T_indices.empty()) throw domain_error("m_s_t: T must be nonempty");
    auto preds = predecessors(mu);
    for (auto& a : S)
        if (std::find(preds.begin(), preds.end(), a) == preds.end())
            throw domain_error("m_s_t: S must consist of predecessors of mu");
    std::vector<bool> in_T(S.size(), false);
    for (int i : T_indices) {
        if (i < 0 || i >= int(S.size())) throw domain_error("m_s_t: bad T index");
        in_T[size_t(i)] = true;
    }
    // I = intersection of the T-modules
    BigradedBasis I = partition_module(S[size_t(T_indices[0])]);
    for (size_t i = 1; i < T_indices.size(); ++i)
        I = subspace_intersect(I, partition_module(S[size_t(T_indices[size_t(i)])]));
    // J = (sum of the S-T modules) cap I
    BigradedBasis sum(I.pairs());
    bool any = false;
    for (size_t i = 0; i < S.size(); ++i) {
        if (in_T[i]) continue;
        sum = any ? subspace_sum(sum, partition_module(S[i])) : partition_module(S[i]);
        any = true;
    }
    if (!any) return I;
    BigradedBasis J = subspace_intersect(sum, I);
    return perp_within(I, J);
}

// -------------------------------------------------------------- alternants ---

BigradedBasis alternant_basis(const BigradedBasis& b) {
    int n = b.pairs();
    BigradedBasis r(n);
    for (auto& [bd, e] : b.components()) {
        if (e.dim() == 0) continue;
        size_t k = size_t(e.dim());
        // v alternates iff (sigma + 1) v = 0 for all adjacent transpositions;
        // stack the matrices (M_sigma + I) in row coordinates
        std::vector<std::vector<mpq_class>> cons;
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> sigma(static_cast<size_t>(n));
            for (int s = 0; s < n; ++s) sigma[size_t(s)] = s;
            std::swap(sigma[size_t(i)], sigma[size_t(i + 1)]);
            std::vector<std::vector<mpq_class>> cols;
            for (size_t j = 0; j < k; ++j) {
                MPoly w = e.rows()[j].diagonal_act(sigma) + e.rows()[j];
                auto cs = e.coords(w);
                if (!cs) throw domain_error("alternant_basis: subspace not invariant");
                cols.push_back(std::move(*cs));
            }
            for (size_t row = 0; row < k; ++row) {
                std::vector<mpq_class> constraint(k, 0);
                for (size_t j = 0; j < k; ++j) constraint[j] = cols[j][row];
                cons.push_back(std::move(constraint));
            }
        }
        if (n <= 1) {
            for (auto& row : e.rows()) r.insert(row);
            continue;
        }
        for (auto& v : nullspace(std::move(cons), k)) {
            MPoly combo(n);
            for (size_t i = 0; i < k; ++i)
                if (v[i] != 0) combo += e.rows()[i] * v[i];
            if (!combo.is_zero()) r.insert(combo);
        }
    }
    return r;
}

// ---------------------------------------------------------- kernel + atom ---

KernelAtom kernel_and_atom(const Partition& mu, Cell c, bool y_axis) {
    if (!mu.contains(c)) throw domain_error("kernel_and_atom: cell outside partition");
    const BigradedBasis& M = hole_module(mu, c);
    KernelAtom out;
    out.kernel = polarization_kernel(M, y_axis);
    FrobSeries K = frobenius(out.kernel);
    // nested kernel one step along the other axis: for the x-kernel the next
    // cell is (i, j+1); for the y-kernel it is (i+1, j)
    Cell next = y_axis ? Cell{c.row + 1, c.col} : Cell{c.row, c.col + 1};
    SymFun atom = K.characteristic();
    if (mu.contains(next)) {
        const BigradedBasis& M2 = hole_module(mu, next);
        FrobSeries K2 = frobenius(polarization_kernel(M2, y_axis));
        atom = atom - K2.characteristic();
    }
    out.atom = atom;
    return out;
}

}  // namespace qtatoms
